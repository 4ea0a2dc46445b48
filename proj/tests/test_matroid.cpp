/*
 *   Copyright 2026 The pastures authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "pastures/errors.hpp"
#include "pastures/expr.hpp"
#include "pastures/lifts.hpp"
#include "pastures/matroid.hpp"

#include <gtest/gtest.h>

#include <array>
#include <functional>
#include <numeric>
#include <random>
#include <set>

using namespace pastures;

namespace {

PasturePtr P(const std::string& s) { return evaluate_pasture(s); }

/// Orbits of ordered 4-tuples of distinct points of P^1(F_p) under PGL_2(F_p),
/// counted by brute force with union-find.
std::size_t pgl2_orbits(std::int64_t p) {
    using Pt = std::array<std::int64_t, 2>;
    std::vector<Pt> pts;
    for (std::int64_t x = 0; x < p; ++x) pts.push_back({x, 1});
    pts.push_back({1, 0});
    auto normal = [&](Pt v) -> std::size_t {
        v[0] = ((v[0] % p) + p) % p;
        v[1] = ((v[1] % p) + p) % p;
        if (v[1] == 0) return pts.size() - 1;
        std::int64_t inv = 1;
        for (std::int64_t k = 0; k < p - 2; ++k) inv = inv * v[1] % p;
        return static_cast<std::size_t>(v[0] * inv % p);
    };
    std::vector<std::array<std::size_t, 4>> tuples;
    const std::size_t n = pts.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d)
                    if (a != b && a != c && a != d && b != c && b != d && c != d) tuples.push_back({a, b, c, d});
    auto index = [&](const std::array<std::size_t, 4>& t) {
        return static_cast<std::size_t>(std::lower_bound(tuples.begin(), tuples.end(), t) - tuples.begin());
    };
    std::vector<std::size_t> parent(tuples.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (std::int64_t m00 = 0; m00 < p; ++m00)
        for (std::int64_t m01 = 0; m01 < p; ++m01)
            for (std::int64_t m10 = 0; m10 < p; ++m10)
                for (std::int64_t m11 = 0; m11 < p; ++m11) {
                    if ((m00 * m11 - m01 * m10) % p == 0) continue;
                    for (std::size_t i = 0; i < tuples.size(); ++i) {
                        std::array<std::size_t, 4> img;
                        for (int k = 0; k < 4; ++k) {
                            const Pt& v = pts[tuples[i][static_cast<std::size_t>(k)]];
                            img[static_cast<std::size_t>(k)] = normal({m00 * v[0] + m01 * v[1], m10 * v[0] + m11 * v[1]});
                        }
                        parent[find(i)] = find(index(img));
                    }
                }
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < tuples.size(); ++i) roots.insert(find(i));
    return roots.size();
}

}  // namespace

TEST(Matroid, Construction) {
    EXPECT_EQ(Matroid::uniform(2, 4).bases().size(), 6u);
    EXPECT_EQ(Matroid::k4().bases().size(), 16u);
    EXPECT_THROW(Matroid::from_bases(4, 2, {{1, 2}, {3, 4}}), ExchangeAxiomViolation);
    EXPECT_THROW(Matroid::from_bases(4, 2, {{1, 5}}), InvalidMatroid);
    EXPECT_THROW(Matroid::from_bases(4, 2, {{1, 2, 3}}), InvalidMatroid);
    EXPECT_THROW(Matroid::from_bases(4, 2, {}), InvalidMatroid);
    Matroid m = matroid_from_json(R"({"n": 4, "rank": 2, "bases": [[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]})");
    EXPECT_EQ(m.bases(), Matroid::uniform(2, 4).bases());
    EXPECT_THROW(matroid_from_json("{"), InvalidMatroid);
}

TEST(Representations, U24AgreesWithPgl2Orbits) {
    for (std::int64_t p : {3, 5, 7}) {
        std::size_t classes = representation_classes(Matroid::uniform(2, 4), *P("F" + std::to_string(p))).size();
        EXPECT_EQ(classes, pgl2_orbits(p)) << p;
        EXPECT_EQ(classes, static_cast<std::size_t>(p - 2));
    }
}

TEST(Representations, ForestAndClosureRoutesAgree) {
    const std::vector<std::pair<Matroid, std::string>> cases = {
        {Matroid::uniform(2, 4), "F4"}, {Matroid::uniform(2, 4), "F7"}, {Matroid::uniform(2, 5), "F5"},
        {Matroid::uniform(3, 5), "F4"}, {Matroid::k4(), "F3"},          {Matroid::uniform(2, 4), "S"},
        {Matroid::uniform(2, 4), "H"},  {Matroid::k4(), "K"},
    };
    for (const auto& [m, name] : cases) {
        auto p = P(name);
        auto classes = representation_classes(m, *p);
        auto orbits = representation_orbits_by_closure(m, *p);
        EXPECT_EQ(classes.size(), orbits.size()) << name;
        std::set<Representation> reps(classes.begin(), classes.end());
        for (const auto& orbit : orbits) {
            std::set<Representation> normal;
            for (const auto& d : orbit) normal.insert(normalize(m, *p, d));
            EXPECT_EQ(normal.size(), 1u) << name;
            EXPECT_TRUE(reps.count(*normal.begin())) << name;
        }
    }
}

TEST(Representations, ClassesSatisfyPlucker) {
    Matroid m = Matroid::uniform(2, 5);
    auto p = P("F7");
    auto classes = representation_classes(m, *p);
    for (const auto& d : classes) EXPECT_FALSE(plucker_check(m, *p, d).has_value());
    Representation ones{std::vector<GroupElement>(m.bases().size(), p->one())};
    EXPECT_TRUE(plucker_check(m, *p, ones).has_value());
}

TEST(Representations, NormalFormIsRescalingInvariant) {
    std::mt19937 rng(23);
    Matroid m = Matroid::uniform(2, 5);
    auto p = P("F11");
    const auto els = p->units().elements();
    std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
    for (const auto& d : representation_classes(m, *p)) {
        for (int i = 0; i < 5; ++i) {
            std::vector<GroupElement> scale;
            for (int e = 0; e < m.n(); ++e) scale.push_back(els[pick(rng)]);
            Representation r = rescale(m, *p, d, els[pick(rng)], scale);
            EXPECT_FALSE(plucker_check(m, *p, r).has_value());
            EXPECT_EQ(normalize(m, *p, r), d);
        }
    }
}

TEST(Representations, ThreadsDoNotChangeResult) {
    RepOptions one, four;
    four.threads = 4;
    auto p = P("F13");
    EXPECT_EQ(representation_classes(Matroid::uniform(2, 5), *p, one),
              representation_classes(Matroid::uniform(2, 5), *p, four));
}

TEST(Representations, Guards) {
    RepOptions tiny;
    tiny.max_candidates = 3;
    EXPECT_THROW(representation_classes(Matroid::uniform(2, 5), *P("F13"), tiny), SearchSpaceExceeded);
    EXPECT_THROW(representation_classes(Matroid::uniform(2, 4), *P("U")), InfinitePasture);
}

TEST(Representations, KnownCounts) {
    EXPECT_EQ(representation_classes(Matroid::k4(), *P("F2")).size(), 1u);
    EXPECT_EQ(representation_classes(Matroid::k4(), *P("F5")).size(), 1u);
    EXPECT_EQ(representation_classes(Matroid::uniform(2, 4), *P("F2")).size(), 0u);
    EXPECT_EQ(representation_classes(Matroid::uniform(2, 4), *P("F8")).size(), 6u);
}

TEST(LiftBijection, HoldsForTernaryLiftAndFailsForBinary) {
    Matroid m = Matroid::uniform(2, 4);
    EXPECT_TRUE(lift_bijection_check(m, ternary_lift(P("F4"))).ok);
    EXPECT_TRUE(lift_bijection_check(m, wlum_lift(P("F4"))).ok);
    EXPECT_FALSE(lift_bijection_check(m, binary_lift(P("F4"))).ok);
}
