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
#include "pastures/morphism.hpp"

#include <gtest/gtest.h>

#include <array>
#include <functional>

using namespace pastures;

namespace {

PasturePtr P(const std::string& s) { return evaluate_pasture(s); }

/// Brute-force count: every unit map from generator images, checked on every
/// triple of units rather than on orbit representatives.
std::size_t brute_hom_count(const PasturePtr& p, const PasturePtr& q) {
    const AbelianGroup& g = p->units();
    const AbelianGroup& h = q->units();
    const auto targets = h.elements();
    const auto source = g.elements();
    std::vector<GroupElement> cur(g.rank());
    std::size_t count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == g.rank()) {
            auto img = [&](const GroupElement& x) { return h.evaluate(cur, x.coords); };
            for (std::size_t k = 0; k < g.rank(); ++k)
                if (!h.is_identity(h.pow(cur[k], g.generator_order(k)))) return;
            if (!(img(p->epsilon()) == q->epsilon())) return;
            for (const auto& a : source)
                for (const auto& b : source)
                    for (const auto& c : source)
                        if (p->null_units(a, b, c) && !q->null_units(img(a), img(b), img(c))) return;
            ++count;
            return;
        }
        for (const auto& t : targets) {
            cur[i] = t;
            rec(i + 1);
        }
    };
    rec(0);
    return count;
}

}  // namespace

TEST(HomSet, MatchesBruteForceOnFinitePastures) {
    const std::vector<std::string> names = {"F2", "F3", "F4", "F5", "F7", "S", "K", "W", "H", "F1pm"};
    for (const auto& a : names)
        for (const auto& b : names) {
            auto p = P(a), q = P(b);
            EXPECT_EQ(hom_set(p, q).size(), brute_hom_count(p, q)) << a << " -> " << b;
        }
}

TEST(HomSet, PresentedSourcesCountSolutions) {
    // Morphisms out of a presentation are the solutions of its relations.
    for (std::int64_t q : {3, 4, 5, 7, 8, 9, 11, 13}) {
        auto f = P("F" + std::to_string(q));
        EXPECT_EQ(hom_set(P("U"), f).size(), static_cast<std::size_t>(q - 2)) << q;
        EXPECT_EQ(hom_set(P("D"), f).size(), q % 2 ? 1u : 0u) << q;
    }
    // z^2 + z - 1: a double root in F5, two roots in F4 and F11, none in F7.
    EXPECT_EQ(hom_set(P("G"), P("F5")).size(), 1u);
    EXPECT_EQ(hom_set(P("G"), P("F4")).size(), 2u);
    EXPECT_EQ(hom_set(P("G"), P("F11")).size(), 2u);
    EXPECT_EQ(hom_set(P("G"), P("F7")).size(), 0u);
    EXPECT_EQ(hom_set(P("G"), P("F4 x F5")).size(), 2u);
}

TEST(HomSet, GuardTrips) {
    HomOptions opt;
    opt.max_candidates = 10;
    EXPECT_THROW(hom_set(P("U"), P("F13 x F11"), opt), SearchSpaceExceeded);
}

TEST(Morphism, ValidationErrors) {
    auto f5 = P("F5"), f7 = P("F7"), f13 = P("F13");
    // F5 units are Z/4; an element of order 3 violates the relation.
    EXPECT_THROW(make(f5, f7, {f7->units().reduce({2})}), GroupHomViolation);
    EXPECT_THROW(make(P("S"), f7, {f7->units().identity()}), EpsilonViolation);
    // A square root of -1 in F13 keeps -1, but 1 + i + i is not zero.
    EXPECT_THROW(make(f5, f13, {f13->units().reduce({3})}), NullsetViolation);
}

TEST(Morphism, CompositionLaws) {
    for (const auto& [x, y, z] : std::vector<std::array<const char*, 3>>{{"F1pm", "F3", "W"}, {"H", "F7", "K"}}) {
        auto a = P(x), b = P(y), c = P(z);
        auto ab = hom_set(a, b), bc = hom_set(b, c);
        ASSERT_FALSE(ab.empty());
        ASSERT_FALSE(bc.empty());
        for (const auto& f : ab) {
            EXPECT_EQ(compose(identity_morphism(b), f), f);
            EXPECT_EQ(compose(f, identity_morphism(a)), f);
            for (const auto& g : bc)
                for (const auto& u : a->units().elements()) EXPECT_EQ(compose(g, f).apply(u), g.apply(f.apply(u)));
        }
        EXPECT_THROW(compose(ab[0], ab[0]), ChainMismatch);
    }
}

TEST(Morphism, ApplyOnZero) {
    auto f = identity_morphism(P("F5"));
    EXPECT_TRUE(f.apply(PastureElement::zero()).is_zero());
    EXPECT_TRUE(is_isomorphism(f));
}

TEST(Iso, DecidesNamedCases) {
    EXPECT_EQ(iso_check(P("F4"), P("F5")).status, IsoStatus::NotIso);
    EXPECT_EQ(iso_check(P("Lt(F7)"), P("D ox H")).status, IsoStatus::Iso);
    EXPECT_EQ(iso_check(P("Lt(F8)"), P("U")).status, IsoStatus::Iso);
    EXPECT_EQ(iso_check(P("F4 x F5"), P("F5 x F4")).status, IsoStatus::Iso);
    EXPECT_EQ(iso_check(P("U"), P("G")).status, IsoStatus::NotIso);
    EXPECT_EQ(iso_check(P("D ox D"), P("D ox D")).status, IsoStatus::Iso);
}

TEST(Iso, WitnessIsIsomorphism) {
    IsoResult r = iso_check(P("Lg(F4 x F5)"), P("G"));
    ASSERT_EQ(r.status, IsoStatus::Iso);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_TRUE(is_isomorphism(*r.witness));
}

TEST(Iso, FundamentalGeneratingSet) {
    EXPECT_TRUE(fundamental_generating_set(*P("U")).has_value());
    EXPECT_TRUE(fundamental_generating_set(*P("D ox H")).has_value());
    // A free variable with no fundamental witnesses.
    EXPECT_FALSE(fundamental_generating_set(*P("F1pm<x>//(x - x)")).has_value());
    EXPECT_EQ(iso_check(P("F1pm<x>//(x - x)"), P("F1pm<y>//(y - y)")).status, IsoStatus::Unknown);
}
