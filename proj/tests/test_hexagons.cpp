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
#include "pastures/hexagons.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace pastures;

namespace {

PasturePtr P(const std::string& s) { return evaluate_pasture(s); }

std::vector<std::int64_t> prime_powers(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t q = 2; q <= n; ++q)
        if (prime_power(q)) out.push_back(q);
    return out;
}

}  // namespace

TEST(Hexagons, D3RelationsOnEveryFundamentalPair) {
    for (const char* n : {"F7", "F9", "F13", "F16", "U", "D", "G", "H", "F4 x F5", "W"}) {
        auto p = P(n);
        for (const auto& ab : fundamental_pairs(*p)) {
            Pair r1 = d3_rho(*p, ab), r2 = d3_rho(*p, r1), r3 = d3_rho(*p, r2);
            EXPECT_EQ(r3, ab) << n;
            EXPECT_EQ(d3_sigma(*p, d3_sigma(*p, ab)), ab);
            EXPECT_EQ(d3_sigma(*p, d3_rho(*p, d3_sigma(*p, ab))), r2);
            EXPECT_TRUE(is_fundamental(*p, r1));
        }
    }
}

TEST(Hexagons, FundamentalPairMeansNullTriple) {
    auto p = P("F11");
    const auto& g = p->units();
    for (const auto& a : g.elements())
        for (const auto& b : g.elements())
            EXPECT_EQ(is_fundamental(*p, {a, b}), p->null_units(a, b, p->epsilon()));
    EXPECT_THROW(d3_rho(*p, {p->one(), p->one()}), NotFundamental);
}

TEST(Hexagons, MuIsOrbitLength) {
    for (const char* n : {"F13", "F3", "F4", "F8", "S x S", "D ox H"})
        for (const auto& h : hexagons(*P(n))) {
            EXPECT_EQ(static_cast<int>(h.pairs.size()), h.mu);
            EXPECT_EQ(h.kind, kind_for_mu(h.mu));
        }
}

TEST(Hexagons, CensusMatchesModSixRule) {
    for (std::int64_t q : prime_powers(64)) EXPECT_EQ(census_Fq(q), census_rule(q)) << q;
    Census c32 = census_Fq(32);
    EXPECT_EQ(c32.hexagonal, 0);
    EXPECT_EQ(c32.near_regular, 5);
}

TEST(Hexagons, FundamentalElementCounts) {
    for (std::int64_t q : prime_powers(49))
        EXPECT_EQ(fundamental_elements(*P("F" + std::to_string(q))).size(), static_cast<std::size_t>(q - 2));
    for (auto [a, b] : std::vector<std::pair<int, int>>{{4, 5}, {5, 7}, {3, 8}, {5, 5}})
        EXPECT_EQ(fundamental_elements(*P("F" + std::to_string(a) + " x F" + std::to_string(b))).size(),
                  static_cast<std::size_t>((a - 2) * (b - 2)));
}

TEST(Hexagons, PartitionOfFields) {
    for (std::int64_t q : prime_powers(32)) EXPECT_TRUE(partial_field_partition_check(*P("F" + std::to_string(q))).ok);
    EXPECT_TRUE(partial_field_partition_check(*P("D")).ok);
}

TEST(Hexagons, NamedKinds) {
    auto kinds = [](const char* n) {
        std::vector<HexagonKind> out;
        for (const auto& h : hexagons(*P(n))) out.push_back(h.kind);
        return out;
    };
    EXPECT_EQ(kinds("U"), std::vector<HexagonKind>{HexagonKind::NearRegular});
    EXPECT_EQ(kinds("D"), std::vector<HexagonKind>{HexagonKind::Dyadic});
    EXPECT_EQ(kinds("H"), std::vector<HexagonKind>{HexagonKind::Hexagonal});
    EXPECT_EQ(kinds("F3"), std::vector<HexagonKind>{HexagonKind::Ternary});
    EXPECT_TRUE(kinds("F1pm").empty());
}

TEST(Hexagons, PsiFibersCoverProduct) {
    PsiResult r = psi_product(*P("F7"), *P("F9"));
    std::size_t total = 0;
    for (const auto& [key, mus] : r.fibers) total += mus.size();
    EXPECT_EQ(total, r.entries.size());
    EXPECT_EQ(r.fibers.size(), r.left.size() * r.right.size());
}

TEST(Hexagons, OrderedHexagonShape) {
    auto p = P("F13");
    for (const auto& ab : fundamental_pairs(*p)) {
        auto six = ordered_hexagon(*p, ab);
        const auto& g = p->units();
        EXPECT_EQ(six[2], g.inv(ab.first));
        EXPECT_EQ(six[3], g.inv(ab.second));
        EXPECT_EQ(six[4], g.mul(p->epsilon(), g.div(ab.second, ab.first)));
        EXPECT_EQ(six[5], g.mul(p->epsilon(), g.div(ab.first, ab.second)));
    }
}
