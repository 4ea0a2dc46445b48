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
#include "pastures/lifts.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace pastures;

namespace {

PasturePtr P(const std::string& s) { return evaluate_pasture(s); }

LiftResult lift_of(const std::string& s) { return *evaluate(*parse(s)).lift; }

}  // namespace

// The GRS relations of F5 written out by hand. Fundamental elements are
// a = 2, b = 3, c = 4 with fundamental pairs (2,4), (4,2), (3,3).
//   inverses:   ab = 1, c^2 = 1
//   null pairs: a + c - 1, b + b - 1
//   G4:         a c b = -1 (from (2,4) and (4,2)), b a c = -1 (from (3,3))
//   G5:         a a c = 1, b b c = 1
// Eliminating gives b = 1/a, c = -1, a^2 = -1: the unit group is Z/4 with
// -1 = a^2, and the null orbits are {a, -1, -1} ~ {1, a, a}, those of F5.
TEST(GrsLift, F5ByHand) {
    auto hand = P("F1pm<a,b,c>//(a*b - 1; c^2 - 1; a + c - 1; b + b - 1; a*c*b + 1; b*a*c + 1; a^2*c - 1; b^2*c - 1)");
    EXPECT_EQ(hand->units().torsion(), (std::vector<std::int64_t>{4}));
    EXPECT_EQ(hand->null_orbits().size(), 1u);
    EXPECT_EQ(iso_check(hand, P("F5")).status, IsoStatus::Iso);
    EXPECT_EQ(iso_check(hand, P("Lg(F5)")).status, IsoStatus::Iso);
}

// K has the single fundamental element 1 with pair (1,1): G1 gives 1 + 1,
// G2 t^2 = 1, G3 t + t + 1, G4 t^3 = -1, G5 t^3 = 1.
TEST(GrsLift, KByHand) {
    auto hand = P("F1pm<t>//(1 + 1; t^2 - 1; t + t + 1; t^3 + 1; t^3 - 1)");
    EXPECT_EQ(hand->units().order(), 1u);
    EXPECT_EQ(iso_check(hand, P("K")).status, IsoStatus::Iso);
    EXPECT_EQ(iso_check(hand, P("Lg(K)")).status, IsoStatus::Iso);
}

TEST(GrsLift, LambdaBijectsFundamentalElements) {
    for (const char* n : {"F3", "F4", "F5", "F7", "F8", "F9", "S", "W", "D", "U", "G", "F4 x F5"})
        EXPECT_TRUE(lambda_bijects_elements(lift_of(std::string("Lg(") + n + ")"))) << n;
}

TEST(GrsLift, GuardOnManyFundamentalElements) {
    GrsOptions opt;
    opt.max_fundamental = 5;
    EXPECT_THROW(grs_lift(P("F9"), opt), SearchSpaceExceeded);
}

TEST(TernaryLift, DescriptorMatchesCensus) {
    for (std::int64_t q = 2; q <= 32; ++q) {
        if (!prime_power(q)) continue;
        const std::string f = "F" + std::to_string(q);
        LiftResult r = lift_of("Lt(" + f + ")");
        Census c = census_Fq(q);
        EXPECT_EQ(r.descriptor->u, c.near_regular) << q;
        EXPECT_EQ(r.descriptor->d, c.dyadic) << q;
        EXPECT_EQ(r.descriptor->h, c.hexagonal) << q;
        EXPECT_EQ(r.descriptor->f3, c.ternary) << q;
        EXPECT_TRUE(lambda_bijects_pairs(r)) << q;
    }
}

TEST(TernaryLift, ModelTensorIsomorphic) {
    for (const char* n : {"F7", "F9", "F13", "W", "S x S"}) {
        LiftResult r = lift_of(std::string("Lt(") + n + ")");
        EXPECT_EQ(iso_check(r.lift, std::make_shared<Pasture>(model_tensor(*r.descriptor))).status, IsoStatus::Iso)
            << n;
    }
}

TEST(TernaryLift, DescriptorComparison) {
    EXPECT_TRUE(lift_descriptor_iso(lift_of("Lt(F8)"), lift_of("Lt(F4 x F5)")));
    EXPECT_FALSE(lift_descriptor_iso(lift_of("Lt(F7)"), lift_of("Lt(F13)")));
    EXPECT_THROW(lift_descriptor_iso(lift_of("Lg(F5)"), lift_of("Lt(F5)")), KindMismatch);
}

TEST(HexagonLift, ImagesLieInHexagon) {
    for (const char* n : {"F3", "F4", "F5", "F8", "F13"}) {
        auto p = P(n);
        for (const auto& h : hexagons(*p)) {
            HexagonLift l = hexagon_lift(*p, h);
            EXPECT_EQ(l.generators.size(), l.images.size());
            for (const auto& x : l.images)
                EXPECT_TRUE(std::binary_search(h.support.begin(), h.support.end(), x)) << n;
        }
    }
}

TEST(HexagonLift, RejectsForeignHexagon) {
    auto f7 = P("F7");
    Hexagon h = hexagons(*P("F13"))[0];
    EXPECT_THROW(hexagon_lift(*f7, h), HexagonNotOfPasture);
}

TEST(BinaryLift, SignOrF2) {
    LiftResult a = binary_lift(P("F5"));
    EXPECT_EQ(iso_check(a.lift, P("F1pm")).status, IsoStatus::Iso);
    LiftResult b = binary_lift(P("F4"));
    EXPECT_EQ(iso_check(b.lift, P("F2")).status, IsoStatus::Iso);
}

TEST(WlumLift, AddsF2ExactlyInCharacteristicTwo) {
    EXPECT_EQ(lift_of("Lw(F4)").descriptor->f2, 1);
    EXPECT_EQ(lift_of("Lw(F5)").descriptor->f2, 0);
    EXPECT_EQ(lift_of("Lw(K)").descriptor->f2, 1);
}

TEST(Lifts, DeterministicAcrossRuns) {
    for (const char* e : {"Lt(F13)", "Lg(F4 x F5)", "Lw(F8)"}) {
        auto a = P(e), b = P(e);
        EXPECT_EQ(a->null_orbits(), b->null_orbits());
        EXPECT_TRUE(a->units().same_shape(b->units()));
        EXPECT_EQ(a->epsilon(), b->epsilon());
    }
}

namespace {

/// Number of phi into the lift with lambda . phi_hat = phi, for each phi: L -> P.
std::vector<std::size_t> factorizations(const std::string& l, const std::string& op, const std::string& p) {
    PasturePtr src = P(l);
    Evaluated lifted = evaluate(*parse(op + "(" + p + ")"));
    auto hats = hom_set(src, lifted.pasture);
    std::vector<std::size_t> out;
    for (const auto& phi : hom_set(src, P(p))) {
        std::size_t n = 0;
        for (const auto& hat : hats)
            if (compose(lifted.lift->lambda, hat) == phi) ++n;
        out.push_back(n);
    }
    return out;
}

}  // namespace

TEST(UniversalProperty, TernaryLiftFactorsUniquely) {
    std::size_t seen = 0;
    for (const char* l : {"U", "D", "D ox H", "F3 ox U"})
        for (const char* p : {"F7", "F9", "F13", "F4 x F5", "F8"}) {
            auto counts = factorizations(l, "Lt", p);
            seen += counts.size();
            for (auto n : counts) EXPECT_EQ(n, 1u) << l << " -> " << p;
        }
    EXPECT_GT(seen, 20u);
}

TEST(UniversalProperty, GrsLiftFactorsUniquely) {
    std::size_t seen = 0;
    for (const char* l : {"U", "D", "G", "F5"})
        for (const char* p : {"F5", "F7", "F11", "F4 x F5"}) {
            auto counts = factorizations(l, "Lg", p);
            seen += counts.size();
            for (auto n : counts) EXPECT_EQ(n, 1u) << l << " -> " << p;
        }
    EXPECT_GT(seen, 10u);
}
