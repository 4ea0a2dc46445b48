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
#include "pastures/pasture.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace pastures;

namespace {

PasturePtr P(const std::string& s) { return evaluate_pasture(s); }

GroupElement unit_of(const Pasture& f, std::int64_t x) {
    return f.units().project(Word{f.field()->log_table[static_cast<std::size_t>(x)]});
}

}  // namespace

TEST(FiniteField, PrimeFieldNullsetMatchesModularArithmetic) {
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        Pasture f = finite_field(p);
        std::set<Triple> orbits;
        for (std::int64_t a = 1; a < p; ++a)
            for (std::int64_t b = 1; b < p; ++b)
                for (std::int64_t c = 1; c < p; ++c) {
                    const bool zero = (a + b + c) % p == 0;
                    EXPECT_EQ(f.null_units(unit_of(f, a), unit_of(f, b), unit_of(f, c)), zero);
                    if (zero) orbits.insert(f.canonical({unit_of(f, a), unit_of(f, b), unit_of(f, c)}));
                }
        EXPECT_EQ(orbits.size(), f.null_orbits().size()) << p;
        for (std::int64_t a = 1; a < p; ++a)
            for (std::int64_t b = 1; b < p; ++b)
                EXPECT_EQ(f.null_contains(PastureElement::of(unit_of(f, a)), PastureElement::of(unit_of(f, b)),
                                          PastureElement::zero()),
                          (a + b) % p == 0);
    }
}

TEST(FiniteField, F5HasOneOrbit) {
    Pasture f = finite_field(5);
    ASSERT_EQ(f.null_orbits().size(), 1u);
    EXPECT_TRUE(f.null_units(unit_of(f, 1), unit_of(f, 2), unit_of(f, 2)));
}

TEST(FiniteField, F2IsDegenerate) {
    Pasture f = finite_field(2);
    EXPECT_EQ(f.units().order(), 1u);
    EXPECT_TRUE(f.units().epsilon_trivial());
    EXPECT_TRUE(f.null_orbits().empty());
}

TEST(FiniteField, DeterministicModulusAndPrimitive) {
    const Pasture p8 = finite_field(8), p9 = finite_field(9);
    const FieldInfo& f8 = *p8.field();
    EXPECT_EQ(f8.modulus, (std::vector<std::int64_t>{1, 1, 0, 1}));
    EXPECT_EQ(f8.primitive, 2);
    const FieldInfo& f9 = *p9.field();
    EXPECT_EQ(f9.modulus, (std::vector<std::int64_t>{1, 0, 1}));
    EXPECT_EQ(f9.primitive, 4);
    EXPECT_THROW(finite_field(6), NotPrimePower);
    EXPECT_THROW(finite_field(1), NotPrimePower);
}

TEST(FiniteField, FieldAxiomsOnRandomElements) {
    std::mt19937 rng(17);
    for (std::int64_t q : {4, 8, 9, 16, 25, 27, 32, 49}) {
        const Pasture field = finite_field(q);
        const FieldInfo& f = *field.field();
        std::uniform_int_distribution<std::int64_t> d(0, q - 1);
        for (int i = 0; i < 200; ++i) {
            std::int64_t a = d(rng), b = d(rng), c = d(rng);
            EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            EXPECT_EQ(f.add(a, f.add(b, c)), f.add(f.add(a, b), c));
            EXPECT_EQ(f.add(a, f.neg(a)), 0);
        }
        std::set<std::int64_t> powers(f.exp_table.begin(), f.exp_table.end());
        EXPECT_EQ(static_cast<std::int64_t>(powers.size()), q - 1);
    }
}

TEST(Pasture, NamedAndFieldsValidate) {
    for (const char* n : {"F1pm", "K", "S", "W", "U", "D", "H", "G", "F2", "F3", "F4", "F27", "F4 x F5", "D ox H"}) {
        auto p = P(n);
        EXPECT_TRUE(validate(*p).empty()) << n;
    }
}

TEST(Pasture, ValidateReportsBrokenOrbit) {
    Pasture f = finite_field(5);
    auto bad = f.null_orbits();
    std::swap(bad[0][0], bad[0][2]);
    f.set_raw_orbits(bad);
    EXPECT_FALSE(validate(f).empty());
}

TEST(Pasture, ImplicitZeroRules) {
    auto p = P("U");
    const GroupElement one = p->one(), eps = p->epsilon();
    auto z = PastureElement::zero();
    EXPECT_TRUE(p->null_contains(z, z, z));
    EXPECT_TRUE(p->null_contains(PastureElement::of(one), PastureElement::of(eps), z));
    EXPECT_FALSE(p->null_contains(PastureElement::of(one), PastureElement::of(one), z));
    EXPECT_FALSE(p->null_contains(PastureElement::of(one), z, z));
}

TEST(Pasture, NamedShapes) {
    EXPECT_EQ(P("U")->units().free_rank(), 2u);
    EXPECT_EQ(P("D")->units().free_rank(), 1u);
    EXPECT_EQ(P("H")->units().torsion(), (std::vector<std::int64_t>{6}));
    EXPECT_EQ(P("G")->units().free_rank(), 1u);
    EXPECT_EQ(P("K")->units().order(), 1u);
    EXPECT_EQ(P("S")->units().order(), 2u);
    EXPECT_EQ(P("W")->null_orbits().size(), 2u);
}

TEST(Quotient, EpsilonCollapseGivesF2) {
    auto f1 = P("F1pm");
    Pasture q = quotient(*f1, {{PastureElement::of(f1->one()), PastureElement::of(f1->one()), PastureElement::zero()}});
    EXPECT_EQ(q.units().order(), 1u);
    EXPECT_TRUE(q.null_orbits().empty());
}

TEST(Quotient, Errors) {
    auto f1 = P("F1pm");
    EXPECT_THROW(quotient(*f1, {{PastureElement::of(f1->one()), PastureElement::zero(), PastureElement::zero()}}),
                 BadRelationShape);
    EXPECT_THROW(free_algebra(*f1, {"x", "x"}), DuplicateName);
}

TEST(Quotient, IdentificationKillsGenerator) {
    auto u = P("U");
    const auto& gens = u->generators();
    GroupElement x = gens[gens.size() - 2].second;
    Pasture q = quotient(*u, {}, {{x, u->one()}});
    EXPECT_EQ(q.units().free_rank(), 1u);
}

TEST(Product, F4xF5OrbitCountByEnumeration) {
    auto f4 = P("F4"), f5 = P("F5");
    ProductResult r = product_many({f4, f5});
    const AbelianGroup& g = r.pasture->units();
    ASSERT_EQ(g.order(), 12u);
    std::set<Triple> orbits;
    for (const auto& a : g.elements())
        for (const auto& b : g.elements())
            for (const auto& c : g.elements()) {
                bool null = f4->null_units(r.component(a, 0), r.component(b, 0), r.component(c, 0)) &&
                            f5->null_units(r.component(a, 1), r.component(b, 1), r.component(c, 1));
                EXPECT_EQ(r.pasture->null_units(a, b, c), null);
                if (null) orbits.insert(r.pasture->canonical({a, b, c}));
            }
    EXPECT_EQ(orbits.size(), 1u);
    EXPECT_EQ(r.pasture->null_orbits().size(), 1u);
}

TEST(Product, UniversalPropertyCounts) {
    for (const char* t : {"F1pm", "F3", "S", "F2"})
        for (const char* a : {"K", "F3", "S", "W"})
            for (const char* b : {"K", "S", "F4"}) {
                auto T = P(t), A = P(a), B = P(b);
                auto prod = std::make_shared<Pasture>(product(*A, *B));
                EXPECT_EQ(hom_set(T, prod).size(), hom_set(T, A).size() * hom_set(T, B).size())
                    << t << " -> " << a << " x " << b;
            }
}

TEST(Tensor, UniversalPropertyCounts) {
    for (const char* a : {"F3", "S", "F2", "K"})
        for (const char* b : {"F3", "S", "F1pm"})
            for (const char* t : {"F4", "F5", "F7", "K", "S", "F3"}) {
                auto A = P(a), B = P(b), T = P(t);
                auto ten = std::make_shared<Pasture>(tensor(*A, *B));
                EXPECT_EQ(hom_set(ten, T).size(), hom_set(A, T).size() * hom_set(B, T).size())
                    << a << " ox " << b << " -> " << t;
            }
}

TEST(Tensor, F2TensorF3IsK) {
    EXPECT_EQ(iso_check(P("F2 ox F3"), P("K")).status, IsoStatus::Iso);
}

TEST(Product, EmptyProductAndTensor) {
    EXPECT_EQ(iso_check(product_many({}).pasture, P("K")).status, IsoStatus::Iso);
    EXPECT_EQ(iso_check(tensor_many({}).pasture, P("F1pm")).status, IsoStatus::Iso);
}

TEST(Product, ComponentsRoundTrip) {
    auto f7 = P("F7"), d = P("D");
    ProductResult r = product_many({f7, d});
    for (const auto& x : f7->units().elements()) {
        GroupElement y = d->units().reduce({1, 3});
        GroupElement z = r.embed({x, y});
        EXPECT_EQ(r.component(z, 0), x);
        EXPECT_EQ(r.component(z, 1), y);
    }
}
