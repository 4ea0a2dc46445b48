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
#include "pastures/hexagons.hpp"

#include "pastures/errors.hpp"

#include <algorithm>
#include <set>

namespace pastures {

std::string kind_name(HexagonKind k) {
    switch (k) {
        case HexagonKind::Ternary: return "ternary";
        case HexagonKind::Hexagonal: return "hexagonal";
        case HexagonKind::Dyadic: return "dyadic";
        case HexagonKind::NearRegular: return "near-regular";
    }
    return "?";
}

HexagonKind kind_for_mu(int mu) {
    switch (mu) {
        case 1: return HexagonKind::Ternary;
        case 2: return HexagonKind::Hexagonal;
        case 3: return HexagonKind::Dyadic;
        case 6: return HexagonKind::NearRegular;
    }
    throw std::logic_error("orbit length " + std::to_string(mu) + " is impossible");
}

bool is_fundamental(const Pasture& p, const Pair& ab) {
    return p.null_units(ab.first, ab.second, p.epsilon());
}

Pair d3_rho(const Pasture& p, const Pair& ab) {
    if (!is_fundamental(p, ab)) throw NotFundamental(p.format(ab.first) + ", " + p.format(ab.second));
    const auto& g = p.units();
    GroupElement binv = g.inv(ab.second);
    return {binv, g.mul(p.epsilon(), g.mul(ab.first, binv))};
}

Pair d3_sigma(const Pasture& p, const Pair& ab) {
    if (!is_fundamental(p, ab)) throw NotFundamental(p.format(ab.first) + ", " + p.format(ab.second));
    return {ab.second, ab.first};
}

std::vector<Pair> d3_orbit(const Pasture& p, const Pair& ab) {
    std::vector<Pair> out;
    Pair r = ab;
    for (int i = 0; i < 3; ++i) {
        out.push_back(r);
        out.push_back(d3_sigma(p, r));
        r = d3_rho(p, r);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::array<GroupElement, 6> ordered_hexagon(const Pasture& p, const Pair& ab) {
    const auto& g = p.units();
    const auto& [a, b] = ab;
    return {a, b, g.inv(a), g.inv(b), g.mul(p.epsilon(), g.div(b, a)), g.mul(p.epsilon(), g.div(a, b))};
}

std::vector<Pair> fundamental_pairs(const Pasture& p) {
    const auto& g = p.units();
    std::set<Pair> out;
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& t : p.null_orbits()) {
        for (const auto& pm : perms) {
            // a + b + c null  <=>  (-a/c) + (-b/c) - 1 null.
            const auto& a = t[static_cast<std::size_t>(pm[0])];
            const auto& b = t[static_cast<std::size_t>(pm[1])];
            const auto& c = t[static_cast<std::size_t>(pm[2])];
            GroupElement s = g.mul(p.epsilon(), g.inv(c));
            out.insert({g.mul(a, s), g.mul(b, s)});
        }
    }
    return {out.begin(), out.end()};
}

std::vector<GroupElement> fundamental_elements(const Pasture& p) {
    std::set<GroupElement> out;
    for (const auto& ab : fundamental_pairs(p)) out.insert(ab.first);
    return {out.begin(), out.end()};
}

std::vector<Hexagon> hexagons(const Pasture& p) {
    std::vector<Hexagon> out;
    std::set<Pair> seen;
    for (const auto& ab : fundamental_pairs(p)) {
        if (seen.count(ab)) continue;
        Hexagon h;
        h.pairs = d3_orbit(p, ab);
        seen.insert(h.pairs.begin(), h.pairs.end());
        h.canonical_pair = h.pairs.front();
        h.mu = static_cast<int>(h.pairs.size());
        h.kind = kind_for_mu(h.mu);
        std::set<GroupElement> sup;
        for (const auto& q : h.pairs) sup.insert(q.first);
        h.support.assign(sup.begin(), sup.end());
        out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end(),
              [](const Hexagon& x, const Hexagon& y) { return x.canonical_pair < y.canonical_pair; });
    return out;
}

Census census(const std::vector<Hexagon>& hex) {
    Census c;
    for (const auto& h : hex) {
        switch (h.kind) {
            case HexagonKind::Ternary: ++c.ternary; break;
            case HexagonKind::Hexagonal: ++c.hexagonal; break;
            case HexagonKind::Dyadic: ++c.dyadic; break;
            case HexagonKind::NearRegular: ++c.near_regular; break;
        }
    }
    return c;
}

Census census_Fq(std::int64_t q) { return census(hexagons(finite_field(q))); }

Census census_rule(std::int64_t q) {
    if (!prime_power(q)) throw NotPrimePower(std::to_string(q) + " is not a prime power");
    Census c;
    c.dyadic = (q % 2 == 1 && q % 3 != 0) ? 1 : 0;
    c.hexagonal = ((q - 1) % 3 == 0) ? 1 : 0;
    c.ternary = (q % 3 == 0) ? 1 : 0;
    c.near_regular = static_cast<int>((q - 2) / 6);
    return c;
}

PsiResult psi_product(const Pasture& p, const Pasture& q) {
    auto pp = std::make_shared<Pasture>(p), qq = std::make_shared<Pasture>(q);
    ProductResult prod = product_many({pp, qq});
    PsiResult res;
    res.left = hexagons(p);
    res.right = hexagons(q);
    auto locate = [](const std::vector<Hexagon>& hs, const Pair& ab) {
        for (std::size_t i = 0; i < hs.size(); ++i)
            if (std::binary_search(hs[i].pairs.begin(), hs[i].pairs.end(), ab)) return i;
        throw std::logic_error("projected pair is not fundamental");
    };
    for (auto& h : hexagons(*prod.pasture)) {
        const auto& [a, b] = h.canonical_pair;
        std::size_t l = locate(res.left, {prod.component(a, 0), prod.component(b, 0)});
        std::size_t r = locate(res.right, {prod.component(a, 1), prod.component(b, 1)});
        res.fibers[{l, r}].push_back(h.mu);
        res.entries.push_back({std::move(h), l, r});
    }
    for (auto& [k, v] : res.fibers) std::sort(v.begin(), v.end());
    return res;
}

PartitionReport partial_field_partition_check(const Pasture& p) {
    PartitionReport rep;
    std::set<GroupElement> seen;
    for (const auto& h : hexagons(p))
        for (const auto& x : h.support)
            if (!seen.insert(x).second) {
                rep.ok = false;
                rep.witness = x;
                rep.reason = "element " + p.format(x) + " lies in two hexagon supports";
                return rep;
            }
    if (p.field()) {
        const auto& f = *p.field();
        for (std::int64_t x = 2; x < f.q; ++x) {
            GroupElement u = p.units().reduce(Word{f.log_table[static_cast<std::size_t>(x)]});
            if (!seen.count(u)) {
                rep.ok = false;
                rep.witness = u;
                rep.reason = "element " + p.format(u) + " lies in no hexagon support";
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace pastures
