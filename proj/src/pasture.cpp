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
#include "pastures/pasture.hpp"

#include "pastures/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace pastures {

namespace {

std::string power_string(const std::string& name, std::int64_t e) {
    if (e == 1) return name;
    return name + "^" + std::to_string(e);
}

/// Renders an element through a presentation word; a generator named "-1"
/// contributes a sign.
class WordNotation : public Notation {
public:
    explicit WordNotation(std::vector<std::string> names) : names_(std::move(names)) {}
    std::string format(const Pasture& p, const GroupElement& g) const override {
        Word w = p.units().lift(g);
        bool negative = false;
        std::string body;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] == 0) continue;
            if (names_[i] == "-1") {
                negative ^= (w[i] % 2 != 0);
                continue;
            }
            if (!body.empty()) body += "*";
            body += power_string(names_[i], w[i]);
        }
        if (body.empty()) return negative ? "-1" : "1";
        return (negative ? "-" : "") + body;
    }

private:
    std::vector<std::string> names_;
};

class FieldNotation : public Notation {
public:
    std::string format(const Pasture& p, const GroupElement& g) const override {
        const FieldInfo& f = *p.field();
        std::int64_t log = g.coords.empty() ? 0 : g.coords[0];
        return f.format(f.exp_table[static_cast<std::size_t>(log)]);
    }
};

GroupElement product_component(const AbelianGroup& g, const std::vector<PasturePtr>& factors,
                               const GroupElement& x, std::size_t i) {
    Word w = g.lift(x);
    std::size_t off = 0;
    for (std::size_t j = 0; j < i; ++j) off += factors[j]->units().rank();
    Word slice(w.begin() + static_cast<long>(off), w.begin() + static_cast<long>(off + factors[i]->units().rank()));
    return factors[i]->units().reduce(slice);
}

class ProductNotation : public Notation {
public:
    explicit ProductNotation(std::vector<PasturePtr> factors) : factors_(std::move(factors)) {}
    std::string format(const Pasture& p, const GroupElement& g) const override {
        std::string s = "(";
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) s += ",";
            s += factors_[i]->format(product_component(p.units(), factors_, g, i));
        }
        return s + ")";
    }

private:
    std::vector<PasturePtr> factors_;
};

/// A readable name for each canonical coordinate of p.
std::vector<std::string> coordinate_names(const Pasture& p) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < p.units().rank(); ++i) {
        GroupElement e = p.units().generator(i);
        std::string name;
        if (e == p.epsilon()) name = "-1";
        for (const auto& [n, g] : p.generators())
            if (name.empty() && g == e) name = n;
        if (name.empty()) name = p.format(e);
        if (name == "1" || name.empty()) name = "g" + std::to_string(i);
        names.push_back(name);
    }
    return names;
}

std::string wrap(const std::string& label, bool parens) {
    return parens ? "(" + label + ")" : label;
}

}  // namespace

// ---------------------------------------------------------------- FieldInfo

std::int64_t FieldInfo::add(std::int64_t a, std::int64_t b) const {
    std::int64_t r = 0, scale = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        r += ((a % p + b % p) % p) * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    return r;
}

std::int64_t FieldInfo::neg(std::int64_t a) const {
    std::int64_t r = 0, scale = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        r += ((p - a % p) % p) * scale;
        a /= p;
        scale *= p;
    }
    return r;
}

std::int64_t FieldInfo::mul(std::int64_t a, std::int64_t b) const {
    if (a == 0 || b == 0) return 0;
    std::int64_t s = (log_table[static_cast<std::size_t>(a)] + log_table[static_cast<std::size_t>(b)]) % (q - 1);
    return exp_table[static_cast<std::size_t>(s)];
}

std::string FieldInfo::format(std::int64_t x) const {
    if (k == 1 || x == 0 || x == 1) return std::to_string(x);
    return power_string("a", log_table[static_cast<std::size_t>(x)]);
}

// ------------------------------------------------------------------ Pasture

Pasture::Pasture(AbelianGroup units, const std::vector<Triple>& null_triples, std::string label)
    : units_(std::move(units)), label_(std::move(label)) {
    for (const auto& t : null_triples) null_orbits_.push_back(canonical(t));
    std::sort(null_orbits_.begin(), null_orbits_.end());
    null_orbits_.erase(std::unique(null_orbits_.begin(), null_orbits_.end()), null_orbits_.end());
}

Triple Pasture::canonical(const Triple& t) const {
    std::optional<Triple> best;
    for (std::size_t k = 0; k < 3; ++k) {
        GroupElement s = units_.inv(t[k]);
        Triple c{units_.mul(t[0], s), units_.mul(t[1], s), units_.mul(t[2], s)};
        std::sort(c.begin(), c.end());
        if (!best || c < *best) best = c;
    }
    return *best;
}

bool Pasture::null_units(const GroupElement& a, const GroupElement& b, const GroupElement& c) const {
    return std::binary_search(null_orbits_.begin(), null_orbits_.end(), canonical({a, b, c}));
}

bool Pasture::null_contains(const PastureElement& a, const PastureElement& b, const PastureElement& c) const {
    std::vector<GroupElement> u;
    for (const auto* x : {&a, &b, &c})
        if (!x->is_zero()) u.push_back(*x->unit);
    switch (u.size()) {
        case 0: return true;
        case 1: return false;
        case 2: return u[1] == units_.mul(epsilon(), u[0]);
        default: return null_units(u[0], u[1], u[2]);
    }
}

std::string Pasture::format(const GroupElement& g) const {
    if (notation_) return notation_->format(*this, g);
    return g.str();
}

std::string Pasture::format(const PastureElement& x) const {
    return x.is_zero() ? "0" : format(*x.unit);
}

std::vector<Violation> validate(const Pasture& p) {
    std::vector<Violation> out;
    const auto& g = p.units();
    for (std::size_t i = 0; i < g.torsion().size(); ++i) {
        if (g.torsion()[i] < 2) out.push_back({"torsion coefficient below 2"});
        if (i + 1 < g.torsion().size() && g.torsion()[i + 1] % g.torsion()[i] != 0)
            out.push_back({"invariant factors do not form a divisibility chain"});
    }
    if (!g.is_identity(g.mul(p.epsilon(), p.epsilon()))) out.push_back({"epsilon squared is not 1"});
    const auto& orbits = p.null_orbits();
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        for (const auto& x : orbits[i])
            if (x.coords.size() != g.rank() || !(g.reduce(x.coords) == x))
                out.push_back({"orbit entry is not a reduced unit: " + x.str()});
        if (!(p.canonical(orbits[i]) == orbits[i]))
            out.push_back({"orbit representative " + std::to_string(i) + " is not canonical"});
        if (i > 0 && !(orbits[i - 1] < orbits[i]))
            out.push_back({"orbit representatives not strictly increasing at " + std::to_string(i)});
    }
    return out;
}

// -------------------------------------------------------------- constructors

std::optional<std::pair<std::int64_t, std::int64_t>> prime_power(std::int64_t q) {
    if (q < 2) return std::nullopt;
    std::int64_t p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    std::int64_t k = 0, r = q;
    while (r % p == 0) {
        r /= p;
        ++k;
    }
    if (r != 1) return std::nullopt;
    return std::make_pair(p, k);
}

namespace {

using Poly = std::vector<std::int64_t>;  // low degree first

Poly poly_mod(Poly a, const Poly& m, std::int64_t p) {
    // m monic
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        std::int64_t c = a.back() % p;
        std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
        a.pop_back();
    }
    return a;
}

bool poly_zero(const Poly& a) {
    return std::all_of(a.begin(), a.end(), [](std::int64_t c) { return c == 0; });
}

Poly decode(std::int64_t x, std::int64_t p, std::int64_t len) {
    Poly a(static_cast<std::size_t>(len));
    for (auto& c : a) {
        c = x % p;
        x /= p;
    }
    return a;
}

std::int64_t encode(const Poly& a, std::int64_t p) {
    std::int64_t x = 0;
    for (std::size_t i = a.size(); i-- > 0;) x = x * p + a[i];
    return x;
}

bool irreducible(const Poly& f, std::int64_t p) {
    const std::int64_t k = static_cast<std::int64_t>(f.size()) - 1;
    for (std::int64_t d = 1; 2 * d <= k; ++d) {
        std::int64_t count = 1;
        for (std::int64_t i = 0; i < d; ++i) count *= p;
        for (std::int64_t e = 0; e < count; ++e) {
            Poly g = decode(e, p, d);
            g.push_back(1);
            if (poly_zero(poly_mod(f, g, p))) return false;
        }
    }
    return true;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::int64_t p) {
    Poly r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    r = poly_mod(r, m, p);
    r.resize(m.size() - 1, 0);
    return r;
}

FieldInfo build_field(std::int64_t p, std::int64_t k) {
    FieldInfo f;
    f.p = p;
    f.k = k;
    f.q = 1;
    for (std::int64_t i = 0; i < k; ++i) f.q *= p;
    // Least monic irreducible, comparing coefficients from the top.
    for (std::int64_t e = 0;; ++e) {
        Poly m = decode(e, p, k);
        m.push_back(1);
        if (irreducible(m, p)) {
            f.modulus = m;
            break;
        }
    }
    auto powers_of = [&](std::int64_t x) {
        std::vector<std::int64_t> pw{1};
        Poly a = decode(x, p, k), cur = decode(1, p, k);
        for (;;) {
            cur = poly_mulmod(cur, a, f.modulus, p);
            std::int64_t c = encode(cur, p);
            if (c == 1) break;
            pw.push_back(c);
        }
        return pw;
    };
    for (std::int64_t x = 1; x < f.q; ++x) {
        auto pw = powers_of(x);
        if (static_cast<std::int64_t>(pw.size()) == f.q - 1) {
            f.primitive = x;
            f.exp_table = pw;
            break;
        }
    }
    f.log_table.assign(static_cast<std::size_t>(f.q), -1);
    for (std::size_t i = 0; i < f.exp_table.size(); ++i) f.log_table[static_cast<std::size_t>(f.exp_table[i])] = static_cast<std::int64_t>(i);
    return f;
}

}  // namespace

Pasture finite_field(std::int64_t q) {
    auto pk = prime_power(q);
    if (!pk) throw NotPrimePower(std::to_string(q) + " is not a prime power");
    FieldInfo f = build_field(pk->first, pk->second);
    const std::int64_t minus_one = f.neg(1);
    const std::int64_t eps_log = f.log_table[static_cast<std::size_t>(minus_one)];
    AbelianGroup g = AbelianGroup::from_presentation(1, std::vector<Word>{{q - 1}}, Word{eps_log});
    auto unit = [&](std::int64_t x) { return g.project(Word{f.log_table[static_cast<std::size_t>(x)]}); };
    std::vector<Triple> triples;
    for (std::int64_t a = 2; a < q; ++a) {
        std::int64_t b = f.add(1, f.neg(a));
        triples.push_back({unit(a), unit(b), unit(minus_one)});
    }
    Pasture out(g, triples, "F" + std::to_string(q));
    out.set_field(std::move(f));
    out.set_notation(std::make_shared<FieldNotation>());
    return out;
}

Pasture free_algebra(const Pasture& base, const std::vector<std::string>& names) {
    std::set<std::string> seen;
    for (const auto& [n, g] : base.generators()) seen.insert(n);
    for (const auto& n : names) {
        if (n.empty() || !seen.insert(n).second) throw DuplicateName("variable name '" + n + "' repeated");
    }
    const std::size_t r = base.units().rank(), n = r + names.size();
    std::vector<Word> rows;
    for (std::size_t i = 0; i < base.units().torsion().size(); ++i) {
        Word row(n, 0);
        row[i] = base.units().torsion()[i];
        rows.push_back(row);
    }
    Word eps(n, 0);
    std::copy(base.epsilon().coords.begin(), base.epsilon().coords.end(), eps.begin());
    AbelianGroup g = AbelianGroup::from_presentation(n, rows, eps);
    auto embed = [&](const GroupElement& x) {
        Word w(n, 0);
        std::copy(x.coords.begin(), x.coords.end(), w.begin());
        return g.project(w);
    };
    std::vector<Triple> triples;
    for (const auto& t : base.null_orbits()) triples.push_back({embed(t[0]), embed(t[1]), embed(t[2])});
    std::vector<std::pair<std::string, GroupElement>> gens;
    for (const auto& [nm, x] : base.generators()) gens.emplace_back(nm, embed(x));
    std::vector<std::string> pres_names = coordinate_names(base);
    for (std::size_t i = 0; i < names.size(); ++i) {
        Word w(n, 0);
        w[r + i] = 1;
        gens.emplace_back(names[i], g.project(w));
        pres_names.push_back(names[i]);
    }
    std::string label = base.label() + "<";
    for (std::size_t i = 0; i < names.size(); ++i) label += (i ? "," : "") + names[i];
    label += ">";
    Pasture out(g, triples, label);
    out.set_generators(std::move(gens));
    out.set_notation(std::make_shared<WordNotation>(std::move(pres_names)));
    return out;
}

Pasture quotient(const Pasture& p, const std::vector<std::array<PastureElement, 3>>& extra_null,
                 const std::vector<std::pair<GroupElement, GroupElement>>& identifications) {
    const AbelianGroup& g = p.units();
    std::vector<Triple> triples = p.null_orbits();
    std::vector<GroupElement> kill;
    for (const auto& t : extra_null) {
        std::vector<GroupElement> u;
        for (const auto& x : t)
            if (!x.is_zero()) u.push_back(*x.unit);
        if (u.size() < 2) throw BadRelationShape("relation needs at least two nonzero terms");
        if (u.size() == 2)
            kill.push_back(g.mul(g.div(u[0], u[1]), p.epsilon()));
        else
            triples.push_back({u[0], u[1], u[2]});
    }
    for (const auto& [a, b] : identifications) kill.push_back(g.div(a, b));
    kill.erase(std::remove_if(kill.begin(), kill.end(), [&](const GroupElement& k) { return g.is_identity(k); }),
               kill.end());
    // A single round suffices: projections of all-unit triples stay all-unit,
    // so no new two-term relations (and hence no new kills) can appear.
    AbelianGroup q = g.quotient_by(kill);
    auto proj = [&](const GroupElement& x) { return q.project(x.coords); };
    std::vector<Triple> projected;
    for (const auto& t : triples) projected.push_back({proj(t[0]), proj(t[1]), proj(t[2])});
    Pasture out(q, projected, p.label());
    std::vector<std::pair<std::string, GroupElement>> gens;
    for (const auto& [nm, x] : p.generators()) gens.emplace_back(nm, proj(x));
    out.set_generators(std::move(gens));
    out.set_notation(std::make_shared<WordNotation>(coordinate_names(p)));
    return out;
}

Pasture present(const Pasture& base, const std::vector<std::string>& vars, const std::vector<Relation>& relations) {
    Pasture free = free_algebra(base, vars);
    std::map<std::string, GroupElement> lookup(free.generators().begin(), free.generators().end());
    const AbelianGroup& g = free.units();
    std::vector<std::array<PastureElement, 3>> rels;
    for (const auto& r : relations) {
        if (r.terms.size() < 2 || r.terms.size() > 3)
            throw BadRelationShape("relations have two or three terms");
        std::array<PastureElement, 3> t;
        for (std::size_t i = 0; i < r.terms.size(); ++i) {
            GroupElement x = r.terms[i].negative ? free.epsilon() : g.identity();
            for (const auto& [name, e] : r.terms[i].factors) {
                auto it = lookup.find(name);
                if (it == lookup.end()) throw BadRelationShape("unknown variable '" + name + "'");
                x = g.mul(x, g.pow(it->second, e));
            }
            t[i] = PastureElement::of(x);
        }
        rels.push_back(t);
    }
    Pasture out = quotient(free, rels);
    return out;
}

namespace {

Monomial mono(bool neg, std::vector<std::pair<std::string, std::int64_t>> f = {}) { return {neg, std::move(f)}; }

Pasture f1pm() {
    AbelianGroup g = AbelianGroup::from_presentation(1, std::vector<Word>{{2}}, Word{1});
    Pasture p(g, {}, "F1pm");
    p.set_notation(std::make_shared<WordNotation>(std::vector<std::string>{"-1"}));
    return p;
}

}  // namespace

bool is_named(const std::string& name) {
    static const std::set<std::string> names{"F1pm", "K", "S", "W", "U", "D", "H", "G", "F2", "F3"};
    return names.count(name) > 0;
}

Pasture named(const std::string& name) {
    const Pasture base = f1pm();
    if (name == "F1pm") return base;
    const Monomial one = mono(false), minus = mono(true);
    Pasture out;
    if (name == "F2")
        out = present(base, {}, {{{one, one}}});
    else if (name == "F3")
        out = present(base, {}, {{{one, one, one}}});
    else if (name == "K")
        out = present(base, {}, {{{one, one}}, {{one, one, one}}});
    else if (name == "S")
        out = present(base, {}, {{{one, one, minus}}});
    else if (name == "W")
        out = present(base, {}, {{{one, one, one}}, {{one, one, minus}}});
    else if (name == "U")
        out = present(base, {"x", "y"}, {{{mono(false, {{"x", 1}}), mono(false, {{"y", 1}}), minus}}});
    else if (name == "D")
        out = present(base, {"z"}, {{{mono(false, {{"z", 1}}), mono(false, {{"z", 1}}), minus}}});
    else if (name == "H")
        out = present(base, {"z"},
                      {{{mono(false, {{"z", 3}}), one}},
                       {{mono(false, {{"z", 1}}), mono(false, {{"z", -1}}), minus}}});
    else if (name == "G")
        out = present(base, {"z"}, {{{mono(false, {{"z", 2}}), mono(false, {{"z", 1}}), minus}}});
    else
        throw std::invalid_argument("unknown pasture name '" + name + "'");
    out.set_label(name);
    return out;
}

// ------------------------------------------------------------------ products

GroupElement ProductResult::embed(const std::vector<GroupElement>& components) const {
    Word w;
    for (const auto& c : components) w.insert(w.end(), c.coords.begin(), c.coords.end());
    return pasture->units().project(w);
}

GroupElement ProductResult::component(const GroupElement& x, std::size_t i) const {
    return product_component(pasture->units(), factors, x, i);
}

ProductResult product_many(const std::vector<PasturePtr>& factors) {
    std::size_t n = 0;
    for (const auto& f : factors) n += f->units().rank();
    std::vector<Word> rows;
    Word eps;
    std::size_t off = 0;
    for (const auto& f : factors) {
        for (std::size_t i = 0; i < f->units().torsion().size(); ++i) {
            Word r(n, 0);
            r[off + i] = f->units().torsion()[i];
            rows.push_back(r);
        }
        eps.insert(eps.end(), f->epsilon().coords.begin(), f->epsilon().coords.end());
        off += f->units().rank();
    }
    AbelianGroup g = AbelianGroup::from_presentation(n, rows, eps);

    ProductResult res;
    res.factors = factors;
    auto tmp = std::make_shared<Pasture>(g, std::vector<Triple>{});
    res.pasture = tmp;

    // Componentwise null triples: fix the first factor's orbit and permute the rest.
    static const std::array<std::array<int, 3>, 6> perms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    std::vector<Triple> triples;
    std::vector<std::vector<GroupElement>> comp(3, std::vector<GroupElement>(factors.size()));
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == factors.size()) {
            triples.push_back({res.embed(comp[0]), res.embed(comp[1]), res.embed(comp[2])});
            return;
        }
        for (const auto& t : factors[i]->null_orbits()) {
            const std::size_t np = i == 0 ? 1 : perms.size();
            for (std::size_t s = 0; s < np; ++s) {
                for (int k = 0; k < 3; ++k) comp[static_cast<std::size_t>(k)][i] = t[static_cast<std::size_t>(perms[s][static_cast<std::size_t>(k)])];
                rec(i + 1);
            }
        }
    };
    if (factors.empty())
        triples.push_back({g.identity(), g.identity(), g.identity()});
    else
        rec(0);

    std::string label;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const std::string& l = factors[i]->label();
        label += (i ? " x " : "") + wrap(l, i > 0 && l.find(" x ") != std::string::npos);
    }
    if (factors.empty()) label = "K";
    auto p = std::make_shared<Pasture>(g, triples, label);
    res.pasture = p;
    for (std::size_t j = 0; j < g.rank(); ++j) {
        std::vector<GroupElement> imgs;
        for (std::size_t i = 0; i < factors.size(); ++i) imgs.push_back(res.component(g.generator(j), i));
        res.projection_images.push_back(imgs);
    }
    p->set_notation(std::make_shared<ProductNotation>(factors));
    return res;
}

Pasture product(const Pasture& p, const Pasture& q) {
    return *product_many({std::make_shared<Pasture>(p), std::make_shared<Pasture>(q)}).pasture;
}

GroupElement TensorResult::include(std::size_t i, const GroupElement& x) const {
    std::size_t n = 1, off = 1;
    for (std::size_t j = 0; j < factors.size(); ++j) {
        if (j < i) off += factors[j]->units().rank();
        n += factors[j]->units().rank();
    }
    Word w(n, 0);
    std::copy(x.coords.begin(), x.coords.end(), w.begin() + static_cast<long>(off));
    return pasture->units().project(w);
}

TensorResult tensor_many(const std::vector<PasturePtr>& factors) {
    // Presentation: a leading F1pm sign generator, then each factor's coordinates,
    // with every factor's epsilon identified with the leading sign.
    std::size_t n = 1;
    for (const auto& f : factors) n += f->units().rank();
    std::vector<Word> rows;
    Word first(n, 0);
    first[0] = 2;
    rows.push_back(first);
    std::size_t off = 1;
    for (const auto& f : factors) {
        for (std::size_t i = 0; i < f->units().torsion().size(); ++i) {
            Word r(n, 0);
            r[off + i] = f->units().torsion()[i];
            rows.push_back(r);
        }
        Word e(n, 0);
        e[0] = -1;
        for (std::size_t i = 0; i < f->units().rank(); ++i) e[off + i] = f->epsilon().coords[i];
        rows.push_back(e);
        off += f->units().rank();
    }
    Word eps(n, 0);
    eps[0] = 1;
    AbelianGroup g = AbelianGroup::from_presentation(n, rows, eps);
    TensorResult res;
    res.factors = factors;
    res.pasture = std::make_shared<Pasture>(g, std::vector<Triple>{});
    std::vector<Triple> triples;
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (const auto& t : factors[i]->null_orbits())
            triples.push_back({res.include(i, t[0]), res.include(i, t[1]), res.include(i, t[2])});
    std::string label;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const std::string& l = factors[i]->label();
        bool parens = l.find(" x ") != std::string::npos || (i > 0 && l.find(" ox ") != std::string::npos);
        label += (i ? " ox " : "") + wrap(l, parens);
    }
    if (factors.empty()) label = "F1pm";
    res.pasture = std::make_shared<Pasture>(g, triples, label);
    return res;
}

Pasture tensor(const Pasture& p, const Pasture& q) {
    return *tensor_many({std::make_shared<Pasture>(p), std::make_shared<Pasture>(q)}).pasture;
}

}  // namespace pastures
