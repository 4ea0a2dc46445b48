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
#include "pastures/lifts.hpp"

#include "pastures/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pastures {

namespace {

PasturePtr model(const std::string& name) {
    static const std::map<std::string, PasturePtr> cache = [] {
        std::map<std::string, PasturePtr> m;
        for (const char* n : {"F1pm", "F2", "F3", "D", "H", "U"}) m[n] = std::make_shared<Pasture>(named(n));
        return m;
    }();
    return cache.at(name);
}

GroupElement gen(const Pasture& p, const std::string& name) {
    for (const auto& [n, g] : p.generators())
        if (n == name) return g;
    throw std::logic_error("model has no generator " + name);
}

int kind_rank(HexagonKind k) {
    switch (k) {
        case HexagonKind::Ternary: return 0;
        case HexagonKind::Dyadic: return 1;
        case HexagonKind::Hexagonal: return 2;
        case HexagonKind::NearRegular: return 3;
    }
    return 4;
}

LiftResult tensor_lift(PasturePtr p, bool with_f2, LiftKind kind) {
    auto hex = hexagons(*p);
    std::stable_sort(hex.begin(), hex.end(),
                     [](const Hexagon& a, const Hexagon& b) { return kind_rank(a.kind) < kind_rank(b.kind); });
    std::vector<HexagonLift> parts;
    FactorDescriptor desc;
    for (const auto& h : hex) {
        parts.push_back(hexagon_lift(*p, h));
        switch (h.kind) {
            case HexagonKind::Ternary: ++desc.f3; break;
            case HexagonKind::Dyadic: ++desc.d; break;
            case HexagonKind::Hexagonal: ++desc.h; break;
            case HexagonKind::NearRegular: ++desc.u; break;
        }
    }
    std::vector<PasturePtr> factors;
    if (with_f2) {
        factors.push_back(model("F2"));
        desc.f2 = 1;
    }
    for (const auto& part : parts) factors.push_back(part.model);
    TensorResult t = tensor_many(factors);
    std::vector<GroupElement> gens{t.pasture->epsilon()}, imgs{p->epsilon()};
    const std::size_t offset = with_f2 ? 1 : 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts[i].generators.size(); ++j) {
            gens.push_back(t.include(i + offset, parts[i].generators[j]));
            imgs.push_back(parts[i].images[j]);
        }
    LiftResult r;
    r.lift = t.pasture;
    r.lambda = make_from_generators(t.pasture, p, gens, imgs);
    r.kind = kind;
    r.descriptor = desc;
    return r;
}

}  // namespace

std::string lift_kind_name(LiftKind k) {
    switch (k) {
        case LiftKind::Binary: return "binary";
        case LiftKind::Ternary: return "ternary";
        case LiftKind::WLUM: return "wlum";
        case LiftKind::GRS: return "grs";
    }
    return "?";
}

std::string FactorDescriptor::str() const {
    std::vector<std::string> parts;
    if (f2) parts.push_back("F2");
    if (f3) parts.push_back("F3");
    for (int i = 0; i < d; ++i) parts.push_back("D");
    for (int i = 0; i < h; ++i) parts.push_back("H");
    for (int i = 0; i < u; ++i) parts.push_back("U");
    if (parts.empty()) return "F1pm";
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " ox " : "") + parts[i];
    return s;
}

LiftResult binary_lift(PasturePtr p) {
    LiftResult r;
    r.kind = LiftKind::Binary;
    if (p->units().epsilon_trivial()) {
        r.lift = model("F2");
        r.lambda = make(r.lift, p, {});
    } else {
        r.lift = model("F1pm");
        r.lambda = make(r.lift, p, {p->epsilon()});
    }
    return r;
}

HexagonLift hexagon_lift(const Pasture& p, const Hexagon& xi) {
    if (!is_fundamental(p, xi.canonical_pair) || d3_orbit(p, xi.canonical_pair) != xi.pairs)
        throw HexagonNotOfPasture("hexagon is not a hexagon of " + p.label());
    HexagonLift h;
    const auto& [a, b] = xi.canonical_pair;
    switch (xi.kind) {
        case HexagonKind::Ternary:
            h.model_name = "F3";
            break;
        case HexagonKind::NearRegular:
            h.model_name = "U";
            h.generators = {gen(*model("U"), "x"), gen(*model("U"), "y")};
            h.images = {a, b};
            break;
        case HexagonKind::Hexagonal:
            h.model_name = "H";
            h.generators = {gen(*model("H"), "z")};
            h.images = {a};
            break;
        case HexagonKind::Dyadic: {
            h.model_name = "D";
            h.generators = {gen(*model("D"), "z")};
            auto it = std::find_if(xi.pairs.begin(), xi.pairs.end(), [](const Pair& q) { return q.first == q.second; });
            if (it == xi.pairs.end()) throw std::logic_error("dyadic hexagon without a symmetric pair");
            h.images = {it->first};
            break;
        }
    }
    h.model = model(h.model_name);
    return h;
}

LiftResult ternary_lift(PasturePtr p) { return tensor_lift(p, false, LiftKind::Ternary); }

LiftResult wlum_lift(PasturePtr p) { return tensor_lift(p, p->units().epsilon_trivial(), LiftKind::WLUM); }

LiftResult grs_lift(PasturePtr p, const GrsOptions& opt) {
    const AbelianGroup& g = p->units();
    const auto fund = fundamental_elements(*p);
    if (fund.size() > opt.max_fundamental)
        throw SearchSpaceExceeded(std::to_string(fund.size()) + " fundamental elements exceed the cap of " +
                                  std::to_string(opt.max_fundamental));
    std::map<GroupElement, std::size_t> index;
    std::vector<std::string> names;
    std::set<std::string> used;
    for (std::size_t i = 0; i < fund.size(); ++i) {
        index[fund[i]] = i;
        std::string n = "t[" + p->format(fund[i]) + "]";
        if (!used.insert(n).second) n = "t" + std::to_string(i);
        names.push_back(n);
    }
    Pasture free = free_algebra(named("F1pm"), names);
    const AbelianGroup& fg = free.units();
    std::vector<GroupElement> t;
    for (std::size_t i = 0; i < fund.size(); ++i) t.push_back(free.generators()[i].second);
    auto T = [&](const GroupElement& a) { return t.at(index.at(a)); };
    auto unit = [](const GroupElement& x) { return PastureElement::of(x); };

    std::vector<std::array<PastureElement, 3>> nulls;
    std::vector<std::pair<GroupElement, GroupElement>> ids;
    const GroupElement one = fg.identity(), eps = free.epsilon();
    if (g.epsilon_trivial()) nulls.push_back({unit(one), unit(one), PastureElement::zero()});  // G1
    for (const auto& a : fund) ids.push_back({fg.mul(T(a), T(g.inv(a))), one});                 // G2
    for (const auto& [a, b] : fundamental_pairs(*p)) {
        nulls.push_back({unit(T(a)), unit(T(b)), unit(eps)});  // G3
        GroupElement binv = g.inv(b);
        GroupElement c = g.mul(p->epsilon(), g.inv(g.mul(a, binv)));
        if (!index.count(c)) throw std::logic_error("G4 partner is not fundamental");
        ids.push_back({fg.mul(fg.mul(T(a), T(binv)), T(c)), eps});  // G4
    }
    for (std::size_t i = 0; i < fund.size(); ++i)
        for (std::size_t j = i; j < fund.size(); ++j) {
            GroupElement c = g.inv(g.mul(fund[i], fund[j]));
            auto it = index.find(c);
            if (it == index.end() || it->second < j) continue;
            ids.push_back({fg.mul(fg.mul(t[i], t[j]), t[it->second]), one});  // G5
        }
    Pasture l = quotient(free, nulls, ids);
    l.set_label("Lg(" + p->label() + ")");
    auto lp = std::make_shared<Pasture>(std::move(l));
    std::vector<GroupElement> gens{lp->epsilon()}, imgs{p->epsilon()};
    for (std::size_t i = 0; i < fund.size(); ++i) {
        gens.push_back(lp->generators()[i].second);
        imgs.push_back(fund[i]);
    }
    LiftResult r;
    r.lift = lp;
    r.lambda = make_from_generators(lp, p, gens, imgs);
    r.kind = LiftKind::GRS;
    return r;
}

bool lift_descriptor_iso(const LiftResult& a, const LiftResult& b) {
    auto shaped = [](const LiftResult& r) { return r.kind == LiftKind::Ternary || r.kind == LiftKind::WLUM; };
    if (!shaped(a) || !shaped(b)) throw KindMismatch("descriptor comparison needs ternary or WLUM lifts");
    return a.descriptor == b.descriptor;
}

Pasture model_tensor(const FactorDescriptor& d) {
    std::vector<PasturePtr> f;
    if (d.f2) f.push_back(model("F2"));
    if (d.f3) f.push_back(model("F3"));
    for (int i = 0; i < d.d; ++i) f.push_back(model("D"));
    for (int i = 0; i < d.h; ++i) f.push_back(model("H"));
    for (int i = 0; i < d.u; ++i) f.push_back(model("U"));
    return *tensor_many(f).pasture;
}

bool lambda_bijects_pairs(const LiftResult& r) {
    std::set<Pair> image;
    auto src = fundamental_pairs(*r.lambda.source());
    for (const auto& [a, b] : src) image.insert({r.lambda.apply(a), r.lambda.apply(b)});
    auto tgt = fundamental_pairs(*r.lambda.target());
    return image.size() == src.size() && std::vector<Pair>(image.begin(), image.end()) == tgt;
}

bool lambda_bijects_elements(const LiftResult& r) {
    std::set<GroupElement> image;
    auto src = fundamental_elements(*r.lambda.source());
    for (const auto& a : src) image.insert(r.lambda.apply(a));
    auto tgt = fundamental_elements(*r.lambda.target());
    return image.size() == src.size() && std::vector<GroupElement>(image.begin(), image.end()) == tgt;
}

}  // namespace pastures
