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
#include "pastures/verify.hpp"

#include "pastures/errors.hpp"
#include "pastures/expr.hpp"
#include "pastures/hexagons.hpp"
#include "pastures/lifts.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>

namespace pastures {

bool VerifyReport::passed() const {
    return std::all_of(items.begin(), items.end(), [](const VerifyItem& i) { return i.pass; });
}

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& i : items) arr.push_back({{"name", i.name}, {"pass", i.pass}, {"detail", i.detail}});
    return {{"suite", suite}, {"passed", passed()}, {"items", arr}};
}

namespace {

using Suite = std::function<void(const VerifyOptions&, std::vector<VerifyItem>&)>;

void add(std::vector<VerifyItem>& out, std::string name, bool pass, std::string detail = {}) {
    out.push_back({std::move(name), pass, std::move(detail)});
}

/// Runs body and records an exception as a failed item.
void guarded(std::vector<VerifyItem>& out, const std::string& name, const std::function<void()>& body) {
    try {
        body();
    } catch (const std::exception& e) {
        add(out, name, false, e.what());
    }
}

std::string fq(std::int64_t q) { return "F" + std::to_string(q); }

std::vector<std::int64_t> prime_powers_upto(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t q = 2; q <= n; ++q)
        if (prime_power(q)) out.push_back(q);
    return out;
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s;
}

// Hexagon lists of F_q for q <= 13, each as the six entries (a, b, 1/a, 1/b, -b/a, -a/b)
// in the displayed notation. Elements of F4, F8, F9 are powers of the primitive
// element a; the ternary hexagon of F9 consists of -1 = a^4.
struct GoldenHexagon {
    HexagonKind kind;
    std::vector<std::string> entries;
};

const std::map<std::int64_t, std::vector<GoldenHexagon>>& golden_hexagons() {
    using K = HexagonKind;
    static const std::map<std::int64_t, std::vector<GoldenHexagon>> g = {
        {2, {}},
        {3, {{K::Ternary, {"2", "2", "2", "2", "2", "2"}}}},
        {4, {{K::Hexagonal, {"a", "a^2", "a^2", "a", "a", "a^2"}}}},
        {5, {{K::Dyadic, {"3", "3", "2", "2", "4", "4"}}}},
        {7, {{K::Dyadic, {"4", "4", "2", "2", "6", "6"}}, {K::Hexagonal, {"3", "5", "5", "3", "3", "5"}}}},
        {8, {{K::NearRegular, {"a", "a^3", "a^6", "a^4", "a^2", "a^5"}}}},
        {9,
         {{K::Ternary, {"a^4", "a^4", "a^4", "a^4", "a^4", "a^4"}},
          {K::NearRegular, {"a", "a^2", "a^7", "a^6", "a^3", "a^5"}}}},
        {11, {{K::Dyadic, {"6", "6", "2", "2", "10", "10"}}, {K::NearRegular, {"3", "9", "4", "5", "8", "7"}}}},
        {13,
         {{K::Dyadic, {"7", "7", "2", "2", "12", "12"}},
          {K::Hexagonal, {"4", "10", "10", "4", "4", "10"}},
          {K::NearRegular, {"3", "11", "9", "6", "5", "8"}}}},
    };
    return g;
}

int mu_of(HexagonKind k) {
    switch (k) {
        case HexagonKind::Ternary: return 1;
        case HexagonKind::Hexagonal: return 2;
        case HexagonKind::Dyadic: return 3;
        case HexagonKind::NearRegular: return 6;
    }
    return 0;
}

void suite_hex_lists(const VerifyOptions&, std::vector<VerifyItem>& out) {
    for (const auto& [q, golden] : golden_hexagons()) {
        const std::string name = fq(q);
        guarded(out, name, [&] {
            auto p = evaluate_pasture(name);
            auto hs = hexagons(*p);
            using Sig = std::tuple<HexagonKind, int, std::vector<std::string>>;
            std::vector<Sig> got, want;
            for (const auto& h : hs) {
                auto six = ordered_hexagon(*p, h.canonical_pair);
                std::vector<std::string> e;
                for (const auto& x : six) e.push_back(p->format(x));
                std::sort(e.begin(), e.end());
                got.emplace_back(h.kind, h.mu, e);
            }
            for (const auto& g : golden) {
                auto e = g.entries;
                std::sort(e.begin(), e.end());
                want.emplace_back(g.kind, mu_of(g.kind), e);
            }
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            std::string detail;
            for (const auto& [k, mu, e] : got) detail += kind_name(k) + " mu=" + std::to_string(mu) + " {" + join(e) + "} ";
            add(out, name, got == want, detail.empty() ? "no hexagons" : detail);
        });
    }
}

// Rows of the table of hexagon types by q mod 6: dyadic, hexagonal, ternary.
struct TypeRow {
    bool dyadic, hexagonal, ternary;
};

void suite_table1(const VerifyOptions& opt, std::vector<VerifyItem>& out) {
    static const std::map<int, TypeRow> rows = {
        {1, {true, true, false}}, {2, {false, false, false}}, {3, {false, false, true}},
        {4, {false, true, false}}, {5, {true, false, false}},
    };
    for (std::int64_t q : prime_powers_upto(opt.max_q)) {
        guarded(out, fq(q), [&] {
            const TypeRow& row = rows.at(static_cast<int>(q % 6));
            Census c = census(hexagons(*evaluate_pasture(fq(q))));
            const int nr = static_cast<int>((q - 2) / 6);
            bool ok = (c.dyadic > 0) == row.dyadic && (c.hexagonal > 0) == row.hexagonal &&
                      (c.ternary > 0) == row.ternary && c.near_regular == nr && c.dyadic <= 1 && c.hexagonal <= 1 &&
                      c.ternary <= 1;
            add(out, fq(q), ok,
                "dyadic " + std::to_string(c.dyadic) + ", hexagonal " + std::to_string(c.hexagonal) + ", ternary " +
                    std::to_string(c.ternary) + ", near-regular " + std::to_string(c.near_regular) + " (expected " +
                    std::to_string(nr) + ")");
        });
    }
}

void suite_nullsets(const VerifyOptions& opt, std::vector<VerifyItem>& out) {
    std::vector<std::string> corpus = {"F1pm", "K", "S", "W", "U", "D", "H", "G"};
    for (std::int64_t q : prime_powers_upto(opt.max_q)) corpus.push_back(fq(q));
    for (const auto& name : corpus) {
        guarded(out, name, [&] {
            auto p = evaluate_pasture(name);
            auto hs = hexagons(*p);
            std::size_t mu_sum = 0;
            for (const auto& h : hs) mu_sum += static_cast<std::size_t>(h.mu);
            const std::size_t pairs = fundamental_pairs(*p).size();
            bool ok = p->null_orbits().size() == hs.size() && mu_sum == pairs;
            add(out, name, ok,
                std::to_string(p->null_orbits().size()) + " null orbits, " + std::to_string(hs.size()) +
                    " hexagons, sum of mu " + std::to_string(mu_sum) + ", " + std::to_string(pairs) +
                    " fundamental pairs");
        });
    }
}

void suite_table2(const VerifyOptions&, std::vector<VerifyItem>& out) {
    static const std::map<std::pair<int, int>, std::vector<int>> table = {
        {{1, 1}, {1}},       {{1, 2}, {2}},       {{1, 3}, {3}},          {{1, 6}, {6}},
        {{2, 2}, {2, 2}},    {{2, 3}, {6}},       {{2, 6}, {6, 6}},       {{3, 3}, {3, 6}},
        {{3, 6}, {6, 6, 6}}, {{6, 6}, {6, 6, 6, 6, 6, 6}},
    };
    const std::vector<std::string> witnesses = {"F3", "F4", "F5", "F8"};
    auto check_pair = [&](const std::string& a, const std::string& b) {
        const std::string name = a + " x " + b;
        guarded(out, name, [&] {
            PsiResult r = psi_product(*evaluate_pasture(a), *evaluate_pasture(b));
            bool ok = true;
            std::string detail;
            for (std::size_t i = 0; i < r.left.size(); ++i)
                for (std::size_t j = 0; j < r.right.size(); ++j) {
                    int m1 = r.left[i].mu, m2 = r.right[j].mu;
                    auto it = r.fibers.find({i, j});
                    std::vector<int> got = it == r.fibers.end() ? std::vector<int>{} : it->second;
                    const auto& want = table.at({std::min(m1, m2), std::max(m1, m2)});
                    ok = ok && got == want;
                    std::vector<std::string> s;
                    for (int m : got) s.push_back(std::to_string(m));
                    detail += "(" + std::to_string(m1) + "," + std::to_string(m2) + ") -> (" + join(s) + ") ";
                }
            add(out, name, ok, detail);
        });
    };
    for (std::size_t i = 0; i < witnesses.size(); ++i)
        for (std::size_t j = i; j < witnesses.size(); ++j) check_pair(witnesses[i], witnesses[j]);
    check_pair("S", "S");
    guarded(out, "S x S hexagon types", [&] {
        Census c = census(hexagons(*evaluate_pasture("S x S")));
        bool ok = c == Census{1, 0, 0, 1};
        add(out, "S x S hexagon types", ok,
            "dyadic " + std::to_string(c.dyadic) + ", near-regular " + std::to_string(c.near_regular) +
                ", other " + std::to_string(c.hexagonal + c.ternary));
    });
}

FactorDescriptor descriptor(int u, int d, int h, int f3, int f2) { return {u, d, h, f3, f2}; }

void suite_lift_table(const VerifyOptions& opt, std::vector<VerifyItem>& out) {
    const std::vector<std::tuple<std::string, std::string, FactorDescriptor>> rows = {
        {"Lt", "F2", descriptor(0, 0, 0, 0, 0)},  {"Lt", "F4", descriptor(0, 0, 1, 0, 0)},
        {"Lt", "F5", descriptor(0, 1, 0, 0, 0)},  {"Lt", "F7", descriptor(0, 1, 1, 0, 0)},
        {"Lt", "F8", descriptor(1, 0, 0, 0, 0)},  {"Lt", "F9", descriptor(1, 0, 0, 1, 0)},
        {"Lt", "F11", descriptor(1, 1, 0, 0, 0)}, {"Lt", "F13", descriptor(1, 1, 1, 0, 0)},
        {"Lt", "G", descriptor(1, 0, 0, 0, 0)},   {"Lt", "S", descriptor(0, 1, 0, 0, 0)},
        {"Lt", "W", descriptor(0, 1, 0, 1, 0)},   {"Lt", "K", descriptor(0, 0, 0, 1, 0)},
        {"Lw", "F4", descriptor(0, 0, 1, 0, 1)},  {"Lw", "F8", descriptor(1, 0, 0, 0, 1)},
    };
    for (const auto& [op, src, want] : rows) {
        const std::string name = op + "(" + src + ")";
        guarded(out, name, [&] {
            Evaluated e = evaluate(*parse(name));
            const FactorDescriptor got = *e.lift->descriptor;
            IsoResult iso = iso_check(e.pasture, std::make_shared<Pasture>(model_tensor(want)), opt.hom);
            bool ok = got == want && iso.status == IsoStatus::Iso && lambda_bijects_pairs(*e.lift);
            add(out, name, ok,
                got.str() + " (expected " + want.str() + "), iso to model: " +
                    (iso.status == IsoStatus::Iso ? "yes" : iso.status == IsoStatus::NotIso ? "no" : "unknown"));
        });
    }
}

std::string iso_word(IsoStatus s) {
    switch (s) {
        case IsoStatus::Iso: return "iso";
        case IsoStatus::NotIso: return "not iso";
        case IsoStatus::Unknown: return "unknown";
    }
    return "?";
}

void suite_glift(const VerifyOptions& opt, std::vector<VerifyItem>& out) {
    for (const auto& [expr, target] : std::vector<std::pair<std::string, std::string>>{
             {"Lg(F4 x F5)", "G"}, {"Lg(F5)", "F5"}, {"Lg(K)", "K"}}) {
        const std::string name = expr + " ~ " + target;
        guarded(out, name, [&] {
            Evaluated e = evaluate(*parse(expr));
            IsoResult r = iso_check(e.pasture, evaluate_pasture(target), opt.hom);
            bool ok = r.status == IsoStatus::Iso && lambda_bijects_elements(*e.lift);
            add(out, name, ok, e.pasture->units().describe() + ", " + iso_word(r.status) + " " + r.reason);
        });
    }
}

void suite_idempotence(const VerifyOptions&, std::vector<VerifyItem>& out) {
    std::vector<std::string> corpus = {"F1pm", "K", "S", "W", "U", "D", "H", "G"};
    for (std::int64_t q : prime_powers_upto(13)) corpus.push_back(fq(q));
    corpus.push_back("F4 x F5");
    corpus.push_back("S x S");
    const std::vector<std::pair<std::string, std::function<LiftResult(PasturePtr)>>> kinds = {
        {"ternary", [](PasturePtr p) { return ternary_lift(std::move(p)); }},
        {"wlum", [](PasturePtr p) { return wlum_lift(std::move(p)); }},
        {"grs", [](PasturePtr p) { return grs_lift(std::move(p)); }},
    };
    for (const auto& [kname, lift] : kinds)
        for (const auto& p : corpus) {
            const std::string name = kname + " " + p;
            guarded(out, name, [&] {
                LiftResult once = lift(evaluate_pasture(p));
                LiftResult twice = lift(once.lift);
                add(out, name, is_isomorphism(twice.lambda), once.lift->units().describe());
            });
        }
}

void suite_universal(const VerifyOptions& opt, std::vector<VerifyItem>& out) {
    const std::vector<std::pair<std::string, std::string>> sources = {{"F3", "Lt"}, {"H", "Lt"}, {"F2 ox H", "Lw"}};
    for (const auto& [l, op] : sources)
        for (const std::string p : {"F4", "F5", "F7", "F4 x F5"}) {
            const std::string name = l + " -> " + p + " through " + op;
            guarded(out, name, [&] {
                PasturePtr src = evaluate_pasture(l);
                PasturePtr tgt = evaluate_pasture(p);
                Evaluated lifted = evaluate(*parse(op + "(" + p + ")"));
                const PastureMorphism& lambda = lifted.lift->lambda;
                auto phis = hom_set(src, tgt, opt.hom);
                auto hats = hom_set(src, lifted.pasture, opt.hom);
                bool ok = true;
                for (const auto& phi : phis) {
                    std::size_t count = 0;
                    for (const auto& hat : hats)
                        if (compose(lambda, hat) == phi) ++count;
                    ok = ok && count == 1;
                }
                add(out, name, ok,
                    std::to_string(phis.size()) + " morphisms, " + std::to_string(hats.size()) + " into the lift");
            });
        }
}

void suite_matroid(const VerifyOptions& opt, std::vector<VerifyItem>& out) {
    const Matroid u24 = Matroid::uniform(2, 4);
    std::map<std::int64_t, std::size_t> count;
    for (std::int64_t q : {4, 5, 7, 8}) {
        const std::string name = "U(2,4) over " + fq(q);
        guarded(out, name, [&] {
            count[q] = representation_classes(u24, *evaluate_pasture(fq(q)), opt.rep).size();
            add(out, name, count[q] == static_cast<std::size_t>(q - 2),
                std::to_string(count[q]) + " classes, expected " + std::to_string(q - 2));
        });
    }
    if (count.size() == 4)
        add(out, "U(2,4): F8 = F4 x F5", count[8] == count[4] * count[5],
            std::to_string(count[8]) + " vs " + std::to_string(count[4]) + " * " + std::to_string(count[5]));
    for (const auto& [op, label] : std::vector<std::pair<std::string, std::string>>{{"Lt", "H"}, {"Lw", "F2 ox H"}}) {
        const std::string name = "U(2,4) lift " + label + " -> F4";
        guarded(out, name, [&] {
            Evaluated e = evaluate(*parse(op + "(F4)"));
            BijectionReport r = lift_bijection_check(u24, *e.lift, opt.rep);
            add(out, name, r.ok,
                std::to_string(r.lift_classes) + " classes over the lift, " + std::to_string(r.source_classes) +
                    " over F4 " + r.detail);
        });
    }
    for (std::int64_t q : {3, 5}) {
        const std::string name = "M(K4) over " + fq(q);
        guarded(out, name, [&] {
            std::size_t n = representation_classes(Matroid::k4(), *evaluate_pasture(fq(q)), opt.rep).size();
            add(out, name, n == 1, std::to_string(n) + " classes");
        });
    }
}

void suite_triples(const VerifyOptions& opt, std::vector<VerifyItem>& out) {
    static const std::int64_t triples[30][3] = {
        {8, 4, 5},     {29, 5, 11},  {47, 5, 17},  {83, 5, 29},   {125, 5, 43},   {137, 11, 17},
        {11, 5, 5},    {32, 4, 17},  {47, 7, 11},  {83, 11, 11},  {128, 8, 23},   {149, 9, 23},
        {16, 4, 9},    {32, 5, 11},  {51, 5, 19},  {89, 5, 31},   {128, 11, 16},  {163, 9, 25},
        {17, 5, 7},    {32, 7, 8},   {71, 5, 25},  {101, 11, 13}, {137, 5, 47},   {167, 13, 17},
        {23, 5, 9},    {37, 7, 9},   {79, 9, 13},  {121, 9, 19},  {137, 7, 29},   {173, 5, 59},
    };
    static const std::vector<std::int64_t> featured = {8, 29, 32, 53};
    auto lift_identity = [&](std::int64_t q, std::int64_t p1, std::int64_t p2) {
        const std::string name = "Lt(" + fq(q) + ") = Lt(" + fq(p1) + " x " + fq(p2) + ")";
        guarded(out, name, [&] {
            Evaluated a = evaluate(*parse("Lt(" + fq(q) + ")"));
            Evaluated b = evaluate(*parse("Lt(" + fq(p1) + " x " + fq(p2) + ")"));
            add(out, name, lift_descriptor_iso(*a.lift, *b.lift),
                a.lift->descriptor->str() + " vs " + b.lift->descriptor->str());
        });
    };
    for (const auto& t : triples) {
        const std::int64_t q = t[0], p1 = t[1], p2 = t[2];
        const std::string name = "(" + std::to_string(q) + "," + std::to_string(p1) + "," + std::to_string(p2) + ")";
        const bool eq = q == (p1 - 2) * (p2 - 2) + 2;
        const bool pp = prime_power(q) && prime_power(p1) && prime_power(p2);
        const bool three = q % 3 != 0;
        std::string detail = "(p1-2)(p2-2)+2 = " + std::to_string((p1 - 2) * (p2 - 2) + 2);
        if (!pp) detail += ", not all prime powers";
        if (!three) detail += ", 3 divides q";
        add(out, name, eq && pp && three, detail);
        const bool is_featured = std::find(featured.begin(), featured.end(), q) != featured.end();
        if (eq && pp && (is_featured || q <= opt.max_q)) lift_identity(q, p1, p2);
    }
    // (53, 5, 19) is not among the rows above but is featured, so check it directly.
    lift_identity(53, 5, 19);
}

const std::vector<std::pair<std::string, Suite>>& suites() {
    static const std::vector<std::pair<std::string, Suite>> s = {
        {"hex-lists", suite_hex_lists},   {"table1", suite_table1},   {"nullsets", suite_nullsets},
        {"table2", suite_table2},         {"lift-table", suite_lift_table}, {"glift", suite_glift},
        {"idempotence", suite_idempotence}, {"universal", suite_universal}, {"matroid", suite_matroid},
        {"triples", suite_triples},
    };
    return s;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, fn] : suites()) n.push_back(name);
        return n;
    }();
    return names;
}

VerifyReport verify(const std::string& suite, const VerifyOptions& opt) {
    VerifyReport r;
    r.suite = suite;
    bool found = false;
    for (const auto& [name, fn] : suites())
        if (suite == "all" || suite == name) {
            found = true;
            std::vector<VerifyItem> items;
            fn(opt, items);
            for (auto& i : items) {
                if (suite == "all") i.name = name + ": " + i.name;
                r.items.push_back(std::move(i));
            }
        }
    if (!found) throw std::invalid_argument("unknown suite '" + suite + "'");
    return r;
}

}  // namespace pastures
