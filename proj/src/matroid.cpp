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
#include "pastures/matroid.hpp"

#include "pastures/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace pastures {

// ------------------------------------------------------------------ Matroid

Matroid Matroid::from_bases(int n, int r, std::vector<std::vector<int>> bases) {
    if (n < 0 || r < 0 || r > n) throw InvalidMatroid("rank must lie between 0 and n");
    if (bases.empty()) throw InvalidMatroid("a matroid has at least one basis");
    for (auto& b : bases) {
        if (static_cast<int>(b.size()) != r) throw InvalidMatroid("every basis must have exactly r elements");
        std::sort(b.begin(), b.end());
        if (std::adjacent_find(b.begin(), b.end()) != b.end()) throw InvalidMatroid("repeated element in a basis");
        for (int e : b)
            if (e < 1 || e > n) throw InvalidMatroid("element " + std::to_string(e) + " outside 1.." + std::to_string(n));
    }
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    Matroid m;
    m.n_ = n;
    m.r_ = r;
    m.bases_ = std::move(bases);
    auto show = [](const std::vector<int>& b) {
        std::string s = "{";
        for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
        return s + "}";
    };
    for (const auto& b1 : m.bases_)
        for (const auto& b2 : m.bases_)
            for (int x : b1) {
                if (std::binary_search(b2.begin(), b2.end(), x)) continue;
                bool found = false;
                for (int y : b2) {
                    if (std::binary_search(b1.begin(), b1.end(), y)) continue;
                    std::vector<int> c = b1;
                    c.erase(std::find(c.begin(), c.end(), x));
                    c.push_back(y);
                    std::sort(c.begin(), c.end());
                    if (m.basis_index(c) >= 0) {
                        found = true;
                        break;
                    }
                }
                if (!found)
                    throw ExchangeAxiomViolation("B1 = " + show(b1) + ", B2 = " + show(b2) + ", x = " + std::to_string(x));
            }
    return m;
}

Matroid Matroid::uniform(int r, int n) {
    std::vector<std::vector<int>> bases;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == r) {
            bases.push_back(cur);
            return;
        }
        for (int e = start; e <= n; ++e) {
            cur.push_back(e);
            rec(e + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return from_bases(n, r, bases);
}

Matroid Matroid::k4() {
    // Edges 1:12 2:13 3:14 4:23 5:24 6:34; bases are the spanning trees.
    const int edges[6][2] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    std::vector<std::vector<int>> bases;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c) {
                std::vector<int> parent{0, 1, 2, 3, 4};
                std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
                bool acyclic = true;
                for (int e : {a, b, c}) {
                    int u = find(edges[e][0]), v = find(edges[e][1]);
                    if (u == v) acyclic = false;
                    parent[u] = v;
                }
                if (acyclic) bases.push_back({a + 1, b + 1, c + 1});
            }
    return from_bases(6, 3, bases);
}

int Matroid::basis_index(const std::vector<int>& sorted) const {
    auto it = std::lower_bound(bases_.begin(), bases_.end(), sorted);
    if (it == bases_.end() || *it != sorted) return -1;
    return static_cast<int>(it - bases_.begin());
}

Matroid matroid_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidMatroid(std::string("malformed JSON: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("rank") || !j.contains("bases"))
        throw InvalidMatroid("expected fields n, rank, bases");
    return Matroid::from_bases(j["n"].get<int>(), j["rank"].get<int>(), j["bases"].get<std::vector<std::vector<int>>>());
}

// --------------------------------------------------------- Plucker relations

namespace {

struct Term {
    int b1 = -1, b2 = -1;
    bool negative = false;
    bool zero() const { return b1 < 0 || b2 < 0; }
};

struct Relation3 {
    std::vector<int> j;
    std::array<int, 4> e;
    std::array<Term, 3> terms;
};

std::vector<Relation3> plucker_relations(const Matroid& m) {
    std::vector<Relation3> out;
    const int n = m.n(), r = m.rank();
    if (r < 2 || n < r + 2) return out;
    auto basis_of = [&](const std::vector<int>& j, int a, int b, bool& parity) {
        std::vector<int> s = j;
        int gt = 0;
        for (int x : j) gt += (x > a) + (x > b);
        parity = gt % 2 != 0;
        s.push_back(a);
        s.push_back(b);
        std::sort(s.begin(), s.end());
        return m.basis_index(s);
    };
    std::vector<int> j;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(j.size()) == r - 2) {
            std::vector<int> rest;
            for (int e = 1; e <= n; ++e)
                if (!std::binary_search(j.begin(), j.end(), e)) rest.push_back(e);
            const std::size_t k = rest.size();
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = a + 1; b < k; ++b)
                    for (std::size_t c = b + 1; c < k; ++c)
                        for (std::size_t d = c + 1; d < k; ++d) {
                            Relation3 rel;
                            rel.j = j;
                            rel.e = {rest[a], rest[b], rest[c], rest[d]};
                            const int pairs[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
                            bool any = false;
                            for (int t = 0; t < 3; ++t) {
                                bool p1, p2;
                                Term term;
                                term.b1 = basis_of(j, rel.e[pairs[t][0]], rel.e[pairs[t][1]], p1);
                                term.b2 = basis_of(j, rel.e[pairs[t][2]], rel.e[pairs[t][3]], p2);
                                term.negative = (p1 != p2) != (t == 1);
                                rel.terms[static_cast<std::size_t>(t)] = term;
                                any = any || !term.zero();
                            }
                            if (any) out.push_back(rel);
                        }
            return;
        }
        for (int e = start; e <= n; ++e) {
            j.push_back(e);
            rec(e + 1);
            j.pop_back();
        }
    };
    rec(1);
    return out;
}

/// Dense tables for a finite pasture.
struct FiniteView {
    std::size_t n = 0;
    std::vector<std::uint32_t> mul, inv;
    std::uint32_t eps = 0, one = 0;
    std::vector<char> null1;  // null1[x * n + y]: 1 + x + y null

    explicit FiniteView(const Pasture& p) {
        const AbelianGroup& g = p.units();
        if (!g.is_finite()) throw InfinitePasture("representations need a finite pasture");
        n = static_cast<std::size_t>(g.order());
        std::vector<GroupElement> el(n);
        for (std::size_t i = 0; i < n; ++i) el[i] = g.element_at(i);
        mul.resize(n * n);
        inv.resize(n);
        null1.resize(n * n);
        for (std::size_t a = 0; a < n; ++a) {
            inv[a] = static_cast<std::uint32_t>(g.index_of(g.inv(el[a])));
            for (std::size_t b = 0; b < n; ++b) {
                mul[a * n + b] = static_cast<std::uint32_t>(g.index_of(g.mul(el[a], el[b])));
                null1[a * n + b] = p.null_units(g.identity(), el[a], el[b]);
            }
        }
        eps = static_cast<std::uint32_t>(g.index_of(p.epsilon()));
        one = static_cast<std::uint32_t>(g.index_of(g.identity()));
    }

    std::uint32_t m(std::uint32_t a, std::uint32_t b) const { return mul[a * n + b]; }

    bool null3(int k, const std::uint32_t* v) const {
        switch (k) {
            case 0: return true;
            case 1: return false;
            case 2: return v[1] == m(eps, v[0]);
            default: {
                std::uint32_t s = inv[v[0]];
                return null1[m(s, v[1]) * n + m(s, v[2])];
            }
        }
    }

    bool relation_holds(const Relation3& rel, const std::vector<std::uint32_t>& val) const {
        std::uint32_t v[3];
        int k = 0;
        for (const auto& t : rel.terms) {
            if (t.zero()) continue;
            std::uint32_t x = m(val[static_cast<std::size_t>(t.b1)], val[static_cast<std::size_t>(t.b2)]);
            if (t.negative) x = m(x, eps);
            v[k++] = x;
        }
        return null3(k, v);
    }
};

/// Spanning-forest normalization data: fixed basis indices and tree edges.
struct Forest {
    std::vector<int> fixed;                          // sorted basis indices fixed to 1
    std::vector<std::tuple<int, int, int>> edges;    // (from element, to element, basis index) in BFS order
    std::vector<int> roots;
};

Forest spanning_forest(const Matroid& m) {
    Forest f;
    const auto& b0 = m.bases().front();
    f.fixed.push_back(0);
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(m.n() + 1));
    for (int e : b0)
        for (int x = 1; x <= m.n(); ++x) {
            if (std::binary_search(b0.begin(), b0.end(), x)) continue;
            std::vector<int> c = b0;
            c.erase(std::find(c.begin(), c.end(), e));
            c.push_back(x);
            std::sort(c.begin(), c.end());
            int idx = m.basis_index(c);
            if (idx < 0) continue;
            adj[static_cast<std::size_t>(e)].push_back({x, idx});
            adj[static_cast<std::size_t>(x)].push_back({e, idx});
        }
    std::vector<char> seen(static_cast<std::size_t>(m.n() + 1), 0);
    for (int s = 1; s <= m.n(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        seen[static_cast<std::size_t>(s)] = 1;
        f.roots.push_back(s);
        std::vector<int> queue{s};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (auto [v, idx] : adj[static_cast<std::size_t>(u)]) {
                if (seen[static_cast<std::size_t>(v)]) continue;
                seen[static_cast<std::size_t>(v)] = 1;
                f.edges.emplace_back(u, v, idx);
                f.fixed.push_back(idx);
                queue.push_back(v);
            }
        }
    }
    std::sort(f.fixed.begin(), f.fixed.end());
    return f;
}

/// All Plucker-compatible assignments with the given bases fixed to 1.
std::vector<std::vector<std::uint32_t>> search(const Matroid& m, const FiniteView& view, const std::vector<int>& fixed,
                                               std::uint64_t cap, unsigned threads) {
    const std::size_t nb = m.bases().size();
    std::vector<int> free;
    for (std::size_t i = 0; i < nb; ++i)
        if (!std::binary_search(fixed.begin(), fixed.end(), static_cast<int>(i))) free.push_back(static_cast<int>(i));
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free.size(); ++i)
        if (__builtin_mul_overflow(total, static_cast<std::uint64_t>(view.n), &total) || total > cap)
            throw SearchSpaceExceeded(std::to_string(view.n) + "^" + std::to_string(free.size()) +
                                      " assignments exceed the cap of " + std::to_string(cap));

    // depth[b] = search depth at which basis b becomes known.
    std::vector<int> depth(nb, 0);
    for (std::size_t i = 0; i < free.size(); ++i) depth[static_cast<std::size_t>(free[i])] = static_cast<int>(i) + 1;
    auto relations = plucker_relations(m);
    std::vector<std::vector<const Relation3*>> at(free.size() + 1);
    for (const auto& rel : relations) {
        int d = 0;
        for (const auto& t : rel.terms)
            if (!t.zero()) d = std::max({d, depth[static_cast<std::size_t>(t.b1)], depth[static_cast<std::size_t>(t.b2)]});
        at[static_cast<std::size_t>(d)].push_back(&rel);
    }
    std::vector<std::uint32_t> base(nb, view.one);
    for (const auto* rel : at[0])
        if (!view.relation_holds(*rel, base)) return {};
    if (free.empty()) return {base};

    auto run = [&](std::uint32_t first_value, std::vector<std::vector<std::uint32_t>>& out) {
        std::vector<std::uint32_t> val = base;
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == free.size()) {
                out.push_back(val);
                return;
            }
            for (std::uint32_t x = (i == 0 ? first_value : 0); x < (i == 0 ? first_value + 1 : view.n); ++x) {
                val[static_cast<std::size_t>(free[i])] = x;
                bool ok = true;
                for (const auto* rel : at[i + 1])
                    if (!view.relation_holds(*rel, val)) {
                        ok = false;
                        break;
                    }
                if (ok) rec(i + 1);
            }
        };
        rec(0);
    };
    std::vector<std::vector<std::vector<std::uint32_t>>> parts(view.n);
    const unsigned nt = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(view.n)));
    if (nt == 1) {
        for (std::uint32_t x = 0; x < view.n; ++x) run(x, parts[x]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nt; ++t)
            pool.emplace_back([&, t] {
                for (std::uint32_t x = t; x < view.n; x += nt) run(x, parts[x]);
            });
        for (auto& th : pool) th.join();
    }
    std::vector<std::vector<std::uint32_t>> out;
    for (auto& p : parts)
        for (auto& v : p) out.push_back(std::move(v));
    return out;
}

Representation to_rep(const Pasture& p, const std::vector<std::uint32_t>& val) {
    Representation r;
    for (auto x : val) r.values.push_back(p.units().element_at(x));
    return r;
}

}  // namespace

std::optional<PluckerViolation> plucker_check(const Matroid& m, const Pasture& p, const Representation& delta) {
    if (delta.values.size() != m.bases().size()) throw InvalidMatroid("one value per basis expected");
    const AbelianGroup& g = p.units();
    for (const auto& rel : plucker_relations(m)) {
        std::array<PastureElement, 3> v;
        for (std::size_t t = 0; t < 3; ++t) {
            const auto& term = rel.terms[t];
            if (term.zero()) continue;
            GroupElement x = g.mul(delta.values[static_cast<std::size_t>(term.b1)], delta.values[static_cast<std::size_t>(term.b2)]);
            if (term.negative) x = g.mul(x, p.epsilon());
            v[t] = PastureElement::of(x);
        }
        if (!p.null_contains(v[0], v[1], v[2])) return PluckerViolation{rel.j, rel.e};
    }
    return std::nullopt;
}

Representation rescale(const Matroid& m, const Pasture& p, const Representation& delta, const GroupElement& c,
                       const std::vector<GroupElement>& d) {
    const AbelianGroup& g = p.units();
    Representation out;
    for (std::size_t i = 0; i < m.bases().size(); ++i) {
        GroupElement x = g.mul(c, delta.values[i]);
        for (int e : m.bases()[i]) x = g.mul(x, d[static_cast<std::size_t>(e - 1)]);
        out.values.push_back(x);
    }
    return out;
}

Representation normalize(const Matroid& m, const Pasture& p, const Representation& delta) {
    const AbelianGroup& g = p.units();
    Forest f = spanning_forest(m);
    std::vector<GroupElement> d(static_cast<std::size_t>(m.n()), g.identity());
    const GroupElement& v0 = delta.values[0];
    const auto& b0 = m.bases().front();
    for (const auto& [from, to, idx] : f.edges) {
        const GroupElement& v = delta.values[static_cast<std::size_t>(idx)];
        const GroupElement& dfrom = d[static_cast<std::size_t>(from - 1)];
        // d(f)/d(e) = Delta(B0) / Delta(B0 - e + f) with e in B0.
        if (std::binary_search(b0.begin(), b0.end(), from))
            d[static_cast<std::size_t>(to - 1)] = g.mul(dfrom, g.div(v0, v));
        else
            d[static_cast<std::size_t>(to - 1)] = g.mul(dfrom, g.div(v, v0));
    }
    GroupElement c = v0;
    for (int e : b0) c = g.mul(c, d[static_cast<std::size_t>(e - 1)]);
    return rescale(m, p, delta, g.inv(c), d);
}

std::vector<Representation> representation_classes(const Matroid& m, const Pasture& p, const RepOptions& opt) {
    FiniteView view(p);
    Forest f = spanning_forest(m);
    std::vector<Representation> out;
    for (const auto& v : search(m, view, f.fixed, opt.max_candidates, opt.threads)) out.push_back(to_rep(p, v));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Representation>> representation_orbits_by_closure(const Matroid& m, const Pasture& p,
                                                                          std::uint64_t max_group) {
    FiniteView view(p);
    std::uint64_t group = 1;
    for (int i = 0; i < m.n(); ++i)
        if (__builtin_mul_overflow(group, static_cast<std::uint64_t>(view.n), &group) || group > max_group)
            throw SearchSpaceExceeded("rescaling group larger than " + std::to_string(max_group));
    auto accepted = search(m, view, {0}, 1000000000ULL, 1);
    std::map<std::vector<std::uint32_t>, std::size_t> index;
    for (std::size_t i = 0; i < accepted.size(); ++i) index[accepted[i]] = i;
    std::vector<std::size_t> parent(accepted.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    const std::size_t nb = m.bases().size();
    std::vector<std::uint32_t> d(static_cast<std::size_t>(m.n()), 0);
    for (std::uint64_t code = 0; code < group; ++code) {
        std::uint64_t c = code;
        for (auto& x : d) {
            x = static_cast<std::uint32_t>(c % view.n);
            c /= view.n;
        }
        std::vector<std::uint32_t> scale(nb);
        for (std::size_t b = 0; b < nb; ++b) {
            std::uint32_t s = view.one;
            for (int e : m.bases()[b]) s = view.m(s, d[static_cast<std::size_t>(e - 1)]);
            scale[b] = s;
        }
        const std::uint32_t renorm = view.inv[scale[0]];
        for (std::size_t i = 0; i < accepted.size(); ++i) {
            std::vector<std::uint32_t> img(nb);
            for (std::size_t b = 0; b < nb; ++b) img[b] = view.m(renorm, view.m(scale[b], accepted[i][b]));
            auto it = index.find(img);
            if (it == index.end()) throw std::logic_error("rescaling left the accepted set");
            parent[find(i)] = find(it->second);
        }
    }
    std::map<std::size_t, std::vector<Representation>> orbits;
    for (std::size_t i = 0; i < accepted.size(); ++i) orbits[find(i)].push_back(to_rep(p, accepted[i]));
    std::vector<std::vector<Representation>> out;
    for (auto& [k, v] : orbits) {
        std::sort(v.begin(), v.end());
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

BijectionReport lift_bijection_check(const Matroid& m, const LiftResult& lift, const RepOptions& opt) {
    const Pasture& l = *lift.lambda.source();
    const Pasture& p = *lift.lambda.target();
    auto over_lift = representation_classes(m, l, opt);
    auto over_source = representation_classes(m, p, opt);
    BijectionReport rep;
    rep.lift_classes = over_lift.size();
    rep.source_classes = over_source.size();
    std::set<Representation> hit;
    for (const auto& r : over_lift) {
        Representation push;
        for (const auto& x : r.values) push.values.push_back(lift.lambda.apply(x));
        push = normalize(m, p, push);
        if (!std::binary_search(over_source.begin(), over_source.end(), push)) {
            rep.ok = false;
            rep.detail = "a class over the lift maps outside the classes over the source";
            return rep;
        }
        if (!hit.insert(push).second) {
            rep.ok = false;
            rep.detail = "two classes over the lift map to the same class";
            return rep;
        }
    }
    if (hit.size() != over_source.size()) {
        rep.ok = false;
        rep.detail = std::to_string(over_source.size() - hit.size()) + " classes over the source have no lift";
    }
    return rep;
}

}  // namespace pastures
