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
#include "pastures/group.hpp"

#include "pastures/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pastures {

namespace {

using Mat = std::vector<std::vector<BigInt>>;

Mat identity_matrix(std::size_t n) {
    Mat m(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

BigInt babs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coordinate addition overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coordinate multiplication overflow");
    return r;
}

std::int64_t to_int64(const BigInt& x) {
    if (x > BigInt(INT64_MAX) || x < BigInt(INT64_MIN))
        throw OverflowError("value does not fit 64 bits: " + x.str());
    return static_cast<std::int64_t>(x);
}

std::strong_ordering GroupElement::operator<=>(const GroupElement& o) const {
    const std::size_t n = std::min(coords.size(), o.coords.size());
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t a = coords[i], b = o.coords[i];
        if (a == b) continue;
        if (i < torsion_count) return a <=> b;
        std::int64_t aa = a < 0 ? -a : a, bb = b < 0 ? -b : b;
        if (aa != bb) return aa <=> bb;
        return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return coords.size() <=> o.coords.size();
}

std::string GroupElement::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
    os << ']';
    return os.str();
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto c : g.coords) h ^= std::hash<std::int64_t>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

SmithForm smith_normal_form(Mat a, std::size_t cols) {
    const std::size_t m = a.size(), n = cols;
    SmithForm s;
    s.u = identity_matrix(m);
    s.v = identity_matrix(n);
    s.vinv = identity_matrix(n);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        std::swap(s.u[i], s.u[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (auto& row : a) std::swap(row[i], row[j]);
        for (auto& row : s.v) std::swap(row[i], row[j]);
        std::swap(s.vinv[i], s.vinv[j]);
    };
    // row_i += q * row_j
    auto add_row = [&](std::size_t i, std::size_t j, const BigInt& q) {
        for (std::size_t c = 0; c < n; ++c) a[i][c] += q * a[j][c];
        for (std::size_t c = 0; c < m; ++c) s.u[i][c] += q * s.u[j][c];
    };
    // col_i += q * col_j
    auto add_col = [&](std::size_t i, std::size_t j, const BigInt& q) {
        for (auto& row : a) row[i] += q * row[j];
        for (auto& row : s.v) row[i] += q * row[j];
        for (std::size_t c = 0; c < n; ++c) s.vinv[j][c] -= q * s.vinv[i][c];
    };

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        // Pivot: smallest nonzero entry of the remaining block.
        std::size_t pi = m, pj = n;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (a[i][j] != 0 && (pi == m || babs(a[i][j]) < babs(a[pi][pj]))) pi = i, pj = j;
        if (pi == m) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        for (;;) {
            for (std::size_t i = t + 1; i < m; ++i)
                if (a[i][t] != 0) add_row(i, t, -(a[i][t] / a[t][t]));
            for (std::size_t j = t + 1; j < n; ++j)
                if (a[t][j] != 0) add_col(j, t, -(a[t][j] / a[t][t]));
            std::size_t bi = t, bj = t;
            for (std::size_t i = t + 1; i < m; ++i)
                if (a[i][t] != 0 && babs(a[i][t]) < babs(a[bi][bj])) bi = i, bj = t;
            for (std::size_t j = t + 1; j < n; ++j)
                if (a[t][j] != 0 && babs(a[t][j]) < babs(a[bi][bj])) bi = t, bj = j;
            if (bi != t || bj != t) {
                swap_rows(t, bi);
                swap_cols(t, bj);
                continue;
            }
            bool clear = true;
            for (std::size_t i = t + 1; i < m && clear; ++i) clear = a[i][t] == 0;
            for (std::size_t j = t + 1; j < n && clear; ++j) clear = a[t][j] == 0;
            if (!clear) continue;
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            add_row(t, bad, 1);
        }
        if (a[t][t] < 0) {
            for (auto& x : a[t]) x = -x;
            for (auto& x : s.u[t]) x = -x;
        }
    }
    s.d = std::move(a);
    return s;
}

AbelianGroup::AbelianGroup() = default;

AbelianGroup AbelianGroup::from_presentation(std::size_t generator_count,
                                             const std::vector<Word>& relation_rows,
                                             const Word& epsilon_word) {
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(relation_rows.size());
    for (const auto& r : relation_rows) rows.emplace_back(r.begin(), r.end());
    return from_presentation(generator_count, rows, epsilon_word);
}

AbelianGroup AbelianGroup::from_presentation(std::size_t generator_count,
                                             const std::vector<std::vector<BigInt>>& relation_rows,
                                             const Word& epsilon_word) {
    const std::size_t n = generator_count;
    std::vector<std::vector<BigInt>> rows;
    for (const auto& r : relation_rows) {
        if (r.size() != n) throw std::invalid_argument("relation row length mismatch");
        if (std::any_of(r.begin(), r.end(), [](const BigInt& x) { return x != 0; })) rows.push_back(r);
    }
    if (epsilon_word.size() != n) throw std::invalid_argument("epsilon word length mismatch");

    SmithForm s = smith_normal_form(rows, n);
    AbelianGroup g;
    g.presentation_size_ = n;
    g.v_ = std::move(s.v);
    g.vinv_ = std::move(s.vinv);
    g.column_slot_.assign(n, -1);
    g.column_modulus_.assign(n, 0);
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j) {
        BigInt dj = j < s.d.size() ? s.d[j][j] : BigInt(0);
        if (dj == 1) continue;
        if (dj == 0) {
            free_cols.push_back(j);
            continue;
        }
        g.column_slot_[j] = static_cast<long>(g.torsion_.size());
        g.column_modulus_[j] = to_int64(dj);
        g.torsion_.push_back(to_int64(dj));
    }
    for (std::size_t j : free_cols) g.column_slot_[j] = static_cast<long>(g.torsion_.size() + g.free_rank_++);
    g.epsilon_ = g.project(epsilon_word);
    if (!g.is_identity(g.mul(g.epsilon_, g.epsilon_)))
        throw EpsilonOrderError("epsilon has order greater than two");
    return g;
}

AbelianGroup AbelianGroup::canonical(const std::vector<std::int64_t>& torsion, std::size_t free_rank,
                                     const Word& epsilon_coords) {
    std::vector<Word> rows;
    const std::size_t n = torsion.size() + free_rank;
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        Word r(n, 0);
        r[i] = torsion[i];
        rows.push_back(r);
    }
    return from_presentation(n, rows, epsilon_coords);
}

std::uint64_t AbelianGroup::order() const {
    std::uint64_t o = 1;
    for (auto d : torsion_) {
        if (__builtin_mul_overflow(o, static_cast<std::uint64_t>(d), &o))
            throw OverflowError("group order overflow");
    }
    return o;
}

GroupElement AbelianGroup::identity() const {
    return GroupElement{Word(rank(), 0), static_cast<std::uint32_t>(torsion_.size())};
}

GroupElement AbelianGroup::generator(std::size_t i) const {
    GroupElement e = identity();
    e.coords.at(i) = 1;
    return reduce(e.coords);
}

std::int64_t AbelianGroup::generator_order(std::size_t i) const {
    return i < torsion_.size() ? torsion_[i] : 0;
}

GroupElement AbelianGroup::reduce(const Word& coords) const {
    if (coords.size() != rank()) throw std::invalid_argument("coordinate length mismatch");
    GroupElement e{coords, static_cast<std::uint32_t>(torsion_.size())};
    for (std::size_t i = 0; i < torsion_.size(); ++i) e.coords[i] = floor_mod(e.coords[i], torsion_[i]);
    return e;
}

GroupElement AbelianGroup::mul(const GroupElement& a, const GroupElement& b) const {
    GroupElement e = identity();
    for (std::size_t i = 0; i < e.coords.size(); ++i) {
        if (i < torsion_.size())
            e.coords[i] = (a.coords[i] + b.coords[i]) % torsion_[i];
        else
            e.coords[i] = checked_add(a.coords[i], b.coords[i]);
    }
    return e;
}

GroupElement AbelianGroup::inv(const GroupElement& a) const {
    GroupElement e = identity();
    for (std::size_t i = 0; i < e.coords.size(); ++i) {
        if (i < torsion_.size())
            e.coords[i] = a.coords[i] == 0 ? 0 : torsion_[i] - a.coords[i];
        else
            e.coords[i] = checked_mul(a.coords[i], -1);
    }
    return e;
}

GroupElement AbelianGroup::pow(const GroupElement& a, std::int64_t k) const {
    GroupElement e = identity();
    for (std::size_t i = 0; i < e.coords.size(); ++i) {
        if (i < torsion_.size())
            e.coords[i] = static_cast<std::int64_t>(
                (static_cast<__int128>(a.coords[i]) * (k % torsion_[i] + torsion_[i])) % torsion_[i]);
        else
            e.coords[i] = checked_mul(a.coords[i], k);
    }
    return e;
}

bool AbelianGroup::is_identity(const GroupElement& a) const {
    return std::all_of(a.coords.begin(), a.coords.end(), [](std::int64_t c) { return c == 0; });
}

std::int64_t AbelianGroup::element_order(const GroupElement& a) const {
    std::int64_t o = 1;
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (a.coords[i] == 0) continue;
        if (i >= torsion_.size()) return 0;
        std::int64_t ci = torsion_[i] / std::gcd(a.coords[i], torsion_[i]);
        o = std::lcm(o, ci);
    }
    return o;
}

GroupElement AbelianGroup::evaluate(const std::vector<GroupElement>& gens, const Word& exps) const {
    GroupElement e = identity();
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (exps[i] != 0) e = mul(e, pow(gens[i], exps[i]));
    return e;
}

GroupElement AbelianGroup::project(const Word& word) const {
    if (word.size() != presentation_size_) throw std::invalid_argument("presentation word length mismatch");
    Word c(rank(), 0);
    for (std::size_t j = 0; j < presentation_size_; ++j) {
        if (column_slot_[j] < 0) continue;
        BigInt y = 0;
        for (std::size_t i = 0; i < presentation_size_; ++i)
            if (word[i] != 0) y += BigInt(word[i]) * v_[i][j];
        if (column_modulus_[j] > 0) {
            y %= column_modulus_[j];
            if (y < 0) y += column_modulus_[j];
        }
        c[static_cast<std::size_t>(column_slot_[j])] = to_int64(y);
    }
    return reduce(c);
}

Word AbelianGroup::lift(const GroupElement& a) const {
    Word w(presentation_size_, 0);
    for (std::size_t i = 0; i < presentation_size_; ++i) {
        BigInt x = 0;
        for (std::size_t j = 0; j < presentation_size_; ++j)
            if (column_slot_[j] >= 0) {
                std::int64_t cj = a.coords[static_cast<std::size_t>(column_slot_[j])];
                if (cj != 0) x += BigInt(cj) * vinv_[j][i];
            }
        w[i] = to_int64(x);
    }
    return w;
}

AbelianGroup AbelianGroup::quotient_by(const std::vector<GroupElement>& kill) const {
    const std::size_t n = rank();
    std::vector<Word> rows;
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        Word r(n, 0);
        r[i] = torsion_[i];
        rows.push_back(r);
    }
    for (const auto& k : kill) rows.push_back(k.coords);
    return from_presentation(n, rows, epsilon_.coords);
}

std::optional<std::vector<BigInt>> AbelianGroup::express(const std::vector<GroupElement>& gens,
                                                        const GroupElement& target) const {
    const std::size_t n = rank();
    std::vector<std::vector<BigInt>> a;
    for (const auto& g : gens) a.emplace_back(g.coords.begin(), g.coords.end());
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        std::vector<BigInt> r(n, 0);
        r[i] = torsion_[i];
        a.push_back(r);
    }
    const std::size_t m = a.size();
    if (m == 0) {
        if (is_identity(target)) return std::vector<BigInt>{};
        return std::nullopt;
    }
    SmithForm s = smith_normal_form(a, n);
    // Solve w * D = t * V, then x = w * U.
    std::vector<BigInt> tv(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (target.coords[i] != 0) tv[j] += BigInt(target.coords[i]) * s.v[i][j];
    std::vector<BigInt> w(m, 0);
    for (std::size_t j = 0; j < n; ++j) {
        BigInt dj = j < m ? s.d[j][j] : BigInt(0);
        if (dj == 0) {
            if (tv[j] != 0) return std::nullopt;
            continue;
        }
        if (tv[j] % dj != 0) return std::nullopt;
        w[j] = tv[j] / dj;
    }
    std::vector<BigInt> x(gens.size(), 0);
    for (std::size_t k = 0; k < gens.size(); ++k)
        for (std::size_t i = 0; i < m; ++i)
            if (w[i] != 0) x[k] += w[i] * s.u[i][k];
    return x;
}

bool AbelianGroup::generates(const std::vector<GroupElement>& gens) const {
    AbelianGroup q = quotient_by(gens);
    return q.rank() == 0;
}

std::vector<GroupElement> AbelianGroup::elements() const {
    if (!is_finite()) throw InfiniteTargetError("cannot list the elements of an infinite group");
    std::vector<GroupElement> out;
    const std::uint64_t n = order();
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(element_at(i));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GroupElement> AbelianGroup::roots_of_unity(std::int64_t d) const {
    // x^d = 1 forces free coordinates to vanish and d * c_i = 0 mod d_i.
    std::vector<std::vector<std::int64_t>> choices;
    for (auto di : torsion_) {
        std::int64_t step = di / std::gcd(d, di);
        std::vector<std::int64_t> c;
        for (std::int64_t v = 0; v < di; v += step) c.push_back(v);
        choices.push_back(c);
    }
    std::vector<GroupElement> out;
    GroupElement e = identity();
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == choices.size()) {
            out.push_back(e);
            return;
        }
        for (auto v : choices[i]) {
            e.coords[i] = v;
            rec(i + 1);
        }
        e.coords[i] = 0;
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t AbelianGroup::index_of(const GroupElement& a) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < torsion_.size(); ++i)
        idx = idx * static_cast<std::size_t>(torsion_[i]) + static_cast<std::size_t>(a.coords[i]);
    return idx;
}

GroupElement AbelianGroup::element_at(std::size_t index) const {
    GroupElement e = identity();
    for (std::size_t i = torsion_.size(); i-- > 0;) {
        e.coords[i] = static_cast<std::int64_t>(index % static_cast<std::size_t>(torsion_[i]));
        index /= static_cast<std::size_t>(torsion_[i]);
    }
    return e;
}

std::string AbelianGroup::describe() const {
    std::ostringstream os;
    bool first = true;
    for (auto d : torsion_) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    if (free_rank_ > 0) {
        os << (first ? "" : " + ") << "Z";
        if (free_rank_ > 1) os << "^" << free_rank_;
        first = false;
    }
    if (first) os << "1";
    os << ", epsilon = " << epsilon_.str();
    return os.str();
}

std::vector<std::vector<GroupElement>> enumerate_homs(const AbelianGroup& g, const AbelianGroup& h) {
    if (!h.is_finite()) throw InfiniteTargetError("target group has free rank " + std::to_string(h.free_rank()));
    std::vector<std::vector<GroupElement>> candidates;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        std::int64_t d = g.generator_order(i);
        candidates.push_back(d == 0 ? h.elements() : h.roots_of_unity(d));
    }
    std::vector<std::vector<GroupElement>> out;
    std::vector<GroupElement> cur(g.rank());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == g.rank()) {
            if (h.evaluate(cur, g.epsilon().coords) == h.epsilon()) out.push_back(cur);
            return;
        }
        for (const auto& x : candidates[i]) {
            cur[i] = x;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace pastures
