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
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace pastures {

using BigInt = boost::multiprecision::cpp_int;
using Word = std::vector<std::int64_t>;

/// Element of a finitely generated abelian group, stored in the canonical
/// coordinates of its group: torsion coordinates first (each reduced into
/// [0, d_i)), then free coordinates.
///
/// The total order compares torsion coordinates lexicographically, then free
/// coordinates by (absolute value, sign) with the negative value first.
struct GroupElement {
    Word coords;
    std::uint32_t torsion_count = 0;

    bool operator==(const GroupElement& o) const { return coords == o.coords; }
    std::strong_ordering operator<=>(const GroupElement& o) const;

    std::string str() const;
};

struct GroupElementHash {
    std::size_t operator()(const GroupElement& g) const noexcept;
};

/// Finitely generated abelian group Z/d_1 + ... + Z/d_k + Z^f in Smith normal
/// form, with a distinguished element epsilon of order at most two.
///
/// The group remembers the presentation it was built from, so elements can
/// be projected from and lifted to presentation words.
class AbelianGroup {
public:
    AbelianGroup();

    /// Builds Z^n / <relation rows> with epsilon the image of eps_word.
    static AbelianGroup from_presentation(std::size_t generator_count,
                                          const std::vector<std::vector<BigInt>>& relation_rows,
                                          const Word& epsilon_word);
    static AbelianGroup from_presentation(std::size_t generator_count,
                                          const std::vector<Word>& relation_rows,
                                          const Word& epsilon_word);

    /// Canonical form Z/d_1 + ... + Z^f with epsilon given in canonical coordinates.
    static AbelianGroup canonical(const std::vector<std::int64_t>& torsion, std::size_t free_rank,
                                  const Word& epsilon_coords);

    const std::vector<std::int64_t>& torsion() const { return torsion_; }
    std::size_t free_rank() const { return free_rank_; }
    std::size_t rank() const { return torsion_.size() + free_rank_; }
    bool is_finite() const { return free_rank_ == 0; }
    /// Order of the group; only meaningful when finite.
    std::uint64_t order() const;
    bool same_shape(const AbelianGroup& o) const {
        return torsion_ == o.torsion_ && free_rank_ == o.free_rank_;
    }

    const GroupElement& epsilon() const { return epsilon_; }
    bool epsilon_trivial() const { return is_identity(epsilon_); }

    GroupElement identity() const;
    GroupElement generator(std::size_t i) const;
    /// Order of the i-th canonical generator (0 for free generators).
    std::int64_t generator_order(std::size_t i) const;

    /// Reduces an arbitrary canonical-length coordinate vector.
    GroupElement reduce(const Word& coords) const;
    GroupElement mul(const GroupElement& a, const GroupElement& b) const;
    GroupElement inv(const GroupElement& a) const;
    GroupElement div(const GroupElement& a, const GroupElement& b) const { return mul(a, inv(b)); }
    GroupElement pow(const GroupElement& a, std::int64_t k) const;
    bool is_identity(const GroupElement& a) const;
    /// Multiplicative order, 0 if infinite.
    std::int64_t element_order(const GroupElement& a) const;

    /// Evaluates prod gens[i]^exps[i].
    GroupElement evaluate(const std::vector<GroupElement>& gens, const Word& exps) const;

    std::size_t presentation_size() const { return presentation_size_; }
    /// Image of a presentation word.
    GroupElement project(const Word& word) const;
    /// A presentation word mapping to a.
    Word lift(const GroupElement& a) const;

    /// Quotient by the subgroup generated by kill. The quotient's presentation
    /// generators are the canonical coordinates of this group, so
    /// result.project(g.coords) is the projection of g.
    AbelianGroup quotient_by(const std::vector<GroupElement>& kill) const;

    /// Integer exponents x with prod gens[i]^x[i] = target, if target lies in
    /// the subgroup generated by gens.
    std::optional<std::vector<BigInt>> express(const std::vector<GroupElement>& gens,
                                               const GroupElement& target) const;
    /// True when gens generate the whole group.
    bool generates(const std::vector<GroupElement>& gens) const;

    /// All elements of a finite group, in the canonical order.
    std::vector<GroupElement> elements() const;
    /// All x with x^d = 1 (d > 0). Finite even when the group is infinite.
    std::vector<GroupElement> roots_of_unity(std::int64_t d) const;

    /// Mixed-radix index of an element of a finite group and its inverse.
    std::size_t index_of(const GroupElement& a) const;
    GroupElement element_at(std::size_t index) const;

    std::string describe() const;

private:
    std::vector<std::int64_t> torsion_;
    std::size_t free_rank_ = 0;
    GroupElement epsilon_;

    std::size_t presentation_size_ = 0;
    // x -> x * V maps presentation words to SNF coordinates; Vinv goes back.
    std::vector<std::vector<BigInt>> v_;
    std::vector<std::vector<BigInt>> vinv_;
    // For each SNF column: -1 trivial, else index into canonical coordinates.
    std::vector<long> column_slot_;
    std::vector<std::int64_t> column_modulus_;
};

/// Generator image assignments H-valued for every canonical generator of G,
/// subject to every relation and to epsilon mapping to epsilon.
std::vector<std::vector<GroupElement>> enumerate_homs(const AbelianGroup& g, const AbelianGroup& h);

/// Smith normal form U * A * V = D with U, V unimodular.
struct SmithForm {
    std::vector<std::vector<BigInt>> d, u, v, vinv;
};
SmithForm smith_normal_form(std::vector<std::vector<BigInt>> a, std::size_t cols);

/// Checked 64-bit helpers; throw OverflowError.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t to_int64(const BigInt& x);

}  // namespace pastures
