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

#include "pastures/group.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pastures {

/// Either the zero symbol or a unit.
struct PastureElement {
    std::optional<GroupElement> unit;

    static PastureElement zero() { return {}; }
    static PastureElement of(GroupElement g) { return {std::move(g)}; }
    bool is_zero() const { return !unit.has_value(); }
    bool operator==(const PastureElement& o) const { return unit == o.unit; }
};

using Triple = std::array<GroupElement, 3>;

class Pasture;

/// Renders unit group elements for humans. JSON output always uses coordinates.
class Notation {
public:
    virtual ~Notation() = default;
    virtual std::string format(const Pasture& p, const GroupElement& g) const = 0;
};

/// Arithmetic data of GF(p^k) kept alongside its pasture.
struct FieldInfo {
    std::int64_t p = 0, k = 0, q = 0;
    /// Coefficients (low degree first) of the monic modulus, length k + 1.
    std::vector<std::int64_t> modulus;
    /// Integer encoding sum c_i p^i of the primitive element.
    std::int64_t primitive = 0;
    /// exp_table[i] = encoding of primitive^i, i in [0, q-1).
    std::vector<std::int64_t> exp_table;
    /// log_table[x] = discrete log of encoding x (x != 0).
    std::vector<std::int64_t> log_table;

    std::int64_t add(std::int64_t a, std::int64_t b) const;
    std::int64_t neg(std::int64_t a) const;
    std::int64_t mul(std::int64_t a, std::int64_t b) const;
    std::string format(std::int64_t x) const;
};

class Pasture {
public:
    Pasture() = default;
    /// Canonicalizes and deduplicates the given all-unit triples.
    Pasture(AbelianGroup units, const std::vector<Triple>& null_triples, std::string label = {});

    const AbelianGroup& units() const { return units_; }
    const std::vector<Triple>& null_orbits() const { return null_orbits_; }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    const GroupElement& epsilon() const { return units_.epsilon(); }
    GroupElement one() const { return units_.identity(); }
    bool is_finite() const { return units_.is_finite(); }

    /// Minimum over the scalings sending one entry to 1, each sorted.
    Triple canonical(const Triple& t) const;
    bool null_contains(const PastureElement& a, const PastureElement& b, const PastureElement& c) const;
    bool null_units(const GroupElement& a, const GroupElement& b, const GroupElement& c) const;

    /// Named generators (for presentations), in declaration order.
    const std::vector<std::pair<std::string, GroupElement>>& generators() const { return generators_; }
    void set_generators(std::vector<std::pair<std::string, GroupElement>> g) { generators_ = std::move(g); }

    const std::optional<FieldInfo>& field() const { return field_; }
    void set_field(FieldInfo f) { field_ = std::move(f); }

    void set_notation(std::shared_ptr<const Notation> n) { notation_ = std::move(n); }
    std::string format(const GroupElement& g) const;
    std::string format(const PastureElement& x) const;

    /// Test hook: replaces the stored orbits verbatim, without canonicalizing.
    void set_raw_orbits(std::vector<Triple> t) { null_orbits_ = std::move(t); }

private:
    AbelianGroup units_;
    std::vector<Triple> null_orbits_;
    std::string label_;
    std::vector<std::pair<std::string, GroupElement>> generators_;
    std::optional<FieldInfo> field_;
    std::shared_ptr<const Notation> notation_;
};

using PasturePtr = std::shared_ptr<const Pasture>;

/// Result of validate(): empty when the pasture is well formed.
struct Violation {
    std::string what;
};
std::vector<Violation> validate(const Pasture& p);

/// A Laurent monomial sign * prod x_i^{e_i} over the variables of a presentation.
struct Monomial {
    bool negative = false;
    std::vector<std::pair<std::string, std::int64_t>> factors;
    bool operator==(const Monomial&) const = default;
};

/// A relation t1 + t2 (+ t3) in N; a missing third term is the zero symbol.
struct Relation {
    std::vector<Monomial> terms;
    bool operator==(const Relation&) const = default;
};

Pasture named(const std::string& name);
bool is_named(const std::string& name);
Pasture finite_field(std::int64_t q);
std::optional<std::pair<std::int64_t, std::int64_t>> prime_power(std::int64_t q);

Pasture free_algebra(const Pasture& base, const std::vector<std::string>& variable_names);

/// Quotient by extra null triples and by identifications g = h of units.
Pasture quotient(const Pasture& p, const std::vector<std::array<PastureElement, 3>>& extra_null,
                 const std::vector<std::pair<GroupElement, GroupElement>>& identifications = {});

/// base<vars>//(relations), built as a quotient of the free algebra.
Pasture present(const Pasture& base, const std::vector<std::string>& vars, const std::vector<Relation>& relations);

struct ProductResult {
    PasturePtr pasture;
    std::vector<PasturePtr> factors;
    /// Canonical generators of the product, projected to each factor.
    std::vector<std::vector<GroupElement>> projection_images;
    /// Pair of factor units to product unit.
    GroupElement embed(const std::vector<GroupElement>& components) const;
    GroupElement component(const GroupElement& x, std::size_t i) const;
};
ProductResult product_many(const std::vector<PasturePtr>& factors);
Pasture product(const Pasture& p, const Pasture& q);

struct TensorResult {
    PasturePtr pasture;
    std::vector<PasturePtr> factors;
    /// Image of a factor unit in the tensor product.
    GroupElement include(std::size_t i, const GroupElement& x) const;
};
TensorResult tensor_many(const std::vector<PasturePtr>& factors);
Pasture tensor(const Pasture& p, const Pasture& q);

}  // namespace pastures
