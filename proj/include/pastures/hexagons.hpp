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

#include "pastures/pasture.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pastures {

using Pair = std::pair<GroupElement, GroupElement>;

enum class HexagonKind { Ternary, Hexagonal, Dyadic, NearRegular };

std::string kind_name(HexagonKind k);
HexagonKind kind_for_mu(int mu);

struct Hexagon {
    Pair canonical_pair;
    int mu = 0;
    HexagonKind kind = HexagonKind::Ternary;
    /// First coordinates of the orbit pairs, sorted.
    std::vector<GroupElement> support;
    /// The orbit itself, sorted.
    std::vector<Pair> pairs;

    bool operator==(const Hexagon& o) const { return canonical_pair == o.canonical_pair; }
};

bool is_fundamental(const Pasture& p, const Pair& ab);
/// rho(a, b) = (1/b, -a/b).
Pair d3_rho(const Pasture& p, const Pair& ab);
/// sigma(a, b) = (b, a).
Pair d3_sigma(const Pasture& p, const Pair& ab);

/// The D3-orbit of a fundamental pair, sorted and deduplicated.
std::vector<Pair> d3_orbit(const Pasture& p, const Pair& ab);

/// (a, b, 1/a, 1/b, -b/a, -a/b).
std::array<GroupElement, 6> ordered_hexagon(const Pasture& p, const Pair& ab);

std::vector<Pair> fundamental_pairs(const Pasture& p);
std::vector<GroupElement> fundamental_elements(const Pasture& p);
std::vector<Hexagon> hexagons(const Pasture& p);

struct Census {
    int dyadic = 0, hexagonal = 0, ternary = 0, near_regular = 0;
    bool operator==(const Census&) const = default;
};
Census census(const std::vector<Hexagon>& hex);
Census census_Fq(std::int64_t q);
/// Counts predicted for F_q by the mod 6 rules.
Census census_rule(std::int64_t q);

struct PsiEntry {
    Hexagon hexagon;      // in P x Q
    std::size_t left;     // index into hexagons(P)
    std::size_t right;    // index into hexagons(Q)
};
struct PsiResult {
    std::vector<Hexagon> left, right;
    std::vector<PsiEntry> entries;
    /// Sorted orbit lengths over each (left, right) pair of hexagons.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<int>> fibers;
};
PsiResult psi_product(const Pasture& p, const Pasture& q);

struct PartitionReport {
    bool ok = true;
    std::optional<GroupElement> witness;
    std::string reason;
};
/// Supports must be pairwise disjoint; for fields they must also cover
/// every element outside {0, 1}.
PartitionReport partial_field_partition_check(const Pasture& p);

}  // namespace pastures
