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

#include "pastures/lifts.hpp"
#include "pastures/pasture.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pastures {

/// Matroid on {1, ..., n} given by its bases (sorted r-subsets, sorted list).
class Matroid {
public:
    static Matroid from_bases(int n, int r, std::vector<std::vector<int>> bases);
    static Matroid uniform(int r, int n);
    /// Graphic matroid of K4 with edges 12,13,14,23,24,34 numbered 1..6.
    static Matroid k4();

    int n() const { return n_; }
    int rank() const { return r_; }
    const std::vector<std::vector<int>>& bases() const { return bases_; }
    /// Index of a sorted r-subset among the bases, or -1.
    int basis_index(const std::vector<int>& sorted) const;

private:
    int n_ = 0, r_ = 0;
    std::vector<std::vector<int>> bases_;
};

Matroid matroid_from_json(const std::string& text);

/// Delta on bases (in basis order); nonbases are implicitly zero.
struct Representation {
    std::vector<GroupElement> values;
    bool operator==(const Representation&) const = default;
    auto operator<=>(const Representation& o) const { return values <=> o.values; }
};

struct PluckerViolation {
    std::vector<int> j;
    std::array<int, 4> e;
};

/// Checks every 3-term Plucker relation.
std::optional<PluckerViolation> plucker_check(const Matroid& m, const Pasture& p, const Representation& delta);

/// Delta' = c * prod_{e in B} d(e) * Delta.
Representation rescale(const Matroid& m, const Pasture& p, const Representation& delta, const GroupElement& c,
                       const std::vector<GroupElement>& d);

struct RepOptions {
    std::uint64_t max_candidates = 1000000000;
    unsigned threads = 1;
};

/// One representative per rescaling class. Delta is normalized to 1 on the
/// least basis and on the bases B0 - e + f along a spanning forest of the
/// fundamental graph of B0; such normal forms are unique per class.
std::vector<Representation> representation_classes(const Matroid& m, const Pasture& p, const RepOptions& opt = {});

/// Slow route: every Delta with Delta(B_min) = 1, grouped into orbits by
/// applying the full rescaling group. Returns the orbits.
std::vector<std::vector<Representation>> representation_orbits_by_closure(const Matroid& m, const Pasture& p,
                                                                          std::uint64_t max_group = 1000000);

/// The normal form of any representation within its class.
Representation normalize(const Matroid& m, const Pasture& p, const Representation& delta);

struct BijectionReport {
    bool ok = true;
    std::size_t lift_classes = 0, source_classes = 0;
    std::string detail;
};
/// Pushforward along lambda must biject classes over the lift onto classes over the source.
BijectionReport lift_bijection_check(const Matroid& m, const LiftResult& lift, const RepOptions& opt = {});

}  // namespace pastures
