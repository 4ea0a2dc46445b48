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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pastures {

class PastureMorphism {
public:
    PastureMorphism() = default;
    PastureMorphism(PasturePtr source, PasturePtr target, std::vector<GroupElement> images)
        : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {}

    const PasturePtr& source() const { return source_; }
    const PasturePtr& target() const { return target_; }
    /// Image of each canonical generator of the source unit group.
    const std::vector<GroupElement>& images() const { return images_; }

    GroupElement apply(const GroupElement& x) const;
    PastureElement apply(const PastureElement& x) const;

    bool operator==(const PastureMorphism& o) const { return images_ == o.images_; }

private:
    PasturePtr source_, target_;
    std::vector<GroupElement> images_;
};

/// Validates and builds a morphism from images of canonical generators.
PastureMorphism make(PasturePtr source, PasturePtr target, std::vector<GroupElement> images);

/// Builds the morphism sending gens[i] to imgs[i]; gens must generate the
/// source unit group.
PastureMorphism make_from_generators(PasturePtr source, PasturePtr target, const std::vector<GroupElement>& gens,
                                     const std::vector<GroupElement>& imgs);

PastureMorphism identity_morphism(PasturePtr p);
PastureMorphism compose(const PastureMorphism& g, const PastureMorphism& f);

struct HomOptions {
    std::uint64_t max_candidates = 100000000;
};

/// All morphisms P -> Q in a deterministic order. Q finite, or P's unit group
/// is torsion, or P's units are generated by -1 and fundamental elements.
std::vector<PastureMorphism> hom_set(PasturePtr p, PasturePtr q, const HomOptions& opt = {});

/// Fundamental elements of p that together with -1 generate the unit group,
/// chosen greedily; nullopt if they do not generate.
std::optional<std::vector<GroupElement>> fundamental_generating_set(const Pasture& p);

/// True when f is bijective on units and on null orbits.
bool is_isomorphism(const PastureMorphism& f);

enum class IsoStatus { Iso, NotIso, Unknown };
struct IsoResult {
    IsoStatus status = IsoStatus::Unknown;
    std::optional<PastureMorphism> witness;
    std::string reason;
};
IsoResult iso_check(PasturePtr p, PasturePtr q, const HomOptions& opt = {});

}  // namespace pastures
