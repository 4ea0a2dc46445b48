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

#include "pastures/hexagons.hpp"
#include "pastures/morphism.hpp"

#include <string>

namespace pastures {

enum class LiftKind { Binary, Ternary, WLUM, GRS };
std::string lift_kind_name(LiftKind k);

/// Numbers of tensor factors U, D, H, F3, F2.
struct FactorDescriptor {
    int u = 0, d = 0, h = 0, f3 = 0, f2 = 0;
    bool operator==(const FactorDescriptor&) const = default;
    std::string str() const;
};

struct LiftResult {
    PasturePtr lift;
    PastureMorphism lambda;  // lift -> source
    LiftKind kind = LiftKind::Binary;
    std::optional<FactorDescriptor> descriptor;
};

struct HexagonLift {
    PasturePtr model;  // one of F3, D, H, U
    std::string model_name;
    /// Named generators of the model and their images.
    std::vector<GroupElement> generators;
    std::vector<GroupElement> images;
};

LiftResult binary_lift(PasturePtr p);
HexagonLift hexagon_lift(const Pasture& p, const Hexagon& xi);
LiftResult ternary_lift(PasturePtr p);
LiftResult wlum_lift(PasturePtr p);

struct GrsOptions {
    std::size_t max_fundamental = 512;
};
LiftResult grs_lift(PasturePtr p, const GrsOptions& opt = {});

bool lift_descriptor_iso(const LiftResult& a, const LiftResult& b);

/// The tensor product described by a descriptor, e.g. D ox H ox U.
Pasture model_tensor(const FactorDescriptor& d);

/// lambda restricted to fundamental pairs (resp. elements) is a bijection.
bool lambda_bijects_pairs(const LiftResult& r);
bool lambda_bijects_elements(const LiftResult& r);

}  // namespace pastures
