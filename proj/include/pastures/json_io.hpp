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
#include "pastures/lifts.hpp"
#include "pastures/matroid.hpp"
#include "pastures/morphism.hpp"

#include <json.hpp>

namespace pastures {

nlohmann::json to_json(const GroupElement& g);
nlohmann::json pasture_json(const Pasture& p);
nlohmann::json hexagon_json(const Hexagon& h);
nlohmann::json morphism_json(const PastureMorphism& f);
nlohmann::json lift_json(const LiftResult& r);
nlohmann::json representation_json(const Matroid& m, const Representation& r);

}  // namespace pastures
