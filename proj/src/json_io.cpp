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
#include "pastures/json_io.hpp"

namespace pastures {

using nlohmann::json;

json to_json(const GroupElement& g) { return json(g.coords); }

json pasture_json(const Pasture& p) {
    json orbits = json::array();
    for (const auto& t : p.null_orbits()) orbits.push_back({to_json(t[0]), to_json(t[1]), to_json(t[2])});
    return {{"units",
             {{"free_rank", p.units().free_rank()},
              {"torsion", p.units().torsion()},
              {"epsilon", to_json(p.epsilon())}}},
            {"null_orbits", orbits},
            {"label", p.label()}};
}

json hexagon_json(const Hexagon& h) {
    json support = json::array();
    for (const auto& x : h.support) support.push_back(to_json(x));
    return {{"pair", {to_json(h.canonical_pair.first), to_json(h.canonical_pair.second)}},
            {"mu", h.mu},
            {"kind", kind_name(h.kind)},
            {"support", support}};
}

json morphism_json(const PastureMorphism& f) {
    json images = json::array();
    for (const auto& x : f.images()) images.push_back(to_json(x));
    return {{"source", f.source()->label()}, {"target", f.target()->label()}, {"images", images}};
}

json lift_json(const LiftResult& r) {
    json j{{"kind", lift_kind_name(r.kind)}, {"lift", pasture_json(*r.lift)}, {"lambda", morphism_json(r.lambda)}};
    if (r.descriptor) {
        const auto& d = *r.descriptor;
        j["factor_descriptor"] = {{"U", d.u}, {"D", d.d}, {"H", d.h}, {"F3", d.f3}, {"F2", d.f2}};
    }
    return j;
}

json representation_json(const Matroid& m, const Representation& r) {
    json values = json::array();
    for (std::size_t i = 0; i < m.bases().size(); ++i)
        values.push_back({{"basis", m.bases()[i]}, {"value", to_json(r.values[i])}});
    return values;
}

}  // namespace pastures
