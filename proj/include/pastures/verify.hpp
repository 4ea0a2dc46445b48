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

#include "pastures/matroid.hpp"
#include "pastures/morphism.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace pastures {

struct VerifyItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyItem> items;

    bool passed() const;
    nlohmann::json to_json() const;
};

struct VerifyOptions {
    std::int64_t max_q = 64;
    HomOptions hom;
    RepOptions rep;
};

/// Names accepted by verify(), in the order "all" runs them.
const std::vector<std::string>& verify_suites();

/// Runs one named suite, or every suite for "all". Throws std::invalid_argument
/// for an unknown name.
VerifyReport verify(const std::string& suite, const VerifyOptions& opt = {});

}  // namespace pastures
