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

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pastures {

/// AST of the pasture expression language.
///
///   expr    := tensor ('x' tensor)*
///   tensor  := primary ('ox' primary)*
///   primary := atom | '(' expr ')' | ('Lb'|'Lt'|'Lw'|'Lg') '(' expr ')'
///   atom    := F<q> | F1pm | K | S | W | U | D | H | G
///            | atom '<' vars '>' '//' '(' relation (';' relation)* ')'
struct Expr {
    enum class Kind { Named, Field, Presentation, Product, Tensor, Lift };
    Kind kind = Kind::Named;
    std::string name;                 // Named, or the base of a Presentation
    std::int64_t q = 0;               // Field
    std::vector<std::string> vars;    // Presentation
    std::vector<Relation> relations;  // Presentation
    LiftKind lift = LiftKind::Binary; // Lift
    std::shared_ptr<const Expr> left, right;  // Product/Tensor use both, Lift uses left

    bool operator==(const Expr& o) const;
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse(const std::string& text);
std::string print(const Expr& e);

struct Evaluated {
    PasturePtr pasture;
    std::optional<LiftResult> lift;  // set when the outermost node is a lift
};
Evaluated evaluate(const Expr& e);
PasturePtr evaluate_pasture(const std::string& text);

}  // namespace pastures
