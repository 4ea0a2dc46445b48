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

#include <stdexcept>
#include <string>

namespace pastures {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define PASTURES_ERROR(Name)                                                   \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}   \
    }

PASTURES_ERROR(EpsilonOrderError);
PASTURES_ERROR(InfiniteTargetError);
PASTURES_ERROR(OverflowError);
PASTURES_ERROR(NotPrimePower);
PASTURES_ERROR(DuplicateName);
PASTURES_ERROR(BadRelationShape);
PASTURES_ERROR(ClosureLimit);
PASTURES_ERROR(NotFundamental);
PASTURES_ERROR(HexagonNotOfPasture);
PASTURES_ERROR(NotFinitary);
PASTURES_ERROR(KindMismatch);
PASTURES_ERROR(GroupHomViolation);
PASTURES_ERROR(EpsilonViolation);
PASTURES_ERROR(NullsetViolation);
PASTURES_ERROR(ChainMismatch);
PASTURES_ERROR(SearchSpaceExceeded);
PASTURES_ERROR(InfinitePasture);
PASTURES_ERROR(ExchangeAxiomViolation);
PASTURES_ERROR(InvalidMatroid);
PASTURES_ERROR(ParseError);

#undef PASTURES_ERROR

}  // namespace pastures
