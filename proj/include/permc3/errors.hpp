// Copyright 2026 The permc3 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace permc3 {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated by the caller.
struct PreconditionViolated : Error {
    using Error::Error;
};

/// An internal consistency condition failed; indicates a bug, not bad input.
struct InternalInvariantViolation : Error {
    using Error::Error;
};

/// A gate kind outside the class supported by the requested operation.
struct UnsupportedGateError : Error {
    using Error::Error;
};

/// The requested computation exceeds the supported dimension budget.
struct DimensionTooLarge : Error {
    using Error::Error;
};

/// Checked 64-bit integer arithmetic overflowed.
struct IntegerOverflow : Error {
    using Error::Error;
};

/// Circuit text could not be parsed; carries a 1-based line number.
struct ParseError : Error {
    ParseError(uint32_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_number(line) {}
    uint32_t line_number;
};

}  // namespace permc3
