// Copyright 2026 The catkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace catkit {

// Base class for all toolkit errors. `input_error` covers malformed or
// out-of-contract inputs (CLI exit code 2), `numeric_error` covers violated
// numerical preconditions detected at run time (CLI exit code 3).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : Error {
    using Error::Error;
};

struct NumericError : Error {
    using Error::Error;
};

struct InvalidMatrix : InputError {
    using InputError::InputError;
};

struct InvalidArgument : InputError {
    using InputError::InputError;
};

struct InvalidDistribution : InputError {
    using InputError::InputError;
};

struct UnsupportedRank : InputError {
    using InputError::InputError;
};

struct Infeasible : InputError {
    using InputError::InputError;
};

struct FormulaOutOfRange : NumericError {
    using NumericError::NumericError;
};

struct CatalystNotReturned : NumericError {
    using NumericError::NumericError;
};

struct BoundOutOfRange : InputError {
    using InputError::InputError;
};

struct DegenerateKraus : NumericError {
    using NumericError::NumericError;
};

struct NonPhysicalState : NumericError {
    using NumericError::NumericError;
};

struct ConvergenceFailure : NumericError {
    using NumericError::NumericError;
};

} // namespace catkit
