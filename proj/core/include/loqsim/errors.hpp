// Copyright 2026 The loqsim Authors
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

#ifndef LOQSIM_ERRORS_HPP
#define LOQSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace loqsim {

/// Base class for all errors raised by the library.
struct LoqsimError : std::runtime_error {
    explicit LoqsimError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Raised when an operation would have to normalize or condition on a state
/// with (numerically) zero norm, e.g. projecting onto an orthogonal subspace.
struct ZeroStateError : LoqsimError {
    explicit ZeroStateError(const std::string &msg) : LoqsimError(msg) {}
};

/// Raised when a mode transform fails its isometry check and was not
/// declared lossy.
struct NonUnitaryTransformError : LoqsimError {
    explicit NonUnitaryTransformError(const std::string &msg) : LoqsimError(msg) {}
};

/// Raised when amplitude is found outside the two-qubit (SAM x OAM) subspace
/// of an analyzed photon and leakage was not explicitly allowed.
struct LeakageError : LoqsimError {
    explicit LeakageError(const std::string &msg) : LoqsimError(msg) {}
};

/// Raised when a parametric source is asked for an unsupported truncation
/// order of the squeezing series.
struct TruncationError : LoqsimError {
    explicit TruncationError(const std::string &msg) : LoqsimError(msg) {}
};

/// Raised on malformed arguments (duplicate pattern paths, bad fidelity
/// targets, out-of-range cascade sizes, ...).
struct InvalidArgumentError : LoqsimError {
    explicit InvalidArgumentError(const std::string &msg) : LoqsimError(msg) {}
};

/// Raised when two implementations of the same computation disagree, e.g.
/// the symbolic cascade and its amplitude-level cross-check.
struct MismatchError : LoqsimError {
    explicit MismatchError(const std::string &msg) : LoqsimError(msg) {}
};

}  // namespace loqsim

#endif
