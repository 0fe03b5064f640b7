// Copyright 2026 The tpslab Authors
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

#include <stdexcept>
#include <string>

namespace tpslab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller handed in something that violates an operation's precondition
/// (wrong dimensions, non-Hermitian input, malformed projection data, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A postcondition the library guarantees did not hold at runtime.
/// The scenario runner maps this to a distinct exit status.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Numerical tolerances shared by all modules.
namespace tol {
inline constexpr double kHermitian = 1e-10;    // relative to max |entry|
inline constexpr double kUnitary = 1e-10;      // ||U^dagger U - I||_F
inline constexpr double kTrace = 1e-10;        // |tr rho - 1|
inline constexpr double kPsdFloor = -1e-10;    // minimum eigenvalue
inline constexpr double kSchmidtRank = 1e-10;  // coefficient cut-off
inline constexpr double kNorm = 1e-12;         // |<psi|psi> - 1|
inline constexpr double kEntropyFloor = 1e-12; // eigenvalues below contribute 0
inline constexpr double kProjector = 1e-10;    // projector algebra checks
inline constexpr double kTraceResidual = 1e-10;
inline constexpr double kWeights = 1e-12;      // ensemble weight normalization
}  // namespace tol

}  // namespace tpslab
