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

// Dense complex linear algebra for small composite Hilbert spaces.
//
// Index convention used everywhere in the library: for a bipartite space
// A (x) B the product vector |i>_A (x) |b>_B has composite index i * dB + b.

#include <complex>

#include <Eigen/Dense>

#include "tpslab/errors.hpp"

namespace tpslab {

using Index = Eigen::Index;
using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

enum class Keep { A, B };

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

/// Partial trace of an operator on A (x) B. Keep::A traces out B.
ComplexMatrix partial_trace(const ComplexMatrix& m, Index dA, Index dB, Keep keep);

/// Largest |M - M^dagger| entry.
double hermiticity_defect(const ComplexMatrix& m);
/// True when hermiticity_defect(m) <= rel_tol * max |m| entry.
bool is_hermitian(const ComplexMatrix& m, double rel_tol = tol::kHermitian);
/// Frobenius norm of U^dagger U - I.
double unitarity_defect(const ComplexMatrix& u);
bool all_finite(const ComplexMatrix& m);

struct EigenSystem {
  RealVector values;     // ascending
  ComplexMatrix vectors; // columns are orthonormal eigenvectors
};

/// Hermitian eigendecomposition. Throws InvalidInput if `h` is not Hermitian.
EigenSystem eigh(const ComplexMatrix& h);

/// exp(-i H t) from a precomputed eigensystem.
ComplexMatrix propagator(const EigenSystem& eig, double t);
ComplexMatrix propagator(const ComplexMatrix& h, double t);

/// Sum of singular values.
double trace_norm(const ComplexMatrix& m);

/// Normalized state vector.
class PureState {
 public:
  /// Throws InvalidInput unless | <v|v> - 1 | <= 1e-12 and entries are finite.
  explicit PureState(ComplexVector vec);
  static PureState normalized(const ComplexVector& vec);
  static PureState basis(Index dim, Index k);

  const ComplexVector& vec() const { return vec_; }
  Index dim() const { return vec_.size(); }

 private:
  ComplexVector vec_;
};

/// Hermitian, unit-trace, positive semidefinite square matrix.
class DensityMatrix {
 public:
  /// Validates all three properties, throwing InvalidInput with the failed one.
  explicit DensityMatrix(ComplexMatrix mat);

  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix maximally_mixed(Index dim);

  const ComplexMatrix& matrix() const { return mat_; }
  Index dim() const { return mat_.rows(); }
  double purity() const;
  RealVector eigenvalues() const;

 private:
  ComplexMatrix mat_;
};

struct SchmidtDecomposition {
  RealVector coeffs;   // descending, min(dA, dB) entries
  ComplexMatrix left;  // dA x k, column j pairs with coeffs[j]
  ComplexMatrix right; // dB x k

  /// Number of coefficients above the threshold.
  Index rank(double threshold = tol::kSchmidtRank) const;
  ComplexVector reconstruct() const;
};

SchmidtDecomposition schmidt(const ComplexVector& psi, Index dA, Index dB);
SchmidtDecomposition schmidt(const PureState& psi, Index dA, Index dB);

/// -sum lambda ln lambda in nats, over eigenvalues >= 1e-12.
double von_neumann_entropy(const DensityMatrix& rho);
double von_neumann_entropy(const RealVector& spectrum);

}  // namespace tpslab
