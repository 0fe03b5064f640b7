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

// Cross-structure diagnostics.
//
// A projection adapted to structure A (S+E) is evaluated against a second
// structure B (S'+E'). The central object is the defect matrix
//
//     tr_E' (Q_A rho)        (dS' x dS')
//
// whose vanishing would let P_A rho carry the reduced state of S' as well.
// It is computed two ways: by matrix algebra (cross_relevance_matrix) and by
// explicit summation over Schmidt / spectral expansion coefficients
// (coeff_A_pure for pure states, coeff_Lambda_mixed for separable mixtures).
// Its trace is tr(Q_A rho) = 0 whenever the projection is trace preserving.

#include <vector>

#include "tpslab/linalg.hpp"
#include "tpslab/projections.hpp"
#include "tpslab/structures.hpp"

namespace tpslab {

struct DefectReport {
  ComplexMatrix defect_matrix;
  double trace_norm_defect = 0.0;
  double frobenius_defect = 0.0;
  double trace_residual = 0.0;  // |sum of diagonal|

  /// Fills the norms; throws InvariantViolation if trace_residual > 1e-10.
  static DefectReport from_matrix(ComplexMatrix m);
};

DefectReport cross_relevance_matrix(const DensityMatrix& rho, const Structure& sA,
                                    const ProjectionSpec& specA, const Structure& sB);

/// rho = sum_i lambda_i rho_Si (x) rho_Ei, factors referring to one structure's split.
class SeparableEnsemble {
 public:
  struct Term {
    DensityMatrix rho_S;
    DensityMatrix rho_E;
    RealVector p;         // eigenvalues of rho_S
    ComplexMatrix chi;    // eigenvectors of rho_S (columns)
    RealVector pi;        // eigenvalues of rho_E
    ComplexMatrix phi;    // eigenvectors of rho_E (columns)
  };

  /// Throws InvalidInput unless all weights are positive, sum to 1 within 1e-12,
  /// and all factors share dimensions.
  SeparableEnsemble(std::vector<double> weights,
                    std::vector<std::pair<DensityMatrix, DensityMatrix>> terms);

  const std::vector<double>& weights() const { return weights_; }
  const std::vector<Term>& terms() const { return terms_; }
  Index dS() const { return terms_.front().rho_S.dim(); }
  Index dE() const { return terms_.front().rho_E.dim(); }

  /// sum_i lambda_i rho_Si (x) rho_Ei in the product basis of the factors.
  ComplexMatrix assemble_local() const;
  /// The same operator expressed in the reference basis, with the factors
  /// interpreted as S and E of structure `s`.
  DensityMatrix assemble(const Structure& s) const;

 private:
  std::vector<double> weights_;
  std::vector<Term> terms_;
};

/// Defect matrix of a pure state from its Schmidt form in sA, the spectral form
/// of rho_ref and the sA -> sB expansion coefficients.
ComplexMatrix coeff_A_pure(const PureState& psi, const Structure& sA,
                           const DensityMatrix& rho_ref, const Structure& sB);

/// Defect matrix of a separable mixture (factors referring to sA) from per-term
/// spectral data, the spectrum of tr_E rho, that of rho_ref and the sA -> sB
/// expansion coefficients.
ComplexMatrix coeff_Lambda_mixed(const SeparableEnsemble& ens, const Structure& sA,
                                 const DensityMatrix& rho_ref, const Structure& sB);

/// || P_A(P_B rho) - P_B(P_A rho) ||_1. Both specs must be TypeI.
double lemma2_defect(const DensityMatrix& rho, const Structure& sA, const ProjectionSpec& specA,
                     const Structure& sB, const ProjectionSpec& specB);

/// S(rho_S) + S(rho_E) - S(rho) in nats, reductions taken in `s`.
double mutual_information(const DensityMatrix& rho, const Structure& s);

/// |u> (x) (|00> + |11>)/sqrt(2) on three qubits.
PureState teleport_state(const PureState& u);

}  // namespace tpslab
