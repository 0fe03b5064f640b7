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

// Closed-system evolution rho(t) = U(t) rho0 U(t)^dagger, U(t) = exp(-i H t) (hbar = 1),
// and simultaneous bookkeeping of two open subsystems S and S' of the same rho(t).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tpslab/linalg.hpp"
#include "tpslab/projections.hpp"
#include "tpslab/structures.hpp"

namespace tpslab {

/// Local and interaction parts of H in the product basis of one structure.
struct HamiltonianSplit {
  ComplexMatrix H_S;
  ComplexMatrix H_E;
  ComplexMatrix H_SE;
  std::string structure_label;
};

class Hamiltonian {
 public:
  /// Throws InvalidInput if `mat` is not Hermitian within 1e-10 (relative).
  explicit Hamiltonian(ComplexMatrix mat);

  /// H = W (H_S (x) 1 + 1 (x) H_E + H_SE) W^dagger for structure `s`.
  static Hamiltonian from_split(const Structure& s, ComplexMatrix H_S, ComplexMatrix H_E,
                                ComplexMatrix H_SE);

  const ComplexMatrix& matrix() const { return mat_; }
  Index dim() const { return mat_.rows(); }
  const EigenSystem& spectral() const { return eig_; }
  const std::optional<HamiltonianSplit>& split() const { return split_; }

  /// exp(-i H t)
  ComplexMatrix propagator(double t) const;

 private:
  ComplexMatrix mat_;
  EigenSystem eig_;
  std::optional<HamiltonianSplit> split_;
};

/// GUE sample (G + G^dagger)/2 from the given seed; no rescaling.
Hamiltonian random_hamiltonian(Index dim, std::uint64_t seed);

/// Uniform grid t0, ..., t1 with `steps` intervals (steps + 1 points, both ends included).
class TimeGrid {
 public:
  TimeGrid(double t0, double t1, Index steps);

  double t0() const { return t0_; }
  double t1() const { return t1_; }
  Index steps() const { return steps_; }
  Index size() const { return steps_ + 1; }
  double at(Index k) const;

 private:
  double t0_;
  double t1_;
  Index steps_;
};

DensityMatrix evolve(const DensityMatrix& rho0, const Hamiltonian& h, double t);

/// -i [H, rho]
ComplexMatrix liouville_rhs(const Hamiltonian& h, const ComplexMatrix& rho);

struct TrajectoryPoint {
  double t = 0.0;
  RealVector spectrum_S;        // eigenvalues of rho_S(t), structure A
  RealVector spectrum_Sprime;   // eigenvalues of rho_S'(t), structure B
  double lemma1_AtoB = 0.0;     // || tr_E' Q_A rho(t) ||_1
  double lemma1_BtoA = 0.0;     // || tr_E Q_B rho(t) ||_1
  double lemma1_trace_residual_max = 0.0;
  std::optional<double> lemma2; // only when both projections are TypeI
  double mi_A = 0.0;
  double mi_B = 0.0;
  double purity_S = 0.0;
  double purity_Sprime = 0.0;
};

struct TrajectoryRecord {
  std::string structure_A;
  std::string structure_B;
  std::vector<TrajectoryPoint> points;
};

/// Evolves rho0 once and evaluates every cross-structure functional at each
/// grid time. Projections never feed back into the dynamics.
TrajectoryRecord trajectory(const DensityMatrix& rho0, const Hamiltonian& h, const TimeGrid& grid,
                            const Structure& sA, const ProjectionSpec& specA,
                            const Structure& sB, const ProjectionSpec& specB);

}  // namespace tpslab
