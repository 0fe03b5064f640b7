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

#include "tpslab/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "tpslab/random.hpp"
#include "tpslab/relativity.hpp"

namespace tpslab {

Hamiltonian::Hamiltonian(ComplexMatrix mat) : mat_(std::move(mat)), eig_(eigh(mat_)) {}

Hamiltonian Hamiltonian::from_split(const Structure& s, ComplexMatrix H_S, ComplexMatrix H_E,
                                    ComplexMatrix H_SE) {
  const Index dS = s.dS();
  const Index dE = s.dE();
  if (H_S.rows() != dS || H_S.cols() != dS || H_E.rows() != dE || H_E.cols() != dE ||
      H_SE.rows() != dS * dE || H_SE.cols() != dS * dE) {
    throw InvalidInput("Hamiltonian::from_split: part dimensions do not match the structure");
  }
  for (const ComplexMatrix* part : {&H_S, &H_E, &H_SE}) {
    if (!is_hermitian(*part)) {
      throw InvalidInput("Hamiltonian::from_split: every part must be Hermitian");
    }
  }
  const ComplexMatrix local = kron(H_S, ComplexMatrix::Identity(dE, dE)) +
                              kron(ComplexMatrix::Identity(dS, dS), H_E) + H_SE;
  Hamiltonian h(from_structure_basis(local, s));
  const ComplexMatrix back = to_structure_basis(h.mat_, s);
  const double scale = std::max(1.0, local.cwiseAbs().maxCoeff());
  if ((back - local).cwiseAbs().maxCoeff() > tol::kHermitian * scale) {
    throw InvariantViolation("Hamiltonian::from_split: split does not reproduce the matrix");
  }
  h.split_ = HamiltonianSplit{std::move(H_S), std::move(H_E), std::move(H_SE), s.label()};
  return h;
}

ComplexMatrix Hamiltonian::propagator(double t) const {
  return tpslab::propagator(eig_, t);
}

Hamiltonian random_hamiltonian(Index dim, std::uint64_t seed) {
  return Hamiltonian(random_gue(dim, seed));
}

TimeGrid::TimeGrid(double t0, double t1, Index steps) : t0_(t0), t1_(t1), steps_(steps) {
  if (!std::isfinite(t0) || !std::isfinite(t1) || !(t1 > t0)) {
    throw InvalidInput("TimeGrid: require finite t0 < t1");
  }
  if (steps < 1) {
    throw InvalidInput("TimeGrid: steps must be >= 1");
  }
}

double TimeGrid::at(Index k) const {
  if (k == steps_) {
    return t1_;
  }
  return t0_ + (t1_ - t0_) * static_cast<double>(k) / static_cast<double>(steps_);
}

DensityMatrix evolve(const DensityMatrix& rho0, const Hamiltonian& h, double t) {
  if (rho0.dim() != h.dim()) {
    std::ostringstream os;
    os << "evolve: state dimension " << rho0.dim() << " does not match Hamiltonian dimension "
       << h.dim();
    throw InvalidInput(os.str());
  }
  const ComplexMatrix u = h.propagator(t);
  return DensityMatrix(u * rho0.matrix() * u.adjoint());
}

ComplexMatrix liouville_rhs(const Hamiltonian& h, const ComplexMatrix& rho) {
  const Complex minus_i(0.0, -1.0);
  return minus_i * (h.matrix() * rho - rho * h.matrix());
}

TrajectoryRecord trajectory(const DensityMatrix& rho0, const Hamiltonian& h, const TimeGrid& grid,
                            const Structure& sA, const ProjectionSpec& specA,
                            const Structure& sB, const ProjectionSpec& specB) {
  if (sA.total_dim() != rho0.dim() || sB.total_dim() != rho0.dim()) {
    throw InvalidInput("trajectory: structures and state act on different spaces");
  }
  specA.check_compatible(sA);
  specB.check_compatible(sB);
  const bool both_type_i =
      specA.kind() == ProjectionKind::TypeI && specB.kind() == ProjectionKind::TypeI;

  TrajectoryRecord rec;
  rec.structure_A = sA.label();
  rec.structure_B = sB.label();
  rec.points.reserve(static_cast<std::size_t>(grid.size()));
  for (Index k = 0; k < grid.size(); ++k) {
    TrajectoryPoint pt;
    pt.t = grid.at(k);
    // Absolute-time propagation: no accumulation across grid points.
    const DensityMatrix rho = evolve(rho0, h, pt.t);

    const DensityMatrix rs = reduced_state(rho, sA, Part::S);
    const DensityMatrix rsp = reduced_state(rho, sB, Part::S);
    pt.spectrum_S = rs.eigenvalues();
    pt.spectrum_Sprime = rsp.eigenvalues();
    pt.purity_S = rs.purity();
    pt.purity_Sprime = rsp.purity();

    const DefectReport ab = cross_relevance_matrix(rho, sA, specA, sB);
    const DefectReport ba = cross_relevance_matrix(rho, sB, specB, sA);
    pt.lemma1_AtoB = ab.trace_norm_defect;
    pt.lemma1_BtoA = ba.trace_norm_defect;
    pt.lemma1_trace_residual_max = std::max(ab.trace_residual, ba.trace_residual);
    if (both_type_i) {
      pt.lemma2 = lemma2_defect(rho, sA, specA, sB, specB);
    }
    pt.mi_A = mutual_information(rho, sA);
    pt.mi_B = mutual_information(rho, sB);
    rec.points.push_back(std::move(pt));
  }
  return rec;
}

}  // namespace tpslab
