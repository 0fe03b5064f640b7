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


#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tpslab/dynamics.hpp"
#include "tpslab/random.hpp"
#include "tpslab/relativity.hpp"

namespace tpslab {
namespace {

TEST(Hamiltonian, RejectsNonHermitian) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(0, 1) = Complex(0.0, 1.0);
  EXPECT_THROW(Hamiltonian{m}, InvalidInput);
}

TEST(Hamiltonian, FromSplitReproducesLocalForm) {
  Rng rng(1);
  const Structure s = structure_from_unitary(random_unitary(6, rng), 2, 3);
  const ComplexMatrix hs = random_gue(2, rng);
  const ComplexMatrix he = random_gue(3, rng);
  const ComplexMatrix hse = random_gue(6, rng) * 0.1;
  const Hamiltonian h = Hamiltonian::from_split(s, hs, he, hse);
  const ComplexMatrix local = oracle::kron(hs, ComplexMatrix::Identity(3, 3)) +
                              oracle::kron(ComplexMatrix::Identity(2, 2), he) + hse;
  EXPECT_LT(oracle::max_abs_diff(s.W().adjoint() * h.matrix() * s.W(), local), 1e-13);
  ASSERT_TRUE(h.split().has_value());
  EXPECT_EQ(h.split()->structure_label, s.label());
  EXPECT_THROW(Hamiltonian::from_split(s, he, hs, hse), InvalidInput);
}

TEST(TimeGrid, EndpointsExact) {
  const TimeGrid g(0.0, 5.0, 50);
  EXPECT_EQ(g.size(), 51);
  EXPECT_EQ(g.at(0), 0.0);
  EXPECT_EQ(g.at(50), 5.0);
  const TimeGrid odd(0.1, 0.7, 3);
  EXPECT_EQ(odd.at(3), 0.7);
  EXPECT_THROW(TimeGrid(0.0, 1.0, 0), InvalidInput);
  EXPECT_THROW(TimeGrid(1.0, 1.0, 4), InvalidInput);
}

TEST(Evolve, PreservesSpectrumTraceHermiticity) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Hamiltonian h = random_hamiltonian(8, seed);
    const DensityMatrix rho0 = random_density(8, 3, seed + 100);
    const RealVector ev0 = rho0.eigenvalues();
    for (double t : {0.5, 3.0, 17.0}) {
      const DensityMatrix rho = evolve(rho0, h, t);
      EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-10);
      EXPECT_LE(hermiticity_defect(rho.matrix()), 1e-10);
      EXPECT_LE((rho.eigenvalues() - ev0).cwiseAbs().maxCoeff(), 1e-10);
    }
  }
}

TEST(Evolve, MatchesTaylorPropagator) {
  const Hamiltonian h = random_hamiltonian(4, 3);
  const DensityMatrix rho0 = DensityMatrix::from_pure(random_pure(4, 4));
  const ComplexMatrix u = oracle::expm_minus_i(h.matrix(), 1.3);
  EXPECT_LT(oracle::max_abs_diff(evolve(rho0, h, 1.3).matrix(), u * rho0.matrix() * u.adjoint()),
            1e-10);
  EXPECT_THROW(evolve(DensityMatrix::maximally_mixed(2), h, 1.0), InvalidInput);
}

TEST(Evolve, CentralDifferenceSatisfiesLiouville) {
  const Hamiltonian h = random_hamiltonian(8, 5);
  const DensityMatrix rho0 = random_density(8, 2, 6);
  const double dt = 1e-5;
  for (double t : {0.0, 0.8, 4.2}) {
    const ComplexMatrix lhs =
        (evolve(rho0, h, t + dt).matrix() - evolve(rho0, h, t - dt).matrix()) / (2.0 * dt);
    const ComplexMatrix rhs = liouville_rhs(h, evolve(rho0, h, t).matrix());
    EXPECT_LE(oracle::max_abs_diff(lhs, rhs), 1e-6);
  }
}

TEST(Trajectory, PointsAndEndpointConsistency) {
  const FactorLayout layout({2, 2, 2});
  const Structure sA = structure_from_grouping(layout, {0});
  const Structure sB = structure_from_grouping(layout, {0, 1});
  const ProjectionSpec pa = ProjectionSpec::type_i(DensityMatrix::maximally_mixed(4));
  const ProjectionSpec pb = ProjectionSpec::type_i(DensityMatrix::maximally_mixed(2));
  const Hamiltonian h = random_hamiltonian(8, 7);
  const DensityMatrix rho0 = DensityMatrix::from_pure(random_pure(8, 8));
  const TimeGrid grid(0.0, 2.0, 10);
  const TrajectoryRecord rec = trajectory(rho0, h, grid, sA, pa, sB, pb);
  ASSERT_EQ(rec.points.size(), 11U);
  EXPECT_EQ(rec.structure_A, sA.label());
  const TrajectoryPoint& last = rec.points.back();
  EXPECT_EQ(last.t, 2.0);
  const DensityMatrix direct = evolve(rho0, h, 2.0);
  EXPECT_NEAR(last.purity_S, reduced_state(direct, sA, Part::S).purity(), 1e-10);
  EXPECT_NEAR(last.lemma1_AtoB, cross_relevance_matrix(direct, sA, pa, sB).trace_norm_defect,
              1e-10);
  EXPECT_NEAR(last.mi_B, mutual_information(direct, sB), 1e-10);
  for (const auto& p : rec.points) {
    ASSERT_TRUE(p.lemma2.has_value());
    EXPECT_LE(p.lemma1_trace_residual_max, 1e-10);
    EXPECT_NEAR(p.spectrum_S.sum(), 1.0, 1e-10);
    EXPECT_NEAR(p.spectrum_Sprime.sum(), 1.0, 1e-10);
  }
}

TEST(Trajectory, Lemma2AbsentForOtherFamilies) {
  const Structure s = Structure::reference(2, 2);
  const ProjectionSpec t3 = ProjectionSpec::type_iii_from_basis(ComplexMatrix::Identity(2, 2));
  const TrajectoryRecord rec = trajectory(DensityMatrix::maximally_mixed(4), random_hamiltonian(4, 1),
                                          TimeGrid(0.0, 1.0, 2), s, t3, s, t3);
  EXPECT_FALSE(rec.points.front().lemma2.has_value());
}

}  // namespace
}  // namespace tpslab
