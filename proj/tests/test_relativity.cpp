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
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tpslab/projections.hpp"
#include "tpslab/random.hpp"
#include "tpslab/relativity.hpp"
#include "tpslab/structures.hpp"

namespace tpslab {
namespace {

// tr_E' (rho - P_A rho) with TypeI(ref) on A, built from the oracle primitives only.
ComplexMatrix defect_oracle(const ComplexMatrix& rho, const Structure& sA,
                            const ComplexMatrix& ref, const Structure& sB) {
  const ComplexMatrix local = sA.W().adjoint() * rho * sA.W();
  const ComplexMatrix p = sA.W() * oracle::type_i_local(local, sA.dS(), sA.dE(), ref) *
                          sA.W().adjoint();
  const ComplexMatrix q_in_b = sB.W().adjoint() * (rho - p) * sB.W();
  return oracle::ptrace(q_in_b, sB.dS(), sB.dE(), true);
}

TEST(CrossRelevance, MatchesOracle) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const Structure sA = structure_from_unitary(random_unitary(8, rng), 2, 4);
    const Structure sB = structure_from_unitary(random_unitary(8, rng), 4, 2);
    const DensityMatrix ref = random_density(4, 2, rng);
    const DensityMatrix rho = random_density(8, 3, rng);
    const DefectReport r = cross_relevance_matrix(rho, sA, ProjectionSpec::type_i(ref), sB);
    const ComplexMatrix expect = defect_oracle(rho.matrix(), sA, ref.matrix(), sB);
    EXPECT_LT(oracle::max_abs_diff(r.defect_matrix, expect), 1e-13);
    EXPECT_NEAR(r.trace_norm_defect, oracle::trace_norm(expect), 1e-12);
    EXPECT_NEAR(r.frobenius_defect, expect.norm(), 1e-12);
    EXPECT_LE(r.trace_residual, 1e-10);
  }
}

TEST(CrossRelevance, SameStructureVanishesForEveryFamily) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    const Structure s = structure_from_unitary(random_unitary(4, rng), 2, 2);
    const DensityMatrix rho = random_density(4, 2, rng);
    std::vector<ProjectionSpec> specs = {
        ProjectionSpec::type_i(random_density(2, 2, rng)),
        ProjectionSpec::type_iii_from_basis(random_unitary(2, rng))};
    for (const auto& spec : specs) {
      EXPECT_LE(cross_relevance_matrix(rho, s, spec, s).trace_norm_defect, 1e-10);
    }
  }
}

TEST(CrossRelevance, TraceResidualProperty) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const Structure sA = structure_from_unitary(random_unitary(6, rng), 3, 2);
    const Structure sB = structure_from_unitary(random_unitary(6, rng), 2, 3);
    const DensityMatrix rho = random_density(6, 1 + seed % 6, rng);
    const DefectReport ab = cross_relevance_matrix(
        rho, sA, ProjectionSpec::type_i(DensityMatrix::maximally_mixed(2)), sB);
    EXPECT_LE(ab.trace_residual, 1e-10);
    EXPECT_LE(std::abs(ab.defect_matrix.trace()), 1e-10);
    EXPECT_LT(hermiticity_defect(ab.defect_matrix), 1e-12);
  }
}

TEST(DefectReport, TraceBreachIsInvariantViolation) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 1e-9;
  EXPECT_THROW(DefectReport::from_matrix(m), InvariantViolation);
  m(1, 1) = -1e-9;
  EXPECT_NO_THROW(DefectReport::from_matrix(m));
}

TEST(CoeffPure, AgreesWithDirectComputation) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const Structure sA = structure_from_unitary(random_unitary(4, rng), 2, 2);
    const Structure sB = structure_from_unitary(random_unitary(4, rng), 2, 2);
    const PureState psi = random_pure(4, rng);
    const DensityMatrix ref = random_density(2, 2, rng);
    const ComplexMatrix coeff = coeff_A_pure(psi, sA, ref, sB);
    const ComplexMatrix direct =
        cross_relevance_matrix(DensityMatrix::from_pure(psi), sA, ProjectionSpec::type_i(ref), sB)
            .defect_matrix;
    EXPECT_LT(oracle::max_abs_diff(coeff, direct), 1e-10);
  }
}

TEST(CoeffPure, DegenerateSchmidtAndProduct) {
  const Structure sA = Structure::reference(2, 2);
  const Structure sB = structure_from_unitary(random_unitary(4, 77), 2, 2);
  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const DensityMatrix ref = random_density(2, 2, 78);
  for (const PureState& psi : {PureState(bell), PureState::basis(4, 1)}) {
    const ComplexMatrix coeff = coeff_A_pure(psi, sA, ref, sB);
    const ComplexMatrix direct = defect_oracle(DensityMatrix::from_pure(psi).matrix(), sA,
                                               ref.matrix(), sB);
    EXPECT_LT(oracle::max_abs_diff(coeff, direct), 1e-10);
  }
}

TEST(CoeffMixed, AgreesWithDirectComputation) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const Structure sA = structure_from_unitary(random_unitary(4, rng), 2, 2);
    const Structure sB = structure_from_unitary(random_unitary(4, rng), 2, 2);
    const double w = 0.1 + 0.8 * rng.uniform();
    const SeparableEnsemble ens(
        {w, 1.0 - w}, {{random_density(2, 2, rng), random_density(2, 1, rng)},
                       {random_density(2, 1, rng), random_density(2, 2, rng)}});
    const DensityMatrix ref = random_density(2, 2, rng);
    const ComplexMatrix coeff = coeff_Lambda_mixed(ens, sA, ref, sB);
    const DensityMatrix rho = ens.assemble(sA);
    EXPECT_LT(oracle::max_abs_diff(coeff, defect_oracle(rho.matrix(), sA, ref.matrix(), sB)),
              1e-10);
    EXPECT_LT(oracle::max_abs_diff(sA.W().adjoint() * rho.matrix() * sA.W(), ens.assemble_local()),
              1e-13);
  }
}

TEST(CoeffMixed, EnsembleValidation) {
  const DensityMatrix a = DensityMatrix::maximally_mixed(2);
  const DensityMatrix b = DensityMatrix::maximally_mixed(3);
  EXPECT_THROW(SeparableEnsemble({0.5, 0.4}, {{a, a}, {a, a}}), InvalidInput);
  EXPECT_THROW(SeparableEnsemble({-0.5, 1.5}, {{a, a}, {a, a}}), InvalidInput);
  EXPECT_THROW(SeparableEnsemble({0.5, 0.5}, {{a, a}, {a, b}}), InvalidInput);
  EXPECT_THROW(SeparableEnsemble({1.0}, {}), InvalidInput);
}

TEST(Lemma2, VanishesForIdenticalStructures) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const Structure s = structure_from_unitary(random_unitary(4, rng), 2, 2);
    const ProjectionSpec spec = ProjectionSpec::type_i(random_density(2, 2, rng));
    const DensityMatrix rho = random_density(4, 2, rng);
    EXPECT_LE(lemma2_defect(rho, s, spec, s, spec), 1e-10);
  }
}

TEST(Lemma2, GenericForRandomStructures) {
  int nonzero = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const Structure sA = structure_from_unitary(random_unitary(4, rng), 2, 2);
    const Structure sB = structure_from_unitary(random_unitary(4, rng), 2, 2);
    const ProjectionSpec mm = ProjectionSpec::type_i(DensityMatrix::maximally_mixed(2));
    const DensityMatrix rho = DensityMatrix::from_pure(random_pure(4, rng));
    const double d = lemma2_defect(rho, sA, mm, sB, mm);
    EXPECT_NEAR(d, lemma2_defect(rho, sB, mm, sA, mm), 1e-12);
    nonzero += d > 1e-6 ? 1 : 0;
  }
  EXPECT_EQ(nonzero, 50);
}

TEST(Lemma2, RequiresTypeI) {
  const Structure s = Structure::reference(2, 2);
  const ProjectionSpec t3 = ProjectionSpec::type_iii_from_basis(ComplexMatrix::Identity(2, 2));
  const ProjectionSpec t1 = ProjectionSpec::type_i(DensityMatrix::maximally_mixed(2));
  EXPECT_THROW(lemma2_defect(DensityMatrix::maximally_mixed(4), s, t3, s, t1), InvalidInput);
}

TEST(Teleport, PaperSetupDefectIsThreeHalves) {
  // P_A with rho_ref = |phi><phi| on 1|(2,3) fixes rho; P_B with I/2 on (1,2)|3.
  // P_A P_B rho - P_B P_A rho = |u><u| (x) (I/4 - |phi><phi|), trace norm 3/4 + 3 * 1/4.
  const FactorLayout layout({2, 2, 2});
  const Structure sA = structure_from_grouping(layout, {0});
  const Structure sB = structure_from_grouping(layout, {0, 1});
  ComplexVector phi = ComplexVector::Zero(4);
  phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
  const ProjectionSpec specA = ProjectionSpec::type_i(DensityMatrix(phi * phi.adjoint()));
  const ProjectionSpec specB = ProjectionSpec::type_i(DensityMatrix::maximally_mixed(2));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const DensityMatrix rho = DensityMatrix::from_pure(teleport_state(random_pure(2, seed)));
    EXPECT_LT(trace_norm(project(rho, sA, specA) - rho.matrix()), 1e-12);
    EXPECT_NEAR(lemma2_defect(rho, sA, specA, sB, specB), 1.5, 1e-12);
  }
}

TEST(Teleport, MaximallyMixedReferencesCommute) {
  const FactorLayout layout({2, 2, 2});
  const Structure sA = structure_from_grouping(layout, {0});
  const Structure sB = structure_from_grouping(layout, {0, 1});
  const DensityMatrix rho = DensityMatrix::from_pure(teleport_state(PureState::basis(2, 0)));
  const ProjectionSpec a = ProjectionSpec::type_i(DensityMatrix::maximally_mixed(4));
  const ProjectionSpec b = ProjectionSpec::type_i(DensityMatrix::maximally_mixed(2));
  EXPECT_LE(lemma2_defect(rho, sA, a, sB, b), 1e-12);
}

TEST(Teleport, ReducedSpectra) {
  const FactorLayout layout({2, 2, 2});
  const Structure s12 = structure_from_grouping(layout, {0, 1});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const PureState u = random_pure(2, seed);
    const PureState psi = teleport_state(u);
    ASSERT_EQ(psi.dim(), 8);
    const RealVector ev = reduced_state(DensityMatrix::from_pure(psi), s12, Part::S).eigenvalues();
    EXPECT_NEAR(ev(0), 0.0, 1e-10);
    EXPECT_NEAR(ev(1), 0.0, 1e-10);
    EXPECT_NEAR(ev(2), 0.5, 1e-10);
    EXPECT_NEAR(ev(3), 0.5, 1e-10);
  }
  EXPECT_THROW(teleport_state(PureState::basis(3, 0)), InvalidInput);
}

TEST(MutualInformation, KnownValues) {
  const Structure s = Structure::reference(2, 2);
  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(mutual_information(DensityMatrix::from_pure(PureState(bell)), s),
              2.0 * std::log(2.0), 1e-12);
  const DensityMatrix prod(kron(random_density(2, 2, 1).matrix(), random_density(2, 2, 2).matrix()));
  EXPECT_NEAR(mutual_information(prod, s), 0.0, 1e-12);
}

TEST(MutualInformation, ProductInOwnStructureOnly) {
  Rng rng(9);
  const Structure sA = structure_from_unitary(random_unitary(4, rng), 2, 2);
  const Structure sB = structure_from_unitary(random_unitary(4, rng), 2, 2);
  const DensityMatrix rho(from_structure_basis(
      kron(random_density(2, 2, rng).matrix(), random_density(2, 2, rng).matrix()), sA));
  EXPECT_LE(std::abs(mutual_information(rho, sA)), 1e-9);
  EXPECT_GT(mutual_information(rho, sB), 1e-6);
}

}  // namespace
}  // namespace tpslab
