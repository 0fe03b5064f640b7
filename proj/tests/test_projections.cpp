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


#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tpslab/projections.hpp"
#include "tpslab/random.hpp"
#include "tpslab/structures.hpp"

namespace tpslab {
namespace {

ComplexMatrix basis_projector(Index dim, Index k) {
  ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
  p(k, k) = 1.0;
  return p;
}

// TypeII with computational projectors on S and orthogonal-support rho_E's.
ProjectionSpec random_type_ii(Index dS, Index dE, Rng& rng) {
  const ComplexMatrix u = random_unitary(dE, rng);
  std::vector<ProjectionBin> bins;
  for (Index n = 0; n < dS; ++n) {
    const ComplexVector v = u.col(n);
    bins.push_back({basis_projector(dS, n), DensityMatrix(v * v.adjoint())});
  }
  return ProjectionSpec::type_ii(std::move(bins));
}

std::vector<ProjectionSpec> all_families(Index dS, Index dE, Rng& rng) {
  std::vector<ProjectionSpec> out;
  out.push_back(ProjectionSpec::type_i(random_density(dE, dE, rng)));
  if (dS <= dE) {
    out.push_back(random_type_ii(dS, dE, rng));
  }
  out.push_back(ProjectionSpec::type_iii_from_basis(random_unitary(dE, rng)));
  return out;
}

TEST(TypeI, MatchesElementOracle) {
  Rng rng(1);
  const Structure s = structure_from_unitary(random_unitary(6, rng), 2, 3);
  const DensityMatrix ref = random_density(3, 2, rng);
  const DensityMatrix rho = random_density(6, 6, rng);
  const ProjectionSpec spec = ProjectionSpec::type_i(ref);
  const ComplexMatrix local = s.W().adjoint() * rho.matrix() * s.W();
  const ComplexMatrix expect = s.W() * oracle::type_i_local(local, 2, 3, ref.matrix()) *
                               s.W().adjoint();
  EXPECT_LT(oracle::max_abs_diff(project(rho, s, spec), expect), 1e-13);
}

TEST(TypeI, ProductFixedPoint) {
  const Structure s = structure_from_grouping(FactorLayout({2, 2}), {1});
  const DensityMatrix rs = random_density(2, 2, 3);
  const DensityMatrix re = random_density(2, 1, 4);
  const DensityMatrix rho(from_structure_basis(kron(rs.matrix(), re.matrix()), s));
  const ProjectionSpec spec = ProjectionSpec::type_i(re);
  EXPECT_TRUE(reference_matches_environment(rho, s, spec));
  EXPECT_LT(trace_norm(project(rho, s, spec) - rho.matrix()), 1e-13);
  EXPECT_FALSE(reference_matches_environment(
      rho, s, ProjectionSpec::type_i(DensityMatrix::maximally_mixed(2))));
}

TEST(TypeIII, ComputationalBasisDephasesEnvironment) {
  const Structure s = Structure::reference(2, 2);
  const DensityMatrix rho = random_density(4, 4, 7);
  const ProjectionSpec spec = ProjectionSpec::type_iii_from_basis(ComplexMatrix::Identity(2, 2));
  const ComplexMatrix p = project(rho, s, spec);
  for (Index r = 0; r < 4; ++r) {
    for (Index c = 0; c < 4; ++c) {
      const Complex expect = (r % 2 == c % 2) ? rho.matrix()(r, c) : Complex(0.0);
      EXPECT_LT(std::abs(p(r, c) - expect), 1e-15);
    }
  }
}

TEST(Families, RelevanceIdentityProperty) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    for (auto [dS, dE] : {std::pair<Index, Index>{2, 2}, {2, 4}, {4, 2}}) {
      const Structure s = structure_from_unitary(random_unitary(dS * dE, rng), dS, dE);
      const DensityMatrix rho = random_density(dS * dE, 1 + (seed % (dS * dE)), rng);
      for (const ProjectionSpec& spec : all_families(dS, dE, rng)) {
        EXPECT_LE(relevance_defect(rho, s, spec), 1e-10) << to_string(spec.kind());
        EXPECT_LE(idempotency_defect(rho, s, spec), 1e-10) << to_string(spec.kind());
        EXPECT_NEAR(project(rho, s, spec).trace().real(), 1.0, 1e-12);
        EXPECT_NEAR(std::abs(complement(rho, s, spec).trace()), 0.0, 1e-12);
      }
    }
  }
}

TEST(Families, ComplementIsLinear) {
  Rng rng(5);
  const Structure s = structure_from_unitary(random_unitary(4, rng), 2, 2);
  const ComplexMatrix a = ginibre(4, 4, rng);
  const ComplexMatrix b = ginibre(4, 4, rng);
  for (const ProjectionSpec& spec : all_families(2, 2, rng)) {
    const ComplexMatrix lhs = complement(a + Complex(0.0, 2.0) * b, s, spec);
    const ComplexMatrix rhs = complement(a, s, spec) + Complex(0.0, 2.0) * complement(b, s, spec);
    EXPECT_LT(oracle::max_abs_diff(lhs, rhs), 1e-13);
  }
}

TEST(TypeII, RejectsNonOrthogonalProjectors) {
  std::vector<ProjectionBin> bins;
  bins.push_back({basis_projector(2, 0), DensityMatrix(basis_projector(2, 0))});
  bins.push_back({basis_projector(2, 0), DensityMatrix(basis_projector(2, 1))});
  EXPECT_THROW(ProjectionSpec::type_ii(bins), InvalidInput);
}

TEST(TypeII, RejectsIncompleteProjectors) {
  std::vector<ProjectionBin> bins;
  bins.push_back({basis_projector(3, 0), DensityMatrix(basis_projector(3, 0))});
  bins.push_back({basis_projector(3, 1), DensityMatrix(basis_projector(3, 1))});
  EXPECT_THROW(ProjectionSpec::type_ii(bins), InvalidInput);
}

TEST(TypeII, RejectsOverlappingEnvironmentSupports) {
  std::vector<ProjectionBin> bins;
  bins.push_back({basis_projector(2, 0), DensityMatrix::maximally_mixed(2)});
  bins.push_back({basis_projector(2, 1), DensityMatrix(basis_projector(2, 1))});
  EXPECT_THROW(ProjectionSpec::type_ii(bins), InvalidInput);
}

TEST(TypeII, RejectsNonIdempotentProjector) {
  std::vector<ProjectionBin> bins;
  bins.push_back({ComplexMatrix::Identity(2, 2) * 0.5, DensityMatrix(basis_projector(2, 0))});
  bins.push_back({ComplexMatrix::Identity(2, 2) * 0.5, DensityMatrix(basis_projector(2, 1))});
  EXPECT_THROW(ProjectionSpec::type_ii(bins), InvalidInput);
}

TEST(TypeIII, RejectsHigherRankOrIncomplete) {
  std::vector<ComplexMatrix> two = {ComplexMatrix::Identity(2, 2)};
  EXPECT_THROW(ProjectionSpec::type_iii(two), InvalidInput);
  std::vector<ComplexMatrix> incomplete = {basis_projector(3, 0), basis_projector(3, 1)};
  EXPECT_THROW(ProjectionSpec::type_iii(incomplete), InvalidInput);
  ComplexMatrix not_unitary = ComplexMatrix::Identity(2, 2);
  not_unitary(0, 1) = 0.5;
  EXPECT_THROW(ProjectionSpec::type_iii_from_basis(not_unitary), InvalidInput);
}

TEST(Compatibility, DimensionMismatchThrows) {
  const Structure s = Structure::reference(2, 4);
  const ProjectionSpec wrong = ProjectionSpec::type_i(DensityMatrix::maximally_mixed(2));
  EXPECT_THROW(wrong.check_compatible(s), InvalidInput);
  EXPECT_THROW(project(DensityMatrix::maximally_mixed(8), s, wrong), InvalidInput);
  EXPECT_EQ(wrong.dE(), 2);
  EXPECT_EQ(wrong.dS(), 0);
}

}  // namespace
}  // namespace tpslab
