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
#include <set>

#include <gtest/gtest.h>

#include "tpslab/linalg.hpp"
#include "tpslab/random.hpp"

namespace tpslab {
namespace {

TEST(Random, SameSeedSameStream) {
  Rng a(99);
  Rng b(99);
  for (int k = 0; k < 100; ++k) {
    ASSERT_EQ(a.next_u64(), b.next_u64());
  }
  EXPECT_EQ(random_unitary(4, 7), random_unitary(4, 7));
}

TEST(Random, DerivedSeedsAreDistinct) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t t = 0; t < 1000; ++t) {
    seen.insert(derive_seed(42, t));
  }
  EXPECT_EQ(seen.size(), 1000U);
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
}

TEST(Random, UniformRange) {
  Rng rng(3);
  for (int k = 0; k < 10000; ++k) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(Random, ComplexNormalSecondMoment) {
  Rng rng(4);
  const int n = 200000;
  double m2 = 0.0;
  Complex mean = 0.0;
  for (int k = 0; k < n; ++k) {
    const Complex z = rng.complex_normal();
    m2 += std::norm(z);
    mean += z;
  }
  EXPECT_NEAR(m2 / n, 1.0, 0.02);
  EXPECT_LT(std::abs(mean / static_cast<double>(n)), 0.01);
}

TEST(Random, UnitaryIsUnitary) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_LT(unitarity_defect(random_unitary(8, seed)), 1e-12);
  }
}

TEST(Random, HaarPhaseDistribution) {
  // Haar measure is invariant under U -> -U; the mean of U(0,0) must vanish.
  Complex mean = 0.0;
  const int n = 4000;
  for (int k = 0; k < n; ++k) {
    mean += random_unitary(2, static_cast<std::uint64_t>(k))(0, 0);
  }
  EXPECT_LT(std::abs(mean / static_cast<double>(n)), 0.05);
}

TEST(Random, DensityRankAndTrace) {
  for (Index rank : {1, 2, 4}) {
    const DensityMatrix rho = random_density(4, rank, 10 + static_cast<std::uint64_t>(rank));
    const RealVector ev = rho.eigenvalues();
    EXPECT_NEAR(ev.sum(), 1.0, 1e-12);
    Index nonzero = 0;
    for (Index k = 0; k < ev.size(); ++k) {
      nonzero += ev(k) > 1e-10 ? 1 : 0;
    }
    EXPECT_EQ(nonzero, rank);
  }
}

TEST(Random, GueIsHermitian) {
  EXPECT_LT(hermiticity_defect(random_gue(6, 1)), 1e-15);
}

TEST(Random, RejectsTinyDimensions) {
  EXPECT_THROW(random_unitary(1, 0), InvalidInput);
  EXPECT_THROW(random_pure(0, 0), InvalidInput);
  EXPECT_THROW(random_density(4, 5, 0), InvalidInput);
}

}  // namespace
}  // namespace tpslab
