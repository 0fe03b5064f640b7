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

#include "tpslab/random.hpp"

#include <cmath>
#include <numbers>

namespace tpslab {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t trial) {
  return splitmix64(base_seed + (trial + 1) * 0x9E3779B97F4A7C15ULL);
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

Complex Rng::complex_normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-std::log1p(-u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

namespace {

void require_dim(Index dim, const char* what) {
  if (dim < 2) {
    throw InvalidInput(std::string(what) + ": dimension must be >= 2");
  }
}

}  // namespace

ComplexMatrix ginibre(Index rows, Index cols, Rng& rng) {
  if (rows <= 0 || cols <= 0) {
    throw InvalidInput("ginibre: shape must be positive");
  }
  ComplexMatrix g(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      g(i, j) = rng.complex_normal();
    }
  }
  return g;
}

ComplexVector gaussian_vector(Index dim, Rng& rng) {
  ComplexVector v(dim);
  for (Index i = 0; i < dim; ++i) {
    v(i) = rng.complex_normal();
  }
  return v;
}

ComplexMatrix random_gue(Index dim, Rng& rng) {
  require_dim(dim, "random_gue");
  const ComplexMatrix g = ginibre(dim, dim, rng);
  return 0.5 * (g + g.adjoint());
}

PureState random_pure(Index dim, Rng& rng) {
  require_dim(dim, "random_pure");
  return PureState::normalized(gaussian_vector(dim, rng));
}

DensityMatrix random_density(Index dim, Index rank, Rng& rng) {
  require_dim(dim, "random_density");
  if (rank < 1 || rank > dim) {
    throw InvalidInput("random_density: rank must satisfy 1 <= rank <= dim");
  }
  const ComplexMatrix g = ginibre(dim, rank, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  // exact Hermiticity; the product is Hermitian only up to rounding
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(std::move(rho));
}

ComplexMatrix random_unitary(Index dim, Rng& rng) {
  require_dim(dim, "random_unitary");
  const ComplexMatrix g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (Index k = 0; k < dim; ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    if (mag > 0.0) {
      q.col(k) *= d / mag;
    }
  }
  return q;
}

ComplexMatrix random_gue(Index dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_gue(dim, rng);
}

PureState random_pure(Index dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_pure(dim, rng);
}

DensityMatrix random_density(Index dim, Index rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(dim, rank, rng);
}

ComplexMatrix random_unitary(Index dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_unitary(dim, rng);
}

}  // namespace tpslab
