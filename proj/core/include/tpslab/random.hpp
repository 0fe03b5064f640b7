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

// Seeded random ensembles.
//
// Generator contract (recorded in every report header):
//   * engine: std::mt19937_64, whose output sequence is fixed by the C++ standard;
//   * uniform doubles take the top 53 bits of one engine draw, u = (x >> 11) * 2^-53;
//   * a standard complex Gaussian (E|z|^2 = 1) consumes two uniforms u1, u2 and
//     returns sqrt(-ln(1 - u1)) * (cos 2 pi u2 + i sin 2 pi u2), i.e. Box-Muller with
//     the real part first, then the imaginary part;
//   * matrices are filled row-major, one complex Gaussian per entry;
//   * per-trial seeds are derive_seed(base, trial): splitmix64 applied to
//     base + (trial + 1) * 0x9E3779B97F4A7C15.

#include <cstdint>
#include <random>
#include <string_view>

#include "tpslab/linalg.hpp"

namespace tpslab {

inline constexpr std::string_view kGeneratorName = "mt19937_64+splitmix64-derive+box-muller";
inline constexpr int kGeneratorVersion = 1;

/// splitmix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t trial);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform in [0, 1).
  double uniform();
  /// Standard complex normal, E|z|^2 = 1.
  Complex complex_normal();

 private:
  std::mt19937_64 engine_;
};

/// rows x cols matrix of i.i.d. standard complex normals (row-major draw order).
ComplexMatrix ginibre(Index rows, Index cols, Rng& rng);
ComplexVector gaussian_vector(Index dim, Rng& rng);

/// (G + G^dagger) / 2, no further normalization.
ComplexMatrix random_gue(Index dim, Rng& rng);
PureState random_pure(Index dim, Rng& rng);
/// G G^dagger / tr(G G^dagger), G of shape dim x rank.
DensityMatrix random_density(Index dim, Index rank, Rng& rng);
/// QR of a Ginibre matrix with R's diagonal made positive real.
ComplexMatrix random_unitary(Index dim, Rng& rng);

ComplexMatrix random_gue(Index dim, std::uint64_t seed);
PureState random_pure(Index dim, std::uint64_t seed);
DensityMatrix random_density(Index dim, Index rank, std::uint64_t seed);
ComplexMatrix random_unitary(Index dim, std::uint64_t seed);

}  // namespace tpslab
