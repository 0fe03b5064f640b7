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


#include <benchmark/benchmark.h>

#include "tpslab/dynamics.hpp"
#include "tpslab/projections.hpp"
#include "tpslab/random.hpp"
#include "tpslab/relativity.hpp"
#include "tpslab/structures.hpp"

namespace {

using namespace tpslab;

void BM_Eigh(benchmark::State& state) {
  const ComplexMatrix h = random_gue(state.range(0), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigh(h));
  }
}
BENCHMARK(BM_Eigh)->RangeMultiplier(2)->Range(4, 64);

void BM_Propagator(benchmark::State& state) {
  const EigenSystem es = eigh(random_gue(state.range(0), 2));
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagator(es, t += 0.01));
  }
}
BENCHMARK(BM_Propagator)->RangeMultiplier(2)->Range(4, 64);

void BM_PartialTrace(benchmark::State& state) {
  const Index dA = state.range(0);
  const DensityMatrix rho = random_density(dA * dA, 2, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(partial_trace(rho.matrix(), dA, dA, Keep::A));
  }
}
BENCHMARK(BM_PartialTrace)->RangeMultiplier(2)->Range(2, 8);

void BM_CrossRelevance(benchmark::State& state) {
  const Index dS = state.range(0);
  const Index dim = dS * dS;
  const Structure sA = structure_from_unitary(random_unitary(dim, 4), dS, dS);
  const Structure sB = structure_from_unitary(random_unitary(dim, 5), dS, dS);
  const ProjectionSpec spec = ProjectionSpec::type_i(DensityMatrix::maximally_mixed(dS));
  const DensityMatrix rho = random_density(dim, 2, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cross_relevance_matrix(rho, sA, spec, sB));
  }
}
BENCHMARK(BM_CrossRelevance)->RangeMultiplier(2)->Range(2, 8);

void BM_Lemma2(benchmark::State& state) {
  const Index dS = state.range(0);
  const Index dim = dS * dS;
  const Structure sA = structure_from_unitary(random_unitary(dim, 7), dS, dS);
  const Structure sB = structure_from_unitary(random_unitary(dim, 8), dS, dS);
  const ProjectionSpec spec = ProjectionSpec::type_i(DensityMatrix::maximally_mixed(dS));
  const DensityMatrix rho = DensityMatrix::from_pure(random_pure(dim, 9));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lemma2_defect(rho, sA, spec, sB, spec));
  }
}
BENCHMARK(BM_Lemma2)->RangeMultiplier(2)->Range(2, 8);

void BM_CoeffPure(benchmark::State& state) {
  const Index dS = state.range(0);
  const Index dim = dS * dS;
  const Structure sA = structure_from_unitary(random_unitary(dim, 10), dS, dS);
  const Structure sB = structure_from_unitary(random_unitary(dim, 11), dS, dS);
  const DensityMatrix ref = random_density(dS, dS, 12);
  const PureState psi = random_pure(dim, 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(coeff_A_pure(psi, sA, ref, sB));
  }
}
BENCHMARK(BM_CoeffPure)->RangeMultiplier(2)->Range(2, 4);

void BM_Trajectory3Qubit(benchmark::State& state) {
  const FactorLayout layout({2, 2, 2});
  const Structure sA = structure_from_grouping(layout, {0});
  const Structure sB = structure_from_grouping(layout, {0, 1});
  const ProjectionSpec pa = ProjectionSpec::type_i(DensityMatrix::maximally_mixed(4));
  const ProjectionSpec pb = ProjectionSpec::type_i(DensityMatrix::maximally_mixed(2));
  const Hamiltonian h = random_hamiltonian(8, 14);
  const DensityMatrix rho0 = DensityMatrix::from_pure(teleport_state(PureState::basis(2, 0)));
  const TimeGrid grid(0.0, 5.0, 49);
  for (auto _ : state) {
    benchmark::DoNotOptimize(trajectory(rho0, h, grid, sA, pa, sB, pb));
  }
}
BENCHMARK(BM_Trajectory3Qubit);

}  // namespace

BENCHMARK_MAIN();
