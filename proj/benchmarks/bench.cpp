// Copyright 2026 the equichan authors
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

#include "equichan/compose.hpp"
#include "equichan/oracle.hpp"
#include "equichan/rng.hpp"

using namespace equichan;

namespace {

ComplexMatrix bench_hermitian(int n) {
  Rng rng(1);
  ComplexMatrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = rng.complex_gauss();
  }
  return 0.5 * (g + g.adjoint());
}

void BM_hermitian_eigenvalues(benchmark::State& state) {
  const ComplexMatrix h = bench_hermitian(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eigenvalues(h));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_hermitian_eigenvalues)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_choi_generic_product(benchmark::State& state) {
  const int n2 = static_cast<int>(state.range(0));
  const ChannelParams p(
      ProductParams(3, n2, {1, 0}, {0.3, 0}, {-0.2, 0}, {0.1, 0}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(choi_generic(p));
  }
}
BENCHMARK(BM_choi_generic_product)->Arg(2)->Arg(3);

void BM_kadison_gap_u5(benchmark::State& state) {
  const ChannelParams p(UnitaryParams(5, {1, 0}, {0.4, 0}));
  Rng rng(2);
  const ComplexMatrix x = rng.unit_ginibre(5, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kadison_gap(p, x));
  }
}
BENCHMARK(BM_kadison_gap_u5);

void BM_schwarz_falsify_member_point(benchmark::State& state) {
  // worst case: a Schwarz point, so the full probe budget runs
  const ChannelParams p(UnitaryParams(3, {1, 0}, {0.2, 0}));
  const int budget = static_cast<int>(state.range(0));
  uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(schwarz_falsify(p, budget, ++seed));
  }
}
BENCHMARK(BM_schwarz_falsify_member_point)->Arg(100)->Arg(2000);

void BM_ppt_numeric_du3(benchmark::State& state) {
  const ChoiMatrix choi = choi_generic(
      ChannelParams(DiagonalParams::symmetric_du3(0.4, {0.2, 0})));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ppt_numeric(choi));
  }
}
BENCHMARK(BM_ppt_numeric_du3);

void BM_ppt2_check_du2(benchmark::State& state) {
  ComplexMatrix off = ComplexMatrix::Zero(2, 2);
  off(0, 1) = 0.45;
  off(1, 0) = 0.45;
  ComplexMatrix mix(2, 2);
  mix << 0.5, 0.5, 0.5, 0.5;
  const ChannelParams p(DiagonalParams(2, off, mix));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ppt2_check(p));
  }
}
BENCHMARK(BM_ppt2_check_du2);

void BM_region_scan_u_grid(benchmark::State& state) {
  ScanSpec spec;
  spec.family = "U";
  spec.fixed["n"] = 2;
  spec.axes = {{"lambda", -1.2, 1.2, 0.05}};
  spec.predicates = {"schwarz", "cp", "ppt_eb"};
  spec.oracle_budget = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(region_scan(spec));
  }
}
BENCHMARK(BM_region_scan_u_grid)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
