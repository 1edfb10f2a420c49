// Copyright 2026 The kakcell Authors
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

#include <random>
#include <vector>

#include "kakcell/catalog.hpp"
#include "kakcell/cells.hpp"
#include "kakcell/kak.hpp"
#include "kakcell/su4.hpp"
#include "../tests/test_utils.hpp"

using namespace kakcell;

namespace {

std::vector<Matrix4> haar_batch(std::size_t n) {
  std::mt19937_64 rng(99);
  std::vector<Matrix4> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(kakcell::testing::haar_unitary(rng));
  return out;
}

void BM_ExpCanonical(benchmark::State& state) {
  const CanonCoords c{0.3, 0.2, 0.1};
  for (auto _ : state) benchmark::DoNotOptimize(exp_canonical(c));
}
BENCHMARK(BM_ExpCanonical);

void BM_FactorLocal(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const Matrix4 k = kakcell::testing::random_local(rng);
  for (auto _ : state) benchmark::DoNotOptimize(factor_local(k));
}
BENCHMARK(BM_FactorLocal);

void BM_CanonicalizeT(benchmark::State& state) {
  const CanonCoords c{5.1, -2.7, 9.4};
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize_T(c));
}
BENCHMARK(BM_CanonicalizeT);

void BM_CanonicalizeP(benchmark::State& state) {
  const CanonCoords c{5.1, -2.7, 9.4};
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize_P(c));
}
BENCHMARK(BM_CanonicalizeP);

void BM_KakDecomposeRaw(benchmark::State& state) {
  const auto batch = haar_batch(64);
  std::size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(kak_decompose(batch[i++ % batch.size()]));
}
BENCHMARK(BM_KakDecomposeRaw);

void BM_KakDecomposeP(benchmark::State& state) {
  const auto batch = haar_batch(64);
  std::size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        kak_decompose(batch[i++ % batch.size()], CellKind::P));
}
BENCHMARK(BM_KakDecomposeP);

void BM_KakDecomposeDegenerate(benchmark::State& state) {
  const Matrix4 swap = gate_matrix({Gate::Swap, false});
  for (auto _ : state)
    benchmark::DoNotOptimize(kak_decompose(swap, CellKind::P));
}
BENCHMARK(BM_KakDecomposeDegenerate);

}  // namespace

BENCHMARK_MAIN();
