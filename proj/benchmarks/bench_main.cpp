// Copyright 2026 The ColorForge Authors
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "colorforge/constructions.hpp"
#include "colorforge/document.hpp"
#include "colorforge/operators.hpp"
#include "colorforge/representations.hpp"
#include "colorforge/structures.hpp"
#include "colorforge/theorems.hpp"

namespace colorforge {
namespace {

AlgebraPresentation fixture(const std::string& name) { return build_algebra(load_fixture(name)); }

void BM_ScalarDotProduct(benchmark::State& state) {
  std::vector<Scalar> a, b;
  for (long i = 1; i <= 64; ++i) {
    a.emplace_back(mpq_class(i, i + 1));
    b.emplace_back(mpq_class(2 * i - 1, 3));
  }
  for (auto _ : state) {
    Scalar sum;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_ScalarDotProduct);

void BM_CheckStructure(benchmark::State& state, const char* name) {
  const AlgebraPresentation p = fixture(name);
  for (auto _ : state) benchmark::DoNotOptimize(check_structure(p));
}
BENCHMARK_CAPTURE(BM_CheckStructure, bihom_3lie_dim4, "bihom-3lie-dim4");
BENCHMARK_CAPTURE(BM_CheckStructure, poisson_z2, "paper-poisson-z2");
BENCHMARK_CAPTURE(BM_CheckStructure, prepoisson_dim4, "classical-prepoisson-dim4");

void BM_ThreeLieRepCheck(benchmark::State& state) {
  const ThreeLieRep ad = adjoint_rep(fixture("bihom-3lie-dim4"), 1, -1);
  for (auto _ : state) benchmark::DoNotOptimize(check_3_lie_rep(ad));
}
BENCHMARK(BM_ThreeLieRepCheck);

void BM_TwistingPairs(benchmark::State& state) {
  const AlgebraPresentation p = fixture("classical-3lie-z2z2");
  for (auto _ : state) benchmark::DoNotOptimize(twisting_pairs(p, {}, 10'000));
}
BENCHMARK(BM_TwistingPairs)->Unit(benchmark::kMillisecond);

void BM_EnumerateRotaBaxter(benchmark::State& state) {
  const AlgebraPresentation p = fixture("classical-assoc-nilpotent");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_rota_baxter(p));
}
BENCHMARK(BM_EnumerateRotaBaxter)->Unit(benchmark::kMillisecond);

void BM_EnumerateKupershmidt3Lie(benchmark::State& state) {
  const ThreeLieRep ad = adjoint_rep(fixture("classical-3lie-z2"), 0, 0);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_kupershmidt(ad));
}
BENCHMARK(BM_EnumerateKupershmidt3Lie)->Unit(benchmark::kMillisecond);

void BM_SemidirectPoisson(benchmark::State& state) {
  const PoissonRep m = adjoint_poisson_rep(fixture("classical-poisson-dim4"));
  for (auto _ : state) benchmark::DoNotOptimize(check_structure(semidirect_poisson(m)));
}
BENCHMARK(BM_SemidirectPoisson)->Unit(benchmark::kMillisecond);

void BM_DocumentRoundTrip(benchmark::State& state) {
  const std::string text = fixture_text("classical-poisson-dim4");
  for (auto _ : state) benchmark::DoNotOptimize(serialize_document(parse_document(text)));
}
BENCHMARK(BM_DocumentRoundTrip);

}  // namespace
}  // namespace colorforge

BENCHMARK_MAIN();
