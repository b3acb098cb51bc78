// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "schwinger/schwinger.hpp"

namespace {

using namespace schwinger;

const ModelParams kParams{1.0, 0.1, 0.0};

void BM_SectorBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_sector(n, n / 2));
}
BENCHMARK(BM_SectorBasis)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Matvec(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SectorOperator op(canonical_sector(n), kParams);
  Eigen::VectorXd v = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(op.dim())).normalized();
  Eigen::VectorXd out(v.size());
  for (auto _ : state) {
    op.apply(v, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(op.dim()));
}
BENCHMARK(BM_Matvec)->Arg(16)->Arg(18)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Lanczos(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SectorOperator op(canonical_sector(n), kParams);
  for (auto _ : state) benchmark::DoNotOptimize(ground_state(op).energy);
}
BENCHMARK(BM_Lanczos)->Arg(12)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_AdRecursion(benchmark::State& state) {
  GroundStateProvider prov(kParams);
  const OverlapChain chain = direct_chain(prov.seeds(12), 12);
  const AnsatzSpec& spec = ansatz_spec(SpecKind::k11);
  const int target = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ad_recursion(spec, kParams, chain, 12, target).steps.size());
}
BENCHMARK(BM_AdRecursion)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_CodecCompress(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GroundStateProvider prov(kParams);
  const QubismImage img = state_to_qubism(prov.get(n).state);
  for (auto _ : state) benchmark::DoNotOptimize(compress(img.intensity, CodecOptions{}).mappings.size());
}
BENCHMARK(BM_CodecCompress)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_CodecDecompress(benchmark::State& state) {
  GroundStateProvider prov(kParams);
  const QubismImage img = state_to_qubism(prov.get(12).state);
  const PifsCode code = compress(img.intensity, CodecOptions{});
  const int side = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(decompress(code, side, 12).sum());
}
BENCHMARK(BM_CodecDecompress)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
