#include <benchmark/benchmark.h>

#include "netdecomp/applications.hpp"
#include "netdecomp/generators.hpp"
#include "netdecomp/separated.hpp"

using namespace netdecomp;

namespace {

SimConfig cfgWithSeed(std::uint64_t seed) {
  SimConfig cfg;
  cfg.seed = seed;
  cfg.cThreshold = 1.0;  // keep the recursion on the multi-level path
  return cfg;
}

void BM_GnpGenerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto g = genGnp(n, 10.0 / (n - 1), cfgWithSeed(1));
    benchmark::DoNotOptimize(g.edgeCount());
  }
}
BENCHMARK(BM_GnpGenerate)->Arg(256)->Arg(1024)->Arg(4096);

void BM_Decompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto g = genGnp(n, 10.0 / (n - 1), cfgWithSeed(1));
  DecomposeOptions opt;
  opt.k = 2;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto res = decompose(g, opt, cfgWithSeed(++seed));
    benchmark::DoNotOptimize(res.decomposition.clusterCount());
  }
}
BENCHMARK(BM_Decompose)->Arg(256)->Arg(1024)->Arg(4096);

void BM_LinialFixpoint(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto g = genGnp(n, 8.0 / (n - 1), cfgWithSeed(2));
  for (auto _ : state) {
    auto run = linialColor(g, kUntilFixpoint);
    benchmark::DoNotOptimize(run.coloring.palette);
  }
}
BENCHMARK(BM_LinialFixpoint)->Arg(128)->Arg(512)->Arg(2048);

void BM_RulingSet(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto g = genGnp(n, 8.0 / (n - 1), cfgWithSeed(3));
  std::vector<Vertex> all(n);
  for (Vertex v = 1; v <= n; ++v) all[v - 1] = v;
  VertexSet universe(std::move(all));
  for (auto _ : state) {
    auto rs = rulingSet(g, universe, 3, RulingMethod::AglpDeterministic, cfgWithSeed(4));
    benchmark::DoNotOptimize(rs.set.members.size());
  }
}
BENCHMARK(BM_RulingSet)->Arg(128)->Arg(512);

void BM_SepDecompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto g = genGnp(n, 8.0 / (n - 1), cfgWithSeed(5));
  SepDecomposeOptions opt;
  opt.k = 2;
  opt.sigma = 3;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto res = sepDecompose(g, opt, cfgWithSeed(++seed));
    benchmark::DoNotOptimize(res.decomposition.clusterCount());
  }
}
BENCHMARK(BM_SepDecompose)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
