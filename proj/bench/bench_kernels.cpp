// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <map>

#include "vaxnet/centrality.hpp"
#include "vaxnet/experiment.hpp"
#include "vaxnet/graphgen.hpp"
#include "vaxnet/sirsim.hpp"
#include "vaxnet/spectral.hpp"

using namespace vaxnet;

namespace {

Execution mode(const benchmark::State& st) {
  return st.range(0) ? Execution::Parallel : Execution::Serial;
}

const Graph& er(std::size_t n) {
  static std::map<std::size_t, Graph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gen_erdos_renyi(n, 0.1, 3)).first;
  return it->second;
}

void BM_Betweenness(benchmark::State& st) {
  const Graph& g = er(static_cast<std::size_t>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(betweenness_centrality(g, false, mode(st)));
}

void BM_Closeness(benchmark::State& st) {
  const Graph& g = er(static_cast<std::size_t>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(closeness_centrality(g, mode(st)));
}

void BM_LambdaMax(benchmark::State& st) {
  const Graph& g = er(static_cast<std::size_t>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(lambda_max(g, 1e-9, 50000, mode(st)));
}

void BM_SirEnsemble(benchmark::State& st) {
  const Graph& g = er(static_cast<std::size_t>(st.range(1)));
  SirParams p;
  p.tau = 0.05;
  const std::vector<Intervention> plan{{2.0, Strategy::random(1), 50}};
  for (auto _ : st) benchmark::DoNotOptimize(ensemble(g, p, plan, 16, 9, mode(st)));
}

void BM_EigenDropPipeline(benchmark::State& st) {
  ExperimentConfig cfg;
  cfg.networks = {{"er", {Family::ErdosRenyi, 300, 0.1}},
                  {"ba", {Family::BarabasiAlbert, 300, 0.4, 5}}};
  cfg.replicates = 8;
  cfg.k = 30;
  for (auto _ : st) benchmark::DoNotOptimize(run_table1(cfg, mode(st)));
}

}  // namespace

BENCHMARK(BM_Betweenness)->ArgsProduct({{0, 1}, {500, 1000}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Closeness)->ArgsProduct({{0, 1}, {500, 1000}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LambdaMax)->ArgsProduct({{0, 1}, {1000, 4000}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SirEnsemble)->ArgsProduct({{0, 1}, {1000}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EigenDropPipeline)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
