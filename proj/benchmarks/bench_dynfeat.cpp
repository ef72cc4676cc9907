#include <benchmark/benchmark.h>

#include <random>

#include "dynfeat/assortativity.hpp"
#include "dynfeat/cross_validation.hpp"
#include "dynfeat/features.hpp"
#include "dynfeat/generators.hpp"
#include "dynfeat/spectral.hpp"
#include "dynfeat/svm.hpp"
#include "dynfeat/walk_operator.hpp"

using namespace dynfeat;

namespace {

Graph er(std::size_t n, std::uint64_t seed) {
  // Mean degree around 6 keeps the graphs sparse as n grows.
  return generate_topology(Topology::erdos_renyi, n, std::min(0.9, 6.0 / static_cast<double>(n)) + 0.02, seed);
}

std::vector<double> random_vector(std::size_t n) {
  std::mt19937_64 gen(1);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = normal(gen);
  return v;
}

void BM_StreamedAssortativity(benchmark::State& state) {
  const WalkOperator w(er(static_cast<std::size_t>(state.range(0)), 3));
  const auto v = random_vector(w.vertex_count());
  const TimeGrid ts;
  for (auto _ : state) benchmark::DoNotOptimize(numeric_assortativity(w, v, ts));
}
BENCHMARK(BM_StreamedAssortativity)->RangeMultiplier(2)->Range(16, 2048);

// Quadratic forms against the explicit rho(t) for every t of the grid.
void BM_DenseAssortativity(benchmark::State& state) {
  const WalkOperator w(er(static_cast<std::size_t>(state.range(0)), 3));
  const auto v = random_vector(w.vertex_count());
  const std::size_t n = w.vertex_count();
  const TimeGrid ts;
  for (auto _ : state) {
    double acc = 0.0;
    for (int t : ts.values()) {
      const auto rho = dense_autocovariance_oracle(w, t);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) acc += v[i] * rho(i, j) * v[j];
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_DenseAssortativity)->RangeMultiplier(2)->Range(16, 128);

void BM_IdentityPartition(benchmark::State& state) {
  const WalkOperator w(er(static_cast<std::size_t>(state.range(0)), 3));
  const TimeGrid ts;
  for (auto _ : state) benchmark::DoNotOptimize(identity_assortativity(w, ts));
}
BENCHMARK(BM_IdentityPartition)->RangeMultiplier(4)->Range(16, 1024);

void BM_SecondEigenvector(benchmark::State& state) {
  const WalkOperator w(er(static_cast<std::size_t>(state.range(0)), 5));
  for (auto _ : state) benchmark::DoNotOptimize(second_left_eigenvector(w));
}
BENCHMARK(BM_SecondEigenvector)->RangeMultiplier(4)->Range(16, 1024);

void BM_ExtractFeatures(benchmark::State& state) {
  auto params = planted_signal_params();
  params.graphs_a = params.graphs_b = 50;
  const auto ds = generate_synthetic_dataset(params, 1);
  auto cfg = FeatureConfig::social();
  for (auto _ : state) benchmark::DoNotOptimize(extract_features(ds, cfg, static_cast<int>(state.range(0))));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ds.size()));
}
BENCHMARK(BM_ExtractFeatures)->Arg(1)->Arg(4)->UseRealTime();

void BM_TrainSvm(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 gen(2);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix x(n, 22);
  std::vector<int> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = i % 2 ? 1 : -1;
    for (std::size_t j = 0; j < 22; ++j) x(i, j) = normal(gen) + (j < 4 ? 0.8 * y[i] : 0.0);
  }
  SvmOptions opts;
  for (auto _ : state) benchmark::DoNotOptimize(train_linear_svm(x, y, opts));
}
BENCHMARK(BM_TrainSvm)->Arg(188)->Arg(1113);

}  // namespace

BENCHMARK_MAIN();
