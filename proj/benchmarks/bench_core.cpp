#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "segrereg/betti.hpp"
#include "segrereg/local_cohomology.hpp"
#include "segrereg/oracle.hpp"
#include "segrereg/segre_engine.hpp"

using namespace segrereg;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

SimplicialComplex random_complex(int n, std::mt19937& rng) {
  const Face full = (Face{1} << n) - 1;
  std::uniform_int_distribution<Face> face_dist(1, full);
  std::vector<Face> faces;
  for (int k = 0; k < n; ++k) faces.push_back(face_dist(rng));
  return build_complex_masks(n, faces);
}

} // namespace

static void BM_ReducedHomology(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(12345);
  std::vector<SimplicialComplex> complexes;
  for (int k = 0; k < 16; ++k) complexes.push_back(random_complex(n, rng));
  std::size_t idx = 0;
  for (auto _ : state) {
    auto ranks = reduced_homology_ranks(complexes[idx++ % complexes.size()], kQ);
    benchmark::DoNotOptimize(ranks);
  }
}
BENCHMARK(BM_ReducedHomology)->DenseRange(4, 10, 2);

static void BM_GradedBetti(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(777);
  auto delta = random_complex(n, rng);
  for (auto _ : state) {
    auto table = graded_betti(delta, kQ, n);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_GradedBetti)->DenseRange(4, 9, 1)->Unit(benchmark::kMillisecond);

static void BM_Summarize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(999);
  auto delta = random_complex(n, rng);
  for (auto _ : state) {
    auto summary = summarize(delta, kQ);
    benchmark::DoNotOptimize(summary);
  }
}
BENCHMARK(BM_Summarize)->DenseRange(4, 9, 1)->Unit(benchmark::kMillisecond);

static void BM_RegularitySegreCm(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  std::vector<ModuleProfile> profiles;
  for (int i = 0; i < s; ++i) profiles.push_back(cm_profile(2 + i % 3, i % 4, 0));
  for (auto _ : state) {
    auto report = regularity_segre(profiles);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_RegularitySegreCm)->DenseRange(2, 8, 2);

static void BM_RegularityOracle(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  std::vector<ModuleProfile> profiles;
  for (int i = 0; i < s; ++i)
    profiles.push_back(
        veronese_transform(polynomial_ring_profile(2 + i % 3), 1 + i % 3, i % 2));
  auto factors = exact_factors(profiles);
  for (auto _ : state) {
    long long reg = regularity_oracle(factors);
    benchmark::DoNotOptimize(reg);
  }
}
BENCHMARK(BM_RegularityOracle)->DenseRange(2, 8, 2);

BENCHMARK_MAIN();
