#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "qloc/encoding.hpp"
#include "qloc/rng.hpp"
#include "qloc/statevector.hpp"
#include "qloc/swap_test.hpp"

namespace {

qloc::AmplitudeVector random_vector(int num_qubits, std::uint64_t seed) {
  qloc::RngStream rng(seed, 0);
  std::vector<double> weights(std::size_t{1} << num_qubits);
  for (auto& w : weights) {
    w = rng.next_double() + 1e-3;
  }
  return qloc::AmplitudeVector::normalized(std::move(weights));
}

void BM_Hadamard(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  qloc::StateVector sv(n);
  for (auto _ : state) {
    sv.apply_hadamard(n / 2);
    benchmark::DoNotOptimize(sv);
  }
  state.SetItemsProcessed(state.iterations() << n);
}
BENCHMARK(BM_Hadamard)->DenseRange(4, 20, 4);

void BM_ControlledSwap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  qloc::StateVector sv(2 * n + 1);
  std::vector<int> reg_a(n);
  std::vector<int> reg_b(n);
  for (int i = 0; i < n; ++i) {
    reg_a[i] = i;
    reg_b[i] = n + i;
  }
  sv.apply_hadamard(2 * n);
  for (auto _ : state) {
    sv.apply_cswap(2 * n, reg_a, reg_b);
    benchmark::DoNotOptimize(sv);
  }
}
BENCHMARK(BM_ControlledSwap)->DenseRange(1, 9, 2);

void BM_RotationTreePrep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto vec = random_vector(n, 7);
  for (auto _ : state) {
    qloc::StateVector sv(n);
    qloc::apply_sequence(sv, qloc::rotation_tree_circuit(vec));
    benchmark::DoNotOptimize(sv);
  }
}
BENCHMARK(BM_RotationTreePrep)->DenseRange(1, 8, 1);

void BM_ExactSwapTest(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto psi = random_vector(n, 11);
  const auto phi = random_vector(n, 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qloc::exact_similarity(psi, phi));
  }
}
BENCHMARK(BM_ExactSwapTest)->DenseRange(1, 8, 1);

void BM_SampledSwapTest(benchmark::State& state) {
  const auto psi = random_vector(2, 17);
  const auto phi = random_vector(2, 19);
  const long shots = state.range(0);
  std::uint64_t stream = 0;
  for (auto _ : state) {
    qloc::RngStream rng(99, stream++);
    benchmark::DoNotOptimize(
        qloc::estimate_similarity(psi, phi, shots, rng));
  }
  state.SetItemsProcessed(state.iterations() * shots);
}
BENCHMARK(BM_SampledSwapTest)->RangeMultiplier(4)->Range(16, 16384);

}  // namespace

BENCHMARK_MAIN();
