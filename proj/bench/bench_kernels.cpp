// Parallel kernels vs the serial reference kernels.

#include <benchmark/benchmark.h>

#include <array>
#include <cstdint>
#include <vector>

#include "djsim/deutsch.hpp"
#include "djsim/qsim.hpp"
#include "djsim/qsim_reference.hpp"

using namespace djsim;

namespace {

qsim::StateVector hadamard_state(std::size_t n) {
  return qsim::apply_all(qsim::zero_state(n), qsim::hadamard());
}

void BM_ApplyTwoQubit(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto psi = hadamard_state(n);
  const auto gate = qsim::kron(qsim::hadamard(), qsim::pauli_x());
  const std::array<std::size_t, 2> targets{0, n - 1};
  for (auto _ : st) benchmark::DoNotOptimize(qsim::apply(psi, gate, targets));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(psi.dimension()));
}

void BM_ApplyTwoQubitReference(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto psi = hadamard_state(n);
  const auto gate = qsim::kron(qsim::hadamard(), qsim::pauli_x());
  const std::array<std::size_t, 2> targets{0, n - 1};
  for (auto _ : st) benchmark::DoNotOptimize(qsim::reference::apply(psi, gate, targets));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(psi.dimension()));
}

void BM_ApplyAll(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto psi = qsim::zero_state(n);
  for (auto _ : st) benchmark::DoNotOptimize(qsim::apply_all(psi, qsim::hadamard()));
}

void BM_ApplyAllReference(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto psi = qsim::zero_state(n);
  for (auto _ : st) benchmark::DoNotOptimize(qsim::reference::apply_all(psi, qsim::hadamard()));
}

void BM_Probabilities(benchmark::State& st) {
  const auto psi = hadamard_state(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(qsim::probabilities(psi));
}

void BM_ProbabilitiesReference(benchmark::State& st) {
  const auto psi = hadamard_state(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(qsim::reference::probabilities(psi));
}

void BM_Marginal(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto psi = hadamard_state(n);
  std::vector<std::size_t> qubits(n - 1);
  for (std::size_t q = 0; q + 1 < n; ++q) qubits[q] = q;
  const std::vector<std::uint8_t> zeros(n - 1, 0);
  for (auto _ : st) benchmark::DoNotOptimize(qsim::marginal_probability(psi, qubits, zeros));
}

void BM_MarginalReference(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto psi = hadamard_state(n);
  std::vector<std::size_t> qubits(n - 1);
  for (std::size_t q = 0; q + 1 < n; ++q) qubits[q] = q;
  const std::vector<std::uint8_t> zeros(n - 1, 0);
  for (auto _ : st)
    benchmark::DoNotOptimize(qsim::reference::marginal_probability(psi, qubits, zeros));
}

void BM_ClassifyQuantum(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  std::vector<std::uint8_t> bits(std::size_t{1} << n, 0);
  for (std::size_t x = 0; x < bits.size(); x += 2) bits[x] = 1;
  const deutsch::FunctionTable f(n, bits);
  for (auto _ : st) benchmark::DoNotOptimize(deutsch::classify_quantum(f));
}

}  // namespace

BENCHMARK(BM_ApplyTwoQubit)->DenseRange(4, 20, 4);
BENCHMARK(BM_ApplyTwoQubitReference)->DenseRange(4, 12, 4);
BENCHMARK(BM_ApplyAll)->DenseRange(4, 20, 4);
BENCHMARK(BM_ApplyAllReference)->DenseRange(4, 10, 2);
BENCHMARK(BM_Probabilities)->DenseRange(4, 20, 4);
BENCHMARK(BM_ProbabilitiesReference)->DenseRange(4, 20, 4);
BENCHMARK(BM_Marginal)->DenseRange(4, 20, 4);
BENCHMARK(BM_MarginalReference)->DenseRange(4, 20, 4);
BENCHMARK(BM_ClassifyQuantum)->DenseRange(1, 9, 2);

BENCHMARK_MAIN();
