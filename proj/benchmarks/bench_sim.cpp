#include <benchmark/benchmark.h>

#include <random>

#include "qsl/gates.hpp"
#include "qsl/measure.hpp"
#include "qsl/state.hpp"

namespace {

qsl::QuantumState random_state(int n_qubits, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<qsl::cd> amps(std::size_t{1} << n_qubits);
    for (auto& a : amps) a = qsl::cd{gauss(rng), gauss(rng)};
    return qsl::amplitude_encode(amps).state;
}

void BM_SingleQubitGate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    qsl::QuantumState psi = random_state(n, 1);
    const qsl::GateOp gate = qsl::GateOp::ry(0.3, n / 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsl::apply_gate(psi, gate));
    }
    state.SetComplexityN(std::int64_t{1} << n);
}
BENCHMARK(BM_SingleQubitGate)->DenseRange(4, 16, 4)->Complexity();

void BM_CnotRingLayer(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    qsl::QuantumState psi = random_state(n, 2);
    for (auto _ : state) {
        qsl::QuantumState out = psi;
        for (int q = 0; q < n; ++q) {
            out = qsl::apply_gate(out, qsl::GateOp::cnot(q, (q + 1) % n));
        }
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_CnotRingLayer)->DenseRange(4, 12, 4);

void BM_SwapTest(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    qsl::QuantumState a = random_state(n, 3);
    qsl::QuantumState b = random_state(n, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsl::swap_test(a, b));
    }
}
BENCHMARK(BM_SwapTest)->DenseRange(1, 7, 2);

void BM_Qft(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    qsl::QuantumState psi = random_state(n, 5);
    std::vector<int> qubits(n);
    for (int q = 0; q < n; ++q) qubits[q] = q;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsl::apply_qft(psi, qubits));
    }
}
BENCHMARK(BM_Qft)->DenseRange(4, 12, 4);

} // namespace

BENCHMARK_MAIN();
