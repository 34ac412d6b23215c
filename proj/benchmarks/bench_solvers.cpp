#include <benchmark/benchmark.h>

#include "qsl/hhl.hpp"
#include "qsl/qsplines.hpp"
#include "qsl/vqc.hpp"

namespace {

void BM_HhlSolve(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const int clock = static_cast<int>(state.range(1));
    auto sys = qsl::hhl::random_spectrum_system(dim, 1.0, 2.0, 99);
    auto cfg = qsl::hhl::choose_config(sys, clock);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsl::hhl::hhl_solve(sys, cfg));
    }
}
BENCHMARK(BM_HhlSolve)
    ->Args({2, 5})
    ->Args({2, 8})
    ->Args({4, 5})
    ->Args({4, 8})
    ->Args({8, 8})
    ->Args({16, 8});

void BM_ClassicalSolve(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    auto sys = qsl::hhl::random_spectrum_system(dim, 1.0, 2.0, 99);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsl::hhl::classical_solve(sys));
    }
}
BENCHMARK(BM_ClassicalSolve)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_QSplineFit(benchmark::State& state) {
    const int intervals = static_cast<int>(state.range(0));
    auto target = qsl::qspline::target_by_name("sigmoid", -10.0, 10.0);
    auto grid = qsl::qspline::build_grid(-10.0, 10.0, intervals);
    qsl::hhl::HHLConfig cfg;
    cfg.clock_qubits = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsl::qspline::fit(target, grid, cfg));
    }
}
BENCHMARK(BM_QSplineFit)->Args({5, 8})->Args({20, 8})->Args({20, 12});

void BM_ParameterShiftGradient(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int layers = static_cast<int>(state.range(1));
    qsl::vqc::Ansatz ansatz{n, layers};
    auto map = qsl::vqc::FeatureMap::angle_range(n, 0.0, 1.0);
    Eigen::VectorXd theta = Eigen::VectorXd::LinSpaced(ansatz.parameter_count(), 0.1, 2.9);
    Eigen::VectorXd x = Eigen::VectorXd::Constant(n, 0.5);

    qsl::TrainingSet batch;
    batch.features = x.transpose();
    batch.features.conservativeResize(1, n);
    batch.labels = Eigen::VectorXi::Ones(1);

    for (auto _ : state) {
        benchmark::DoNotOptimize(qsl::vqc::full_gradient(map, ansatz, theta, batch));
    }
    state.counters["shift_evals"] = 2.0 * ansatz.parameter_count();
}
BENCHMARK(BM_ParameterShiftGradient)->Args({2, 2})->Args({4, 3})->Args({6, 4});

} // namespace
