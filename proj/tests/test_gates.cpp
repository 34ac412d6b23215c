#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "qsl/gates.hpp"
#include "qsl/state.hpp"

using namespace qsl;

namespace {

constexpr double kPi = std::numbers::pi;

// Seeded random circuit over every gate kind, used by the property checks.
std::vector<GateOp> random_circuit(int n_qubits, int length, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_kind(0, 5);
    std::uniform_int_distribution<int> pick_qubit(0, n_qubits - 1);
    std::uniform_real_distribution<double> pick_angle(0.0, 2.0 * kPi);

    std::vector<GateOp> circuit;
    for (int i = 0; i < length; ++i) {
        int q = pick_qubit(rng);
        int q2 = pick_qubit(rng);
        while (q2 == q) q2 = pick_qubit(rng);
        switch (pick_kind(rng)) {
            case 0: circuit.push_back(GateOp::h(q)); break;
            case 1: circuit.push_back(GateOp::x(q)); break;
            case 2: circuit.push_back(GateOp::ry(pick_angle(rng), q)); break;
            case 3: circuit.push_back(GateOp::rz(pick_angle(rng), q)); break;
            case 4: circuit.push_back(GateOp::cnot(q, q2)); break;
            default: circuit.push_back(GateOp::cphase(pick_angle(rng), q, q2)); break;
        }
    }
    return circuit;
}

QuantumState random_state(int n_qubits, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<cd> amps(std::size_t{1} << n_qubits);
    for (cd& a : amps) a = cd{gauss(rng), gauss(rng)};
    return amplitude_encode(amps).state;
}

} // namespace

TEST_CASE("Hadamard on |0> gives the uniform superposition") {
    QuantumState s = apply_gate(prepare_basis(1, 0), GateOp::h(0));
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(s.amplitudes[0].real() == doctest::Approx(r));
    CHECK(s.amplitudes[1].real() == doctest::Approx(r));
}

TEST_CASE("X flips a basis state") {
    QuantumState s = apply_gate(prepare_basis(1, 0), GateOp::x(0));
    CHECK(std::abs(s.amplitudes[1] - cd{1.0, 0.0}) < 1e-12);
}

TEST_CASE("CNOT truth table") {
    // control qubit 0 set -> target qubit 1 flips: index 1 -> index 3
    QuantumState s = apply_gate(prepare_basis(2, 1), GateOp::cnot(0, 1));
    CHECK(std::abs(s.amplitudes[3] - cd{1.0, 0.0}) < 1e-12);

    // control clear -> no flip
    QuantumState t = apply_gate(prepare_basis(2, 2), GateOp::cnot(0, 1));
    CHECK(std::abs(t.amplitudes[2] - cd{1.0, 0.0}) < 1e-12);
}

TEST_CASE("RY rotates |0> by the expected angle") {
    QuantumState s = apply_gate(prepare_basis(1, 0), GateOp::ry(kPi / 2.0, 0));
    CHECK(s.amplitudes[0].real() == doctest::Approx(std::cos(kPi / 4.0)));
    CHECK(s.amplitudes[1].real() == doctest::Approx(std::sin(kPi / 4.0)));
}

TEST_CASE("gate validation") {
    QuantumState s = prepare_basis(2, 0);
    CHECK_THROWS_AS(apply_gate(s, GateOp::h(5)), std::out_of_range);
    CHECK_THROWS_AS(apply_gate(s, GateOp::cnot(1, 1)), std::invalid_argument);

    Eigen::MatrixXcd not_unitary = Eigen::MatrixXcd::Ones(2, 2);
    CHECK_THROWS_AS(apply_gate(s, GateOp::controlled_unitary(not_unitary, {0})),
                    std::invalid_argument);
}

TEST_CASE("norm is preserved across random circuits") {
    for (std::uint64_t seed : {11u, 12u, 13u}) {
        QuantumState s = prepare_basis(4, 0);
        for (const GateOp& g : random_circuit(4, 60, seed)) s = apply_gate(s, g);
        CHECK(std::abs(s.norm_sq() - 1.0) < 1e-9);
    }
}

TEST_CASE("gate followed by its adjoint restores the state") {
    QuantumState s = random_state(3, 99);
    for (const GateOp& g : random_circuit(3, 40, 7)) {
        QuantumState roundtrip = apply_gate(apply_gate(s, g), adjoint(g));
        CHECK(approx_equal(roundtrip, s, 1e-10));
    }
}

TEST_CASE("QFT matches the DFT matrix") {
    const int m = 3;
    const std::size_t dim = 8;
    QuantumState s = random_state(m, 5);

    QuantumState got = apply_qft(s, {0, 1, 2});
    for (std::size_t y = 0; y < dim; ++y) {
        cd expected{0.0, 0.0};
        for (std::size_t x = 0; x < dim; ++x) {
            double phase = 2.0 * kPi * double(x * y) / double(dim);
            expected += std::exp(cd{0.0, phase}) * s.amplitudes[x] / std::sqrt(double(dim));
        }
        CHECK(std::abs(got.amplitudes[y] - expected) < 1e-10);
    }

    QuantumState back = apply_qft(got, {0, 1, 2}, true);
    CHECK(approx_equal(back, s, 1e-10));
}
