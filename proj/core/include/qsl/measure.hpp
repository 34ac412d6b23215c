// Readout layer: expectation values, marginal probability tables, analytic
// post-selection, the swap test, and opt-in shot sampling. Probabilities are
// read analytically from the amplitudes by default; sampling is only used
// when a shot count is requested explicitly.

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "qsl/state.hpp"

namespace qsl {

struct Observable {
    Eigen::MatrixXcd matrix;  // Hermitian, dimension 2^k
    std::vector<int> qubits;  // the k measured qubits; qubits[0] = LSB of the matrix index

    static Observable pauli_z(int qubit);
};

/// <state|O|state>, real by Hermiticity (validated within 1e-9).
double expectation(const QuantumState& state, const Observable& obs);

/// Marginal distribution over the listed qubits; entry i is the probability
/// of the outcome whose bit j equals the measured value of qubits[j].
std::vector<double> measure_probabilities(const QuantumState& state,
                                          const std::vector<int>& qubits);

/// Multinomial shot sampling of the same marginal with a seeded generator.
/// Returns counts summing to `shots`.
std::vector<std::uint64_t> sample_counts(const QuantumState& state,
                                         const std::vector<int>& qubits,
                                         std::uint64_t shots, std::uint64_t seed);

struct PostSelection {
    QuantumState state;   // renormalized conditional state
    double probability;   // mass of the selected branch
};

/// Projects `qubit` onto `outcome` and renormalizes. Throws
/// post_selection_error when the branch mass is below `min_probability`.
PostSelection post_select(const QuantumState& state, int qubit, int outcome,
                          double min_probability = 1e-12);

/// Swap-test circuit between two equal-width registers: ancilla H, a
/// controlled swap per qubit pair, H again, then the analytic ancilla
/// marginal. Returns p0 = 1/2 + |<a|b>|^2 / 2.
double swap_test(const QuantumState& a, const QuantumState& b);

/// Shot-sampled variant; returns the observed ancilla-0 frequency.
double swap_test_sampled(const QuantumState& a, const QuantumState& b,
                         std::uint64_t shots, std::uint64_t seed);

} // namespace qsl
