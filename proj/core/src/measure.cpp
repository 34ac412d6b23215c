#include "qsl/measure.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "qsl/errors.hpp"
#include "qsl/gates.hpp"
#include "qsl/linalg.hpp"

namespace qsl {

Observable Observable::pauli_z(int qubit) {
    Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(2, 2);
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;
    return {z, {qubit}};
}

double expectation(const QuantumState& state, const Observable& obs) {
    if (!is_hermitian(obs.matrix)) {
        throw std::invalid_argument("observable matrix is not Hermitian");
    }
    const std::size_t d = std::size_t{1} << obs.qubits.size();
    if (obs.matrix.rows() != static_cast<Eigen::Index>(d)) {
        throw std::invalid_argument("observable dimension does not match its qubit list");
    }
    QuantumState applied = apply_matrix(state, obs.matrix, obs.qubits);
    return inner_product(state, applied).real();
}

std::vector<double> measure_probabilities(const QuantumState& state,
                                          const std::vector<int>& qubits) {
    if (qubits.empty()) throw std::domain_error("marginal over an empty qubit list");
    for (int q : qubits) {
        if (q < 0 || q >= state.n_qubits) {
            throw std::out_of_range("qubit index " + std::to_string(q) + " out of range");
        }
    }
    const std::size_t outcomes = std::size_t{1} << qubits.size();
    std::vector<double> probs(outcomes, 0.0);
    for (std::size_t i = 0; i < state.dim(); ++i) {
        std::size_t key = 0;
        for (std::size_t j = 0; j < qubits.size(); ++j) {
            if (i & (std::size_t{1} << qubits[j])) key |= std::size_t{1} << j;
        }
        probs[key] += std::norm(state.amplitudes[i]);
    }
    return probs;
}

std::vector<std::uint64_t> sample_counts(const QuantumState& state,
                                         const std::vector<int>& qubits,
                                         std::uint64_t shots, std::uint64_t seed) {
    std::vector<double> probs = measure_probabilities(state, qubits);
    std::mt19937_64 rng(seed);
    std::discrete_distribution<std::size_t> dist(probs.begin(), probs.end());
    std::vector<std::uint64_t> counts(probs.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) counts[dist(rng)]++;
    return counts;
}

PostSelection post_select(const QuantumState& state, int qubit, int outcome,
                          double min_probability) {
    if (qubit < 0 || qubit >= state.n_qubits) {
        throw std::out_of_range("post-selection qubit out of range");
    }
    if (outcome != 0 && outcome != 1) {
        throw std::domain_error("post-selection outcome must be 0 or 1");
    }
    const std::size_t bit = std::size_t{1} << qubit;
    double mass = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        const bool hit = ((i & bit) != 0) == (outcome == 1);
        if (hit) mass += std::norm(state.amplitudes[i]);
    }
    if (mass < min_probability) {
        throw post_selection_error("post-selection branch carries probability " +
                                   std::to_string(mass));
    }
    PostSelection out;
    out.probability = mass;
    out.state = state;
    const double scale = 1.0 / std::sqrt(mass);
    for (std::size_t i = 0; i < state.dim(); ++i) {
        const bool hit = ((i & bit) != 0) == (outcome == 1);
        out.state.amplitudes[i] = hit ? state.amplitudes[i] * scale : cd{0.0, 0.0};
    }
    return out;
}

namespace {

// Composite register for the swap test: a on [0,n), b on [n,2n), ancilla at 2n.
QuantumState swap_test_state(const QuantumState& a, const QuantumState& b) {
    if (a.n_qubits != b.n_qubits) {
        throw std::invalid_argument("swap test requires equal register widths");
    }
    QuantumState comp = tensor_product(tensor_product(a, b), prepare_basis(1, 0));
    const int n = a.n_qubits;
    const int anc = 2 * n;

    Eigen::MatrixXcd swap = Eigen::MatrixXcd::Zero(4, 4);
    swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;

    comp = apply_gate(comp, GateOp::h(anc));
    for (int q = 0; q < n; ++q) {
        comp = apply_gate(comp, GateOp::controlled_unitary(swap, {q, n + q}, {anc}));
    }
    comp = apply_gate(comp, GateOp::h(anc));
    return comp;
}

} // namespace

double swap_test(const QuantumState& a, const QuantumState& b) {
    QuantumState comp = swap_test_state(a, b);
    return measure_probabilities(comp, {2 * a.n_qubits})[0];
}

double swap_test_sampled(const QuantumState& a, const QuantumState& b,
                         std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) throw std::domain_error("swap test sampling needs at least one shot");
    QuantumState comp = swap_test_state(a, b);
    auto counts = sample_counts(comp, {2 * a.n_qubits}, shots, seed);
    return double(counts[0]) / double(shots);
}

} // namespace qsl
