#include "qsl/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qsl/linalg.hpp"

namespace qsl {

namespace {

constexpr double kPi = std::numbers::pi;

void check_indices(const QuantumState& state, const std::vector<int>& targets,
                   const std::vector<int>& controls) {
    if (targets.empty()) throw std::invalid_argument("gate needs at least one target");
    auto check = [&](int q) {
        if (q < 0 || q >= state.n_qubits) {
            throw std::out_of_range("qubit index " + std::to_string(q) +
                                    " out of range for " + std::to_string(state.n_qubits) +
                                    "-qubit state");
        }
    };
    for (int t : targets) check(t);
    for (int c : controls) check(c);
    for (std::size_t i = 0; i < targets.size(); ++i) {
        for (std::size_t j = i + 1; j < targets.size(); ++j) {
            if (targets[i] == targets[j]) throw std::invalid_argument("duplicate target qubit");
        }
        for (int c : controls) {
            if (targets[i] == c) {
                throw std::invalid_argument("target and control sets must be disjoint");
            }
        }
    }
}

Eigen::MatrixXcd h_matrix() {
    Eigen::MatrixXcd m(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    m << s, s, s, -s;
    return m;
}

Eigen::MatrixXcd x_matrix() {
    Eigen::MatrixXcd m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Eigen::MatrixXcd ry_matrix(double angle) {
    Eigen::MatrixXcd m(2, 2);
    const double c = std::cos(angle / 2.0), s = std::sin(angle / 2.0);
    m << c, -s, s, c;
    return m;
}

Eigen::MatrixXcd rz_matrix(double angle) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(0, 0) = std::exp(cd{0.0, -angle / 2.0});
    m(1, 1) = std::exp(cd{0.0, angle / 2.0});
    return m;
}

Eigen::MatrixXcd phase_matrix(double angle) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
    m(1, 1) = std::exp(cd{0.0, angle});
    return m;
}

} // namespace

GateOp GateOp::h(int target) { return {GateKind::H, {target}, {}, 0.0, {}}; }
GateOp GateOp::x(int target) { return {GateKind::X, {target}, {}, 0.0, {}}; }
GateOp GateOp::ry(double angle, int target) { return {GateKind::RY, {target}, {}, angle, {}}; }
GateOp GateOp::rz(double angle, int target) { return {GateKind::RZ, {target}, {}, angle, {}}; }
GateOp GateOp::cnot(int control, int target) {
    return {GateKind::CNOT, {target}, {control}, 0.0, {}};
}
GateOp GateOp::cphase(double angle, int control, int target) {
    return {GateKind::CPhase, {target}, {control}, angle, {}};
}
GateOp GateOp::controlled_unitary(Eigen::MatrixXcd unitary, std::vector<int> targets,
                                  std::vector<int> controls) {
    return {GateKind::ControlledUnitary, std::move(targets), std::move(controls), 0.0,
            std::move(unitary)};
}

Eigen::MatrixXcd gate_matrix(const GateOp& gate) {
    switch (gate.kind) {
        case GateKind::H: return h_matrix();
        case GateKind::X: return x_matrix();
        case GateKind::RY: return ry_matrix(gate.angle);
        case GateKind::RZ: return rz_matrix(gate.angle);
        case GateKind::CNOT: return x_matrix();
        case GateKind::CPhase: return phase_matrix(gate.angle);
        case GateKind::ControlledUnitary: return gate.matrix;
    }
    throw std::logic_error("unknown gate kind");
}

GateOp adjoint(const GateOp& gate) {
    GateOp inv = gate;
    switch (gate.kind) {
        case GateKind::H:
        case GateKind::X:
        case GateKind::CNOT:
            break; // self-inverse
        case GateKind::RY:
        case GateKind::RZ:
        case GateKind::CPhase:
            inv.angle = -gate.angle;
            break;
        case GateKind::ControlledUnitary:
            inv.matrix = gate.matrix.adjoint();
            break;
    }
    return inv;
}

QuantumState apply_matrix(const QuantumState& state, const Eigen::MatrixXcd& m,
                          const std::vector<int>& targets,
                          const std::vector<int>& controls) {
    check_indices(state, targets, controls);
    const int k = static_cast<int>(targets.size());
    const std::size_t d = std::size_t{1} << k;
    if (m.rows() != static_cast<Eigen::Index>(d) || m.cols() != static_cast<Eigen::Index>(d)) {
        throw std::invalid_argument("matrix dimension does not match target count");
    }

    std::size_t target_mask = 0, control_mask = 0;
    for (int t : targets) target_mask |= std::size_t{1} << t;
    for (int c : controls) control_mask |= std::size_t{1} << c;

    // Index of the full register for sub-row s relative to a base index.
    std::vector<std::size_t> offsets(d, 0);
    for (std::size_t s = 0; s < d; ++s) {
        std::size_t off = 0;
        for (int j = 0; j < k; ++j) {
            if (s & (std::size_t{1} << j)) off |= std::size_t{1} << targets[j];
        }
        offsets[s] = off;
    }

    QuantumState out = state;
    std::vector<cd> gathered(d);
    for (std::size_t base = 0; base < state.dim(); ++base) {
        if (base & target_mask) continue;                        // enumerate each block once
        if ((base & control_mask) != control_mask) continue;     // all controls must be 1
        for (std::size_t s = 0; s < d; ++s) gathered[s] = state.amplitudes[base | offsets[s]];
        for (std::size_t r = 0; r < d; ++r) {
            cd acc{0.0, 0.0};
            for (std::size_t s = 0; s < d; ++s) acc += m(r, s) * gathered[s];
            out.amplitudes[base | offsets[r]] = acc;
        }
    }
    return out;
}

QuantumState apply_gate(const QuantumState& state, const GateOp& gate) {
    if (gate.kind == GateKind::ControlledUnitary && !is_unitary(gate.matrix)) {
        throw std::invalid_argument("embedded gate matrix is not unitary");
    }
    return apply_matrix(state, gate_matrix(gate), gate.targets, gate.controls);
}

QuantumState apply_qft(const QuantumState& state, const std::vector<int>& qubits,
                       bool inverse) {
    const int m = static_cast<int>(qubits.size());
    if (m == 0) throw std::invalid_argument("QFT needs at least one qubit");

    QuantumState st = state;
    if (!inverse) {
        for (int j = m - 1; j >= 0; --j) {
            st = apply_gate(st, GateOp::h(qubits[j]));
            for (int k = j - 1; k >= 0; --k) {
                st = apply_gate(st, GateOp::cphase(kPi / double(1 << (j - k)), qubits[k], qubits[j]));
            }
        }
        for (int i = 0; i < m / 2; ++i) {
            // swap qubits[i] <-> qubits[m-1-i] via three CNOTs
            st = apply_gate(st, GateOp::cnot(qubits[i], qubits[m - 1 - i]));
            st = apply_gate(st, GateOp::cnot(qubits[m - 1 - i], qubits[i]));
            st = apply_gate(st, GateOp::cnot(qubits[i], qubits[m - 1 - i]));
        }
    } else {
        for (int i = 0; i < m / 2; ++i) {
            st = apply_gate(st, GateOp::cnot(qubits[i], qubits[m - 1 - i]));
            st = apply_gate(st, GateOp::cnot(qubits[m - 1 - i], qubits[i]));
            st = apply_gate(st, GateOp::cnot(qubits[i], qubits[m - 1 - i]));
        }
        for (int j = 0; j < m; ++j) {
            for (int k = 0; k < j; ++k) {
                st = apply_gate(st, GateOp::cphase(-kPi / double(1 << (j - k)), qubits[k], qubits[j]));
            }
            st = apply_gate(st, GateOp::h(qubits[j]));
        }
    }
    return st;
}

} // namespace qsl
