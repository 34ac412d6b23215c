// Gate layer: named single/two-qubit gates, arbitrary controlled unitaries,
// and the QFT circuit. Gates are values; apply_gate never mutates its input.

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qsl/state.hpp"

namespace qsl {

enum class GateKind {
    H,
    X,
    RY,
    RZ,
    CNOT,
    CPhase,
    ControlledUnitary, // arbitrary unitary on `targets`, conditioned on `controls`
};

struct GateOp {
    GateKind kind = GateKind::H;
    std::vector<int> targets;
    std::vector<int> controls;
    double angle = 0.0;        // RY / RZ / CPhase
    Eigen::MatrixXcd matrix;   // ControlledUnitary only

    static GateOp h(int target);
    static GateOp x(int target);
    static GateOp ry(double angle, int target);
    static GateOp rz(double angle, int target);
    static GateOp cnot(int control, int target);
    static GateOp cphase(double angle, int control, int target);
    static GateOp controlled_unitary(Eigen::MatrixXcd unitary,
                                     std::vector<int> targets,
                                     std::vector<int> controls = {});
};

/// The 2^k x 2^k matrix realized on the target qubits (controls excluded).
Eigen::MatrixXcd gate_matrix(const GateOp& gate);

/// Inverse gate (adjoint unitary, same targets/controls).
GateOp adjoint(const GateOp& gate);

/// Applies the gate and returns the new state. Validates index ranges,
/// target/control disjointness and (for embedded matrices) unitarity.
QuantumState apply_gate(const QuantumState& state, const GateOp& gate);

/// Applies a raw matrix on the listed target qubits subject to controls.
/// Bit j of the matrix row index corresponds to targets[j]. No unitarity
/// check; this is the shared kernel behind apply_gate and expectation.
QuantumState apply_matrix(const QuantumState& state, const Eigen::MatrixXcd& m,
                          const std::vector<int>& targets,
                          const std::vector<int>& controls = {});

/// Quantum Fourier transform circuit on the listed qubits (qubits[0] is the
/// least significant bit of the transformed index). `inverse` runs the
/// adjoint circuit.
QuantumState apply_qft(const QuantumState& state, const std::vector<int>& qubits,
                       bool inverse = false);

} // namespace qsl
