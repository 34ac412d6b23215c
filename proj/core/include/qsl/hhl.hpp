// Quantum linear-system solver: phase estimation over e^{iAt}, controlled
// eigenvalue inversion on an ancilla, uncompute, and analytic post-selection.
// A pivoted-elimination oracle and a configuration search live alongside the
// quantum path so every solve can be checked classically.

#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "qsl/state.hpp"

namespace qsl::hhl {

/// Hermitian system ready for the quantum solver. Non-Hermitian inputs are
/// dilated to [[0, A], [A^dagger, 0]] and every matrix is padded to a
/// power-of-two dimension (identity on the padded diagonal, zero rhs), so
/// `matrix` here may be larger than the caller's system. The block holding
/// the caller's solution is recorded in solution_offset / solution_dim.
struct HermitianSystem {
    Eigen::MatrixXcd matrix;
    Eigen::VectorXcd rhs;
    double condition_number = 0.0;  // max|lambda| / min|lambda|
    int sparsity = 0;               // max nonzeros per row
    bool dilated = false;
    int solution_offset = 0;
    int solution_dim = 0;
};

struct HHLConfig {
    int clock_qubits = 6;
    double evolution_time = 0.0;     // t in e^{iAt}
    double rotation_constant = 0.0;  // C in the arcsin(C / lambda) rotation
    double tolerance = 1e-3;
};

struct HHLSolution {
    QuantumState state;                  // post-selected system register, proportional to A^-1 b
    double success_probability = 0.0;    // ancilla mass rescaled to the optimal rotation constant
    double fidelity_vs_classical = 0.0;  // |<state | x_classical>|^2
    double ancilla_probability = 0.0;    // raw P(ancilla = 1) before rescaling
    double norm_estimate = 0.0;          // ||x|| reconstructed as ||b|| sqrt(P) / C
};

/// Wraps (A, b) into a solver-ready Hermitian system (dilating and padding as
/// needed). Throws singular_error when A is singular.
HermitianSystem make_hermitian(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& b);

/// Elimination oracle over the padded system; returns the full padded vector.
Eigen::VectorXcd classical_solve(const HermitianSystem& system);

/// Slices a padded/dilated solution vector back to the caller's coordinates.
Eigen::VectorXcd extract_block(const HermitianSystem& system, const Eigen::VectorXcd& full);

/// Picks an evolution time that keeps every scaled eigenvalue inside the
/// clock register (preferring times that put the whole spectrum exactly on
/// the clock grid) and a rotation constant of 0.99 * min|lambda|.
HHLConfig choose_config(const HermitianSystem& system, int clock_qubits);

/// Default clock width: 6, raised to ceil(log2(kappa / tolerance)) when the
/// conditioning demands it, capped at 10.
int default_clock_qubits(const HermitianSystem& system, double tolerance = 1e-3);

/// Runs the full circuit and post-selects the rotation ancilla analytically.
/// Negative eigenvalues are handled by a signed (wrap-around) clock decode.
HHLSolution hhl_solve(const HermitianSystem& system, const HHLConfig& config);

/// |<a | b/||b||>|^2.
double fidelity(const QuantumState& a, const Eigen::VectorXcd& b);

/// Reconstructs the classical solution vector (original coordinates) from a
/// solve: rescales the state by the norm estimate, strips the global phase,
/// and fixes the overall sign by residual comparison. Intended for systems
/// with real solutions.
Eigen::VectorXd recover_solution(const HermitianSystem& system, const HHLSolution& solution);

/// Random Hermitian system with planted spectrum uniform in [lo, hi] and a
/// random unit rhs; used by experiment drivers and the test suites.
HermitianSystem random_spectrum_system(int dim, double lo, double hi, std::uint64_t seed);

} // namespace qsl::hhl
