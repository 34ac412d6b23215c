// Dense statevector over n qubits. Qubit ordering is little-endian throughout
// the library: qubit 0 is the least significant bit of the amplitude index.
// States are immutable values; every operation returns a fresh state.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qsl {

using cd = std::complex<double>;

// Hard cap on register width; a dense vector of 2^20 amplitudes is the
// largest this toolkit is meant to touch.
inline constexpr int kMaxQubits = 20;

struct QuantumState {
    int n_qubits = 0;
    std::vector<cd> amplitudes;

    std::size_t dim() const { return amplitudes.size(); }
    double norm_sq() const;
};

/// Allocates a zeroed amplitude vector for n qubits (internal helper for
/// builders that fill amplitudes themselves).
QuantumState make_zero_state(int n_qubits);

/// Computational basis state |index> on n qubits.
QuantumState prepare_basis(int n_qubits, std::size_t index);

struct EncodedVector {
    QuantumState state;
    double norm = 0.0; // original Euclidean norm, kept for classical rescaling
};

/// Normalizes v into the amplitudes of a register and reports the discarded
/// norm. Length must be a power of two unless pad_to_power_of_two is set, in
/// which case the vector is zero-padded up to the next power.
EncodedVector amplitude_encode(const std::vector<cd>& v, bool pad_to_power_of_two = false);
EncodedVector amplitude_encode(const std::vector<double>& v, bool pad_to_power_of_two = false);

/// <a|b>; registers must match in width.
cd inner_product(const QuantumState& a, const QuantumState& b);

/// Kronecker combination with `low` occupying the lower qubit indices.
QuantumState tensor_product(const QuantumState& low, const QuantumState& high);

/// Renormalizes in place; degenerate (near-zero) vectors are rejected.
void normalize(QuantumState& state);

bool approx_equal(const QuantumState& a, const QuantumState& b, double tol = 1e-10);

} // namespace qsl
