#include "qsl/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qsl {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

int log2_exact(std::size_t n) {
    int k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    return k;
}

void check_width(int n_qubits) {
    if (n_qubits < 1) {
        throw std::invalid_argument("state needs at least one qubit");
    }
    if (n_qubits > kMaxQubits) {
        throw std::length_error("register of " + std::to_string(n_qubits) +
                                " qubits exceeds the dense-statevector cap of " +
                                std::to_string(kMaxQubits));
    }
}

} // namespace

double QuantumState::norm_sq() const {
    double s = 0.0;
    for (const cd& a : amplitudes) s += std::norm(a);
    return s;
}

QuantumState make_zero_state(int n_qubits) {
    check_width(n_qubits);
    QuantumState st;
    st.n_qubits = n_qubits;
    st.amplitudes.assign(std::size_t{1} << n_qubits, cd{0.0, 0.0});
    return st;
}

QuantumState prepare_basis(int n_qubits, std::size_t index) {
    QuantumState st = make_zero_state(n_qubits);
    if (index >= st.dim()) {
        throw std::domain_error("basis index " + std::to_string(index) +
                                " out of range for " + std::to_string(n_qubits) + " qubits");
    }
    st.amplitudes[index] = cd{1.0, 0.0};
    return st;
}

EncodedVector amplitude_encode(const std::vector<cd>& v, bool pad_to_power_of_two) {
    if (v.empty()) throw std::invalid_argument("cannot encode an empty vector");

    std::vector<cd> data = v;
    if (!is_power_of_two(data.size())) {
        if (!pad_to_power_of_two) {
            throw std::invalid_argument("vector length " + std::to_string(v.size()) +
                                        " is not a power of two (pass pad_to_power_of_two)");
        }
        std::size_t padded = 1;
        while (padded < data.size()) padded <<= 1;
        data.resize(padded, cd{0.0, 0.0});
    }
    if (data.size() == 1) data.resize(2, cd{0.0, 0.0}); // one amplitude is a 1-qubit |0>-ish encode

    double nrm_sq = 0.0;
    for (const cd& a : data) nrm_sq += std::norm(a);
    double nrm = std::sqrt(nrm_sq);
    if (nrm < 1e-300) throw std::invalid_argument("cannot amplitude-encode the zero vector");

    EncodedVector out;
    out.norm = nrm;
    out.state.n_qubits = log2_exact(data.size());
    check_width(out.state.n_qubits);
    out.state.amplitudes = std::move(data);
    for (cd& a : out.state.amplitudes) a /= nrm;
    return out;
}

EncodedVector amplitude_encode(const std::vector<double>& v, bool pad_to_power_of_two) {
    std::vector<cd> cv(v.begin(), v.end());
    return amplitude_encode(cv, pad_to_power_of_two);
}

cd inner_product(const QuantumState& a, const QuantumState& b) {
    if (a.n_qubits != b.n_qubits) {
        throw std::invalid_argument("inner product of mismatched registers");
    }
    cd acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        acc += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    }
    return acc;
}

QuantumState tensor_product(const QuantumState& low, const QuantumState& high) {
    QuantumState out = make_zero_state(low.n_qubits + high.n_qubits);
    const std::size_t low_dim = low.dim();
    for (std::size_t j = 0; j < high.dim(); ++j) {
        for (std::size_t i = 0; i < low_dim; ++i) {
            out.amplitudes[i + low_dim * j] = low.amplitudes[i] * high.amplitudes[j];
        }
    }
    return out;
}

void normalize(QuantumState& state) {
    double nrm = std::sqrt(state.norm_sq());
    if (nrm < 1e-300) throw std::invalid_argument("cannot normalize a zero state");
    for (cd& a : state.amplitudes) a /= nrm;
}

bool approx_equal(const QuantumState& a, const QuantumState& b, double tol) {
    if (a.n_qubits != b.n_qubits) return false;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (std::abs(a.amplitudes[i] - b.amplitudes[i]) > tol) return false;
    }
    return true;
}

} // namespace qsl
