#include "qsl/hhl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qsl/errors.hpp"
#include "qsl/gates.hpp"
#include "qsl/linalg.hpp"
#include "qsl/measure.hpp"

namespace qsl::hhl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

int log2_ceil(Eigen::Index n) {
    int k = 0;
    while ((Eigen::Index{1} << k) < n) ++k;
    return k;
}

struct Spectrum {
    Eigen::VectorXd eigenvalues;   // ascending
    Eigen::MatrixXcd eigenvectors; // columns
    double abs_min = 0.0;
    double abs_max = 0.0;
    bool indefinite = false;
};

Spectrum analyze(const Eigen::MatrixXcd& a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(a);
    if (eig.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition failed");
    }
    Spectrum s;
    s.eigenvalues = eig.eigenvalues();
    s.eigenvectors = eig.eigenvectors();
    s.abs_min = s.eigenvalues.cwiseAbs().minCoeff();
    s.abs_max = s.eigenvalues.cwiseAbs().maxCoeff();
    s.indefinite = s.eigenvalues.minCoeff() < -1e-12 * std::max(s.abs_max, 1.0);
    return s;
}

// e^{i A t} through the precomputed eigenbasis; exact for these matrix sizes.
Eigen::MatrixXcd evolution_unitary(const Spectrum& spec, double t) {
    const Eigen::Index n = spec.eigenvalues.size();
    Eigen::VectorXcd phases(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        phases(j) = std::exp(cd{0.0, spec.eigenvalues(j) * t});
    }
    return spec.eigenvectors * phases.asDiagonal() * spec.eigenvectors.adjoint();
}

int count_sparsity(const Eigen::MatrixXcd& m) {
    int worst = 0;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        int nz = 0;
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (std::abs(m(r, c)) > 1e-12) ++nz;
        }
        worst = std::max(worst, nz);
    }
    return worst;
}

} // namespace

HermitianSystem make_hermitian(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& b) {
    if (a.rows() != a.cols()) throw std::invalid_argument("matrix must be square");
    if (a.rows() != b.size()) throw std::invalid_argument("rhs length must match the matrix");
    if (b.norm() < 1e-300) throw std::invalid_argument("rhs must be nonzero");

    // Nonsingularity check via the same eliminator that backs classical_solve.
    solve_gaussian(a, b);

    const Eigen::Index n = a.rows();
    HermitianSystem sys;
    if (is_hermitian(a)) {
        sys.matrix = a;
        sys.rhs = b;
        sys.solution_offset = 0;
        sys.solution_dim = static_cast<int>(n);
    } else {
        // Hermitian dilation: solve [[0, A], [A^dagger, 0]] [0, y] = [b, 0];
        // the caller's y sits in the lower block.
        sys.dilated = true;
        sys.matrix = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
        sys.matrix.block(0, n, n, n) = a;
        sys.matrix.block(n, 0, n, n) = a.adjoint();
        sys.rhs = Eigen::VectorXcd::Zero(2 * n);
        sys.rhs.head(n) = b;
        sys.solution_offset = static_cast<int>(n);
        sys.solution_dim = static_cast<int>(n);
    }

    const Eigen::Index dim = sys.matrix.rows();
    Eigen::Index padded = Eigen::Index{1} << std::max(1, log2_ceil(dim));
    if (padded != dim) {
        Eigen::MatrixXcd grown = Eigen::MatrixXcd::Identity(padded, padded);
        grown.topLeftCorner(dim, dim) = sys.matrix;
        sys.matrix = std::move(grown);
        Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(padded);
        rhs.head(dim) = sys.rhs;
        sys.rhs = std::move(rhs);
    }

    Spectrum spec = analyze(sys.matrix);
    sys.condition_number = spec.abs_max / spec.abs_min;
    sys.sparsity = count_sparsity(sys.matrix);
    return sys;
}

Eigen::VectorXcd classical_solve(const HermitianSystem& system) {
    return solve_gaussian(system.matrix, system.rhs);
}

Eigen::VectorXcd extract_block(const HermitianSystem& system, const Eigen::VectorXcd& full) {
    if (full.size() != system.matrix.rows()) {
        throw std::invalid_argument("vector does not match the padded system dimension");
    }
    return full.segment(system.solution_offset, system.solution_dim);
}

HHLConfig choose_config(const HermitianSystem& system, int clock_qubits) {
    if (clock_qubits < 1) throw std::domain_error("clock register needs at least one qubit");

    Spectrum spec = analyze(system.matrix);
    const std::int64_t grid = std::int64_t{1} << clock_qubits;
    std::int64_t k_max = spec.indefinite ? (grid / 2 - 1) : (grid - 1);

    HHLConfig cfg;
    cfg.clock_qubits = clock_qubits;
    cfg.rotation_constant = 0.99 * spec.abs_min;

    if (k_max < 1) {
        // One clock qubit over an indefinite spectrum cannot separate signs;
        // still produce a valid (if useless) evolution time.
        cfg.evolution_time = kTwoPi * 0.25 / spec.abs_max;
        return cfg;
    }

    // Prefer an evolution time that places every |eigenvalue| exactly on the
    // clock grid; fall back to the largest representable scaling.
    std::int64_t chosen = k_max;
    for (std::int64_t k = k_max; k >= 1; --k) {
        const double scale = double(k) / (double(grid) * spec.abs_max);
        bool exact = true;
        for (Eigen::Index j = 0; j < spec.eigenvalues.size(); ++j) {
            const double cell = std::abs(spec.eigenvalues(j)) * scale * double(grid);
            if (std::abs(cell - std::round(cell)) > 1e-9) {
                exact = false;
                break;
            }
        }
        if (exact) {
            chosen = k;
            break;
        }
    }
    cfg.evolution_time = kTwoPi * double(chosen) / (double(grid) * spec.abs_max);
    return cfg;
}

int default_clock_qubits(const HermitianSystem& system, double tolerance) {
    const double need = std::log2(system.condition_number / tolerance);
    const int m_min = std::min(10, std::max(1, static_cast<int>(std::ceil(need))));
    return std::max(6, m_min);
}

HHLSolution hhl_solve(const HermitianSystem& system, const HHLConfig& config) {
    const Eigen::Index dim = system.matrix.rows();
    const int n_sys = log2_ceil(dim);
    const int m = config.clock_qubits;
    if (m < 1) throw std::domain_error("clock register needs at least one qubit");
    const double t = config.evolution_time;
    const double c_rot = config.rotation_constant;
    if (t <= 0.0) throw std::invalid_argument("evolution time must be positive");
    if (c_rot <= 0.0) throw std::invalid_argument("rotation constant must be positive");

    Spectrum spec = analyze(system.matrix);
    const double top_phase = spec.abs_max * t / kTwoPi;
    const double wrap_limit = spec.indefinite ? 0.5 : 1.0;
    if (top_phase >= wrap_limit - 1e-12) {
        throw std::invalid_argument("scaled spectrum wraps around the clock register");
    }
    if (c_rot > spec.abs_min * (1.0 + 1e-9)) {
        throw std::invalid_argument("rotation constant exceeds the smallest |eigenvalue|");
    }

    // Register layout: system [0, n_sys), clock [n_sys, n_sys + m), ancilla last.
    const int anc = n_sys + m;
    std::vector<int> sys_qubits(n_sys), clock_qubits(m);
    for (int i = 0; i < n_sys; ++i) sys_qubits[i] = i;
    for (int i = 0; i < m; ++i) clock_qubits[i] = n_sys + i;

    std::vector<cd> b_vec(system.rhs.data(), system.rhs.data() + dim);
    EncodedVector encoded = amplitude_encode(b_vec);
    QuantumState psi = tensor_product(encoded.state, prepare_basis(m + 1, 0));

    for (int q : clock_qubits) psi = apply_gate(psi, GateOp::h(q));

    // Phase estimation: clock qubit j controls e^{iAt 2^j}.
    for (int j = 0; j < m; ++j) {
        Eigen::MatrixXcd u = evolution_unitary(spec, t * double(std::int64_t{1} << j));
        psi = apply_gate(psi, GateOp::controlled_unitary(std::move(u), sys_qubits, {clock_qubits[j]}));
    }
    psi = apply_qft(psi, clock_qubits, /*inverse=*/true);

    // Controlled eigenvalue inversion, applied as one sweep over the clock
    // values: each clock basis value s rotates the ancilla by
    // 2 asin(C / lambda(s)). Equivalent to 2^m - 1 multi-controlled RY gates.
    const std::size_t grid = std::size_t{1} << m;
    const std::size_t anc_bit = std::size_t{1} << anc;
    std::vector<double> ratio(grid, 0.0);
    for (std::size_t s = 1; s < grid; ++s) {
        double phase = double(s) / double(grid);
        if (spec.indefinite && s >= grid / 2) phase -= 1.0; // signed decode
        const double lambda_hat = kTwoPi * phase / t;
        ratio[s] = std::clamp(c_rot / lambda_hat, -1.0, 1.0);
    }
    for (std::size_t i = 0; i < psi.dim(); ++i) {
        if (i & anc_bit) continue;
        const std::size_t s = (i >> n_sys) & (grid - 1);
        if (s == 0) continue;
        const double r = ratio[s];
        const double k = std::sqrt(1.0 - r * r);
        const cd a0 = psi.amplitudes[i];
        const cd a1 = psi.amplitudes[i | anc_bit];
        psi.amplitudes[i] = k * a0 - r * a1;
        psi.amplitudes[i | anc_bit] = r * a0 + k * a1;
    }

    // Uncompute phase estimation: forward QFT, inverse controlled powers,
    // then the Hadamard layer that produced the initial clock superposition.
    psi = apply_qft(psi, clock_qubits, /*inverse=*/false);
    for (int j = m - 1; j >= 0; --j) {
        Eigen::MatrixXcd u = evolution_unitary(spec, -t * double(std::int64_t{1} << j));
        psi = apply_gate(psi, GateOp::controlled_unitary(std::move(u), sys_qubits, {clock_qubits[j]}));
    }
    for (int q : clock_qubits) psi = apply_gate(psi, GateOp::h(q));

    PostSelection selected = post_select(psi, anc, 1);

    // Drop the residual clock leakage (exactly zero for on-grid spectra) and
    // slice out the system register.
    QuantumState out = make_zero_state(n_sys);
    for (std::size_t i = 0; i < out.dim(); ++i) {
        out.amplitudes[i] = selected.state.amplitudes[i | anc_bit];
    }
    normalize(out);

    HHLSolution sol;
    sol.state = std::move(out);
    sol.ancilla_probability = selected.probability;
    const double safety = spec.abs_min / c_rot;
    sol.success_probability = std::min(1.0, selected.probability * safety * safety);
    sol.norm_estimate = encoded.norm * std::sqrt(selected.probability) / c_rot;
    sol.fidelity_vs_classical = fidelity(sol.state, classical_solve(system));
    return sol;
}

double fidelity(const QuantumState& a, const Eigen::VectorXcd& b) {
    if (static_cast<Eigen::Index>(a.dim()) != b.size()) {
        throw std::invalid_argument("fidelity operands differ in dimension");
    }
    const double nrm = b.norm();
    if (nrm < 1e-300) throw std::invalid_argument("fidelity against the zero vector");
    cd acc{0.0, 0.0};
    for (Eigen::Index i = 0; i < b.size(); ++i) {
        acc += std::conj(a.amplitudes[i]) * b(i) / nrm;
    }
    return std::norm(acc);
}

Eigen::VectorXd recover_solution(const HermitianSystem& system, const HHLSolution& solution) {
    const Eigen::Index dim = system.matrix.rows();
    Eigen::VectorXcd v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = solution.state.amplitudes[i];

    // Strip the global phase (largest component made real-positive), then
    // choose the overall sign by residual against the padded system.
    Eigen::Index top = 0;
    v.cwiseAbs().maxCoeff(&top);
    const cd pivot = v(top);
    if (std::abs(pivot) > 1e-300) v *= std::conj(pivot) / std::abs(pivot);

    Eigen::VectorXd x = v.real() * solution.norm_estimate;
    const double res_pos = (system.matrix.real() * x - system.rhs.real()).norm();
    const double res_neg = (system.matrix.real() * x + system.rhs.real()).norm();
    if (res_neg < res_pos) x = -x;
    return x.segment(system.solution_offset, system.solution_dim);
}

HermitianSystem random_spectrum_system(int dim, double lo, double hi, std::uint64_t seed) {
    if (dim < 2) throw std::domain_error("system dimension must be at least 2");
    if (!(lo > 0.0) || !(hi >= lo)) throw std::domain_error("spectrum bounds must satisfy 0 < lo <= hi");

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> band(lo, hi);

    // Haar-ish unitary from the QR of a complex Gaussian matrix.
    Eigen::MatrixXcd z = Eigen::MatrixXcd::NullaryExpr(
        dim, dim, [&] { return cd{gauss(rng), gauss(rng)}; });
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; ++j) {
        const cd d = r(j, j);
        if (std::abs(d) > 1e-300) q.col(j) *= d / std::abs(d);
    }

    Eigen::VectorXd lambdas(dim);
    for (int j = 0; j < dim; ++j) lambdas(j) = band(rng);
    Eigen::MatrixXcd a = q * lambdas.asDiagonal() * q.adjoint();
    a = ((a + a.adjoint()) / 2.0).eval(); // kill rounding asymmetry

    Eigen::VectorXcd b = Eigen::VectorXcd::NullaryExpr(
        dim, [&] { return cd{gauss(rng), gauss(rng)}; });
    b.normalize();
    return make_hermitian(a, b);
}

} // namespace qsl::hhl
