#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "qsl/errors.hpp"
#include "qsl/hhl.hpp"
#include "qsl/linalg.hpp"

using namespace qsl;
using namespace qsl::hhl;

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::MatrixXcd mat2(double a, double b, double c, double d) {
    Eigen::MatrixXcd m(2, 2);
    m << a, b, c, d;
    return m;
}

Eigen::VectorXcd vec2(double a, double b) {
    Eigen::VectorXcd v(2);
    v << a, b;
    return v;
}

} // namespace

TEST_CASE("classical_solve on reference systems") {
    // identity: solution is the rhs
    auto id = make_hermitian(Eigen::MatrixXcd::Identity(2, 2), vec2(0.6, 0.8));
    Eigen::VectorXcd x = classical_solve(id);
    CHECK(x(0).real() == doctest::Approx(0.6));
    CHECK(x(1).real() == doctest::Approx(0.8));

    // diag(1,2), b=[0,1]: hand elimination gives [0, 0.5]
    auto diag = make_hermitian(mat2(1, 0, 0, 2), vec2(0, 1));
    Eigen::VectorXcd y = classical_solve(diag);
    CHECK(y(0).real() == doctest::Approx(0.0));
    CHECK(y(1).real() == doctest::Approx(0.5));

    // [[2,1],[1,2]] b=[1,0]: det 3, inverse by hand gives [2/3, -1/3]
    auto sym = make_hermitian(mat2(2, 1, 1, 2), vec2(1, 0));
    Eigen::VectorXcd z = classical_solve(sym);
    CHECK(z(0).real() == doctest::Approx(2.0 / 3.0));
    CHECK(z(1).real() == doctest::Approx(-1.0 / 3.0));

    CHECK(std::abs((sym.matrix * z - sym.rhs).norm()) <= 1e-10 * sym.rhs.norm());
}

TEST_CASE("make_hermitian keeps Hermitian input and dilates the rest") {
    auto sym = make_hermitian(mat2(2, 1, 1, 2), vec2(1, 0));
    CHECK(sym.matrix.rows() == 2);
    CHECK_FALSE(sym.dilated);
    CHECK(sym.condition_number == doctest::Approx(3.0));
    CHECK(sym.sparsity == 2);

    auto dil = make_hermitian(mat2(1, 1, 0, 1), vec2(1, 2));
    CHECK(dil.dilated);
    CHECK(dil.matrix.rows() == 4);
    CHECK(dil.matrix.block(0, 0, 2, 2).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
    CHECK(dil.matrix.block(2, 2, 2, 2).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
    CHECK(dil.matrix(0, 2).real() == doctest::Approx(1.0));
    CHECK(dil.matrix(0, 3).real() == doctest::Approx(1.0));
    CHECK(dil.rhs(0).real() == doctest::Approx(1.0));
    CHECK(dil.rhs(2).real() == doctest::Approx(0.0));
    CHECK(dil.solution_offset == 2);
    CHECK(is_hermitian(dil.matrix));

    CHECK_THROWS_AS(make_hermitian(mat2(1, 1, 1, 1), vec2(1, 0)), singular_error);
}

TEST_CASE("non-power-of-two systems are padded with an identity block") {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(3, 3) * 2.0;
    Eigen::VectorXcd b(3);
    b << 1, 1, 1;
    auto sys = make_hermitian(a, b);
    CHECK(sys.matrix.rows() == 4);
    CHECK(sys.matrix(3, 3).real() == doctest::Approx(1.0));
    CHECK(sys.rhs(3) == cd{0.0, 0.0});
    CHECK(sys.solution_dim == 3);

    Eigen::VectorXcd x = classical_solve(sys);
    Eigen::VectorXcd orig = extract_block(sys, x);
    CHECK(orig.size() == 3);
    CHECK(orig(0).real() == doctest::Approx(0.5));
}

TEST_CASE("choose_config prefers exactly representable spectra") {
    // diag(1,2) with two clock qubits: scaled eigenvalues 1/4 and 2/4
    auto diag = make_hermitian(mat2(1, 0, 0, 2), vec2(1, 1));
    HHLConfig cfg = choose_config(diag, 2);
    CHECK(cfg.evolution_time == doctest::Approx(kPi / 2.0));
    CHECK(cfg.rotation_constant == doctest::Approx(0.99));

    // identity: single eigenvalue, representable at the top of any grid
    auto id = make_hermitian(Eigen::MatrixXcd::Identity(2, 2), vec2(1, 0));
    HHLConfig cid = choose_config(id, 5);
    CHECK(cid.rotation_constant == doctest::Approx(0.99));
    const double scaled = 1.0 * cid.evolution_time / (2.0 * kPi);
    CHECK(scaled * 32.0 == doctest::Approx(std::round(scaled * 32.0)));

    // irrational spectrum inside [1,2]: falls back to the (2^m - 1)/2^m bound
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(2, 2);
    a(0, 0) = 1.0;
    a(1, 1) = 2.0;
    a(0, 1) = a(1, 0) = 0.1; // eigenvalues ~ {0.990, 2.010} -> rescale below
    Eigen::MatrixXcd spread = Eigen::MatrixXcd::Zero(4, 4);
    spread(0, 0) = 1.0;
    spread(1, 1) = std::sqrt(2.0);
    spread(2, 2) = 1.7;
    spread(3, 3) = 2.0;
    Eigen::VectorXcd b4 = Eigen::VectorXcd::Ones(4);
    auto sys = make_hermitian(spread, b4);
    HHLConfig c6 = choose_config(sys, 6);
    CHECK(c6.evolution_time == doctest::Approx(2.0 * kPi * (63.0 / 64.0) / 2.0));
}

TEST_CASE("hhl_solve inverts the identity exactly") {
    auto sys = make_hermitian(Eigen::MatrixXcd::Identity(2, 2), vec2(0.6, 0.8));
    HHLConfig cfg = choose_config(sys, 3);
    HHLSolution sol = hhl_solve(sys, cfg);
    CHECK(sol.fidelity_vs_classical == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(sol.state.amplitudes[0].real() == doctest::Approx(0.6));
    CHECK(sol.state.amplitudes[1].real() == doctest::Approx(0.8));
    // A = I hits the documented ceiling once the safety margin is factored out
    CHECK(sol.success_probability == doctest::Approx(1.0).epsilon(1e-9));

    // any scalar multiple of the identity behaves the same way
    auto scaled = make_hermitian(Eigen::MatrixXcd::Identity(2, 2) * 0.5, vec2(1.0, 1.0));
    HHLSolution ssol = hhl_solve(scaled, choose_config(scaled, 4));
    CHECK(ssol.success_probability == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("hhl_solve reproduces the diag(1,2) hand solution") {
    const double r = 1.0 / std::sqrt(2.0);
    auto sys = make_hermitian(mat2(1, 0, 0, 2), vec2(r, r));
    HHLConfig cfg;
    cfg.clock_qubits = 2;
    cfg.evolution_time = kPi / 2.0;
    cfg.rotation_constant = 0.99;
    HHLSolution sol = hhl_solve(sys, cfg);

    // x = [b0/1, b1/2] normalized = [2/sqrt(5), 1/sqrt(5)]
    Eigen::VectorXcd expected = vec2(2.0 / std::sqrt(5.0), 1.0 / std::sqrt(5.0));
    CHECK(fidelity(sol.state, expected) >= 0.999);
    CHECK(sol.fidelity_vs_classical >= 0.999);
    CHECK(sol.success_probability <= 1.0 + 1e-12);
}

TEST_CASE("random spectra in [1,2] reach fidelity 0.99 at seven clock qubits") {
    for (int dim : {2, 4}) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            auto sys = random_spectrum_system(dim, 1.0, 2.0, 1000 * dim + seed);
            HHLSolution sol = hhl_solve(sys, choose_config(sys, 7));
            CAPTURE(dim);
            CAPTURE(seed);
            CHECK(sol.fidelity_vs_classical >= 0.99);
            CHECK(sol.success_probability > 0.0);
            CHECK(sol.success_probability <= 1.0);
        }
    }
}

TEST_CASE("median fidelity is non-decreasing in the clock width") {
    // Refinement is measured on nested clock grids: the evolution time is
    // frozen at the m=3 choice so widening the register only adds resolution.
    std::vector<HermitianSystem> systems;
    std::vector<HHLConfig> base;
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        systems.push_back(random_spectrum_system(4, 1.0, 2.0, 500 + seed));
        base.push_back(choose_config(systems.back(), 3));
    }
    double previous = 0.0;
    for (int m = 3; m <= 8; ++m) {
        std::vector<double> fids;
        for (std::size_t i = 0; i < systems.size(); ++i) {
            HHLConfig cfg = base[i];
            cfg.clock_qubits = m;
            fids.push_back(hhl_solve(systems[i], cfg).fidelity_vs_classical);
        }
        std::sort(fids.begin(), fids.end());
        const double median = 0.5 * (fids[fids.size() / 2] + fids[(fids.size() - 1) / 2]);
        CHECK(median >= previous - 1e-9);
        previous = median;
    }
}

TEST_CASE("diagonal systems invert entrywise") {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(4, 4);
    a(0, 0) = 1.0;
    a(1, 1) = 2.0;
    a(2, 2) = 4.0;
    a(3, 3) = 2.0;
    Eigen::VectorXcd b(4);
    b << 0.5, 0.5, 0.5, 0.5;
    auto sys = make_hermitian(a, b);
    HHLSolution sol = hhl_solve(sys, choose_config(sys, 6));

    // amplitudes proportional to b_i / lambda_i
    Eigen::VectorXd expected(4);
    expected << 0.5, 0.25, 0.125, 0.25;
    expected.normalize();
    for (int i = 0; i < 4; ++i) {
        CHECK(std::abs(sol.state.amplitudes[i]) == doctest::Approx(expected(i)).epsilon(1e-6));
    }
}

TEST_CASE("indefinite spectra use the signed clock decode") {
    // eigenvalues {-1, +2}: indefinite but exactly representable
    Eigen::MatrixXcd a = mat2(0.5, 1.5, 1.5, 0.5); // eigenvalues 2 and -1
    auto sys = make_hermitian(a, vec2(1.0, 0.0));
    HHLSolution sol = hhl_solve(sys, choose_config(sys, 6));
    CHECK(sol.fidelity_vs_classical >= 1.0 - 1e-6);

    Eigen::VectorXd recovered = recover_solution(sys, sol);
    Eigen::VectorXcd truth = classical_solve(sys);
    CHECK(recovered(0) == doctest::Approx(truth(0).real()).epsilon(1e-5));
    CHECK(recovered(1) == doctest::Approx(truth(1).real()).epsilon(1e-5));
}

TEST_CASE("dilated solve reads the lower block") {
    // non-Hermitian with singular values {1, 2}: dilation spectrum on-grid
    Eigen::MatrixXcd a = mat2(0, 1, 2, 0);
    Eigen::VectorXcd b = vec2(0.6, 0.8);
    auto sys = make_hermitian(a, b);
    CHECK(sys.dilated);

    HHLSolution sol = hhl_solve(sys, choose_config(sys, 6));
    CHECK(sol.fidelity_vs_classical >= 1.0 - 1e-6);

    Eigen::VectorXd got = recover_solution(sys, sol);
    Eigen::VectorXcd direct = solve_gaussian(a, b); // oracle on the original system
    CHECK(got.size() == 2);
    CHECK(got(0) == doctest::Approx(direct(0).real()).epsilon(1e-6));
    CHECK(got(1) == doctest::Approx(direct(1).real()).epsilon(1e-6));
}

TEST_CASE("hhl_solve validates its configuration") {
    auto sys = make_hermitian(mat2(1, 0, 0, 2), vec2(1, 1));
    HHLConfig bad_t;
    bad_t.clock_qubits = 3;
    bad_t.evolution_time = 2.0 * kPi; // scaled top eigenvalue = 2 -> wraps
    bad_t.rotation_constant = 0.5;
    CHECK_THROWS_AS(hhl_solve(sys, bad_t), std::invalid_argument);

    HHLConfig bad_c = choose_config(sys, 3);
    bad_c.rotation_constant = 1.5; // above min |lambda|
    CHECK_THROWS_AS(hhl_solve(sys, bad_c), std::invalid_argument);
}

TEST_CASE("fidelity helper") {
    QuantumState zero = prepare_basis(1, 0);
    CHECK(fidelity(zero, vec2(1, 0)) == doctest::Approx(1.0));
    CHECK(fidelity(zero, vec2(0, 1)) == doctest::Approx(0.0));

    QuantumState plus;
    plus.n_qubits = 1;
    plus.amplitudes = {cd{1.0 / std::sqrt(2.0), 0.0}, cd{1.0 / std::sqrt(2.0), 0.0}};
    CHECK(fidelity(plus, vec2(1, 0)) == doctest::Approx(0.5));

    CHECK_THROWS_AS(fidelity(zero, Eigen::VectorXcd::Zero(2)), std::invalid_argument);
}

TEST_CASE("default clock width follows the conditioning") {
    auto tame = make_hermitian(mat2(1, 0, 0, 2), vec2(1, 1));
    CHECK(default_clock_qubits(tame, 0.1) == 6);    // ceil(log2(20)) = 5, floor 6 applies
    CHECK(default_clock_qubits(tame, 1e-3) == 10);  // ceil(log2(2000)) = 11, capped

    Eigen::MatrixXcd harsh = Eigen::MatrixXcd::Zero(2, 2);
    harsh(0, 0) = 1e-3;
    harsh(1, 1) = 4.0;
    auto sys = make_hermitian(harsh, vec2(1, 1));
    CHECK(default_clock_qubits(sys) == 10);
}
