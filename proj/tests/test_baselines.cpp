#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "qsl/baselines.hpp"
#include "qsl/errors.hpp"

using namespace qsl;
using namespace qsl::baseline;

namespace {

Eigen::VectorXi labels(std::initializer_list<int> xs) {
    Eigen::VectorXi v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (int x : xs) v(i++) = x;
    return v;
}

} // namespace

TEST_CASE("ols recovers the line through three collinear points") {
    Eigen::MatrixXd f(3, 1);
    f << 0, 1, 2;
    Eigen::VectorXd y(3);
    y << 0, 1, 2;
    DesignMatrix design = DesignMatrix::from_features(f);
    Eigen::VectorXd beta = ols_fit(design, y);
    CHECK(beta(0) == doctest::Approx(0.0));
    CHECK(beta(1) == doctest::Approx(1.0));
    CHECK(rss(design, y, beta) == doctest::Approx(0.0));
}

TEST_CASE("ols recovers planted coefficients on noiseless data") {
    std::mt19937_64 rng(31);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXd f(40, 3);
    for (Eigen::Index i = 0; i < f.rows(); ++i) {
        for (Eigen::Index j = 0; j < f.cols(); ++j) f(i, j) = gauss(rng);
    }
    Eigen::VectorXd planted(4);
    planted << 0.7, -1.3, 2.0, 0.25;
    DesignMatrix design = DesignMatrix::from_features(f);
    Eigen::VectorXd y = design.x * planted;

    Eigen::VectorXd beta = ols_fit(design, y);
    CHECK((beta - planted).cwiseAbs().maxCoeff() < 1e-9);

    // residual orthogonality: X^T (y - X beta) vanishes relative to X^T y
    Eigen::VectorXd normal_residual = design.x.transpose() * (y - design.x * beta);
    CHECK(normal_residual.norm() <= 1e-8 * (design.x.transpose() * y).norm());
}

TEST_CASE("rss optimality against random perturbations") {
    std::mt19937_64 rng(32);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXd f(25, 2);
    Eigen::VectorXd y(25);
    for (Eigen::Index i = 0; i < 25; ++i) {
        f(i, 0) = gauss(rng);
        f(i, 1) = gauss(rng);
        y(i) = 1.5 * f(i, 0) - 0.4 * f(i, 1) + 0.1 * gauss(rng);
    }
    DesignMatrix design = DesignMatrix::from_features(f);
    Eigen::VectorXd beta = ols_fit(design, y);
    const double best = rss(design, y, beta);

    for (int trial = 0; trial < 100; ++trial) {
        Eigen::VectorXd delta(3);
        for (int j = 0; j < 3; ++j) delta(j) = gauss(rng);
        delta *= 0.1 / delta.norm();
        CHECK(rss(design, y, beta + delta) >= best);
    }
}

TEST_CASE("duplicated feature columns raise a rank error") {
    Eigen::MatrixXd f(5, 2);
    f << 1, 1, 2, 2, 3, 3, 4, 4, 5, 5;
    Eigen::VectorXd y(5);
    y << 1, 2, 3, 4, 5;
    CHECK_THROWS_AS(ols_fit(DesignMatrix::from_features(f), y), singular_error);
}

TEST_CASE("rss reference values and shape checks") {
    Eigen::MatrixXd f(1, 1);
    f << 0.0;
    DesignMatrix design = DesignMatrix::from_features(f);
    Eigen::VectorXd y(1);
    y << 1.0;
    Eigen::VectorXd beta = Eigen::VectorXd::Zero(2);
    CHECK(rss(design, y, beta) == doctest::Approx(1.0)); // single residual of 1

    CHECK_THROWS_AS(rss(design, Eigen::VectorXd::Zero(2), beta), std::invalid_argument);
}

TEST_CASE("empirical error counts mismatches") {
    CHECK(empirical_error(labels({1, -1, 1}), labels({1, -1, 1})) == doctest::Approx(0.0));
    CHECK(empirical_error(labels({-1, 1, -1}), labels({1, -1, 1})) == doctest::Approx(1.0));
    CHECK(empirical_error(labels({1, 1, 1, -1}), labels({1, 1, 1, 1})) == doctest::Approx(0.25));
    CHECK_THROWS_AS(empirical_error(labels({}), labels({})), std::domain_error);
}

TEST_CASE("empirical error is permutation invariant") {
    Eigen::VectorXi pred = labels({1, -1, 1, -1, 1});
    Eigen::VectorXi truth = labels({1, 1, -1, -1, 1});
    const double base = empirical_error(pred, truth);
    std::vector<int> order{4, 2, 0, 3, 1};
    Eigen::VectorXi p2(5), t2(5);
    for (int i = 0; i < 5; ++i) {
        p2(i) = pred(order[i]);
        t2(i) = truth(order[i]);
    }
    CHECK(empirical_error(p2, t2) == doctest::Approx(base));
}

TEST_CASE("holdout error evaluates a predictor on the test split") {
    TrainingSet test;
    test.features.resize(4, 1);
    test.features << -2, -1, 1, 2;
    test.labels.resize(4);
    test.labels << -1, -1, 1, 1;

    auto oracle = [](const Eigen::VectorXd& x) { return x(0) >= 0.0 ? 1 : -1; };
    CHECK(holdout_error(oracle, test) == doctest::Approx(0.0));

    auto constant = [](const Eigen::VectorXd&) { return 1; };
    CHECK(holdout_error(constant, test) == doctest::Approx(0.5));

    TrainingSet empty;
    empty.features.resize(0, 1);
    empty.labels.resize(0);
    CHECK_THROWS_AS(holdout_error(oracle, empty), std::domain_error);
}

TEST_CASE("error reports keep both rates inside [0, 1]") {
    TrainingSet test;
    test.features.resize(4, 1);
    test.features << -2, -1, 1, 2;
    test.labels.resize(4);
    test.labels << -1, -1, 1, 1;

    ErrorReport report;
    report.empirical_error = empirical_error(labels({1, -1, 1, 1}), test.labels);
    report.has_holdout = true;
    report.holdout_error = holdout_error([](const Eigen::VectorXd&) { return -1; }, test);
    CHECK(report.empirical_error >= 0.0);
    CHECK(report.empirical_error <= 1.0);
    CHECK(report.holdout_error == doctest::Approx(0.5));
}

TEST_CASE("polynomial feature expansion") {
    Eigen::MatrixXd f(2, 1);
    f << 2.0, 3.0;
    Eigen::MatrixXd expanded = polynomial_features(f, 3);
    CHECK(expanded.cols() == 3);
    CHECK(expanded(0, 0) == doctest::Approx(2.0));
    CHECK(expanded(0, 1) == doctest::Approx(4.0));
    CHECK(expanded(0, 2) == doctest::Approx(8.0));
    CHECK(expanded(1, 2) == doctest::Approx(27.0));

    // expansion feeds straight into the design/OLS path
    Eigen::VectorXd y(2);
    y << 1.0, 2.0;
    CHECK_NOTHROW(DesignMatrix::from_features(expanded));
}
