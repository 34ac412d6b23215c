// Classical parametric baselines used standalone and as oracles: ordinary
// least squares through the normal equations, residual sum of squares, and
// the misclassification-rate metrics.

#pragma once

#include <Eigen/Dense>
#include <functional>

#include "qsl/dataset.hpp"

namespace qsl::baseline {

/// N x (p+1) design matrix whose first column is all ones.
struct DesignMatrix {
    Eigen::MatrixXd x;

    static DesignMatrix from_features(const Eigen::MatrixXd& features);
};

/// Per-feature powers 1..degree (no interaction terms, no ones column).
Eigen::MatrixXd polynomial_features(const Eigen::MatrixXd& features, int degree);

/// beta = (X^T X)^-1 X^T y via elimination on the normal equations.
/// Throws singular_error when X^T X is rank deficient.
Eigen::VectorXd ols_fit(const DesignMatrix& design, const Eigen::VectorXd& y);

/// (y - X beta)^T (y - X beta).
double rss(const DesignMatrix& design, const Eigen::VectorXd& y, const Eigen::VectorXd& beta);

/// Fraction of mismatched labels.
double empirical_error(const Eigen::VectorXi& predictions, const Eigen::VectorXi& labels);

/// Misclassification rate of a predictor over a held-out set (the caller is
/// responsible for keeping it disjoint from training).
double holdout_error(const std::function<int(const Eigen::VectorXd&)>& predictor,
                     const TrainingSet& test_set);

struct ErrorReport {
    double empirical_error = 0.0;
    bool has_holdout = false;
    double holdout_error = 0.0;
};

} // namespace qsl::baseline
