#include "qsl/baselines.hpp"

#include <cmath>
#include <stdexcept>

#include "qsl/errors.hpp"
#include "qsl/linalg.hpp"

namespace qsl::baseline {

DesignMatrix DesignMatrix::from_features(const Eigen::MatrixXd& features) {
    DesignMatrix d;
    d.x.resize(features.rows(), features.cols() + 1);
    d.x.col(0).setOnes();
    d.x.rightCols(features.cols()) = features;
    return d;
}

Eigen::MatrixXd polynomial_features(const Eigen::MatrixXd& features, int degree) {
    if (degree < 1) throw std::domain_error("polynomial expansion needs degree >= 1");
    const Eigen::Index n = features.rows(), p = features.cols();
    Eigen::MatrixXd out(n, p * degree);
    for (int d = 1; d <= degree; ++d) {
        for (Eigen::Index j = 0; j < p; ++j) {
            out.col((d - 1) * p + j) = features.col(j).array().pow(double(d));
        }
    }
    return out;
}

Eigen::VectorXd ols_fit(const DesignMatrix& design, const Eigen::VectorXd& y) {
    const Eigen::MatrixXd& x = design.x;
    if (x.rows() != y.size()) throw std::invalid_argument("row count of X must match y");
    if ((x.col(0).array() - 1.0).abs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("design matrix must carry a leading ones column");
    }
    if (x.rows() <= x.cols() - 1) {
        throw std::invalid_argument("normal equations need more rows than features");
    }
    try {
        return solve_gaussian(Eigen::MatrixXd(x.transpose() * x), Eigen::VectorXd(x.transpose() * y));
    } catch (const singular_error&) {
        throw singular_error("X^T X is rank deficient (collinear columns)");
    }
}

double rss(const DesignMatrix& design, const Eigen::VectorXd& y, const Eigen::VectorXd& beta) {
    if (design.x.cols() != beta.size() || design.x.rows() != y.size()) {
        throw std::invalid_argument("rss operands have mismatched shapes");
    }
    const Eigen::VectorXd r = y - design.x * beta;
    return r.squaredNorm();
}

double empirical_error(const Eigen::VectorXi& predictions, const Eigen::VectorXi& labels) {
    if (predictions.size() == 0) throw std::domain_error("empirical error of an empty set");
    if (predictions.size() != labels.size()) {
        throw std::invalid_argument("prediction and label lengths differ");
    }
    int wrong = 0;
    for (Eigen::Index i = 0; i < labels.size(); ++i) {
        if (predictions(i) != labels(i)) ++wrong;
    }
    return double(wrong) / double(labels.size());
}

double holdout_error(const std::function<int(const Eigen::VectorXd&)>& predictor,
                     const TrainingSet& test_set) {
    if (test_set.size() == 0) throw std::domain_error("holdout error of an empty set");
    Eigen::VectorXi predictions(test_set.size());
    for (Eigen::Index i = 0; i < test_set.size(); ++i) {
        predictions(i) = predictor(test_set.features.row(i).transpose());
    }
    return empirical_error(predictions, test_set.labels);
}

} // namespace qsl::baseline
