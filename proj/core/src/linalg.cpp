#include "qsl/linalg.hpp"

#include <cmath>
#include <stdexcept>

#include "qsl/errors.hpp"

namespace qsl {

namespace {

template <typename Matrix, typename Vector>
Vector eliminate(Matrix a, Vector b) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n || b.size() != n) {
        throw std::invalid_argument("solver expects a square system");
    }
    const double scale = std::max(a.cwiseAbs().maxCoeff(), 1.0);

    for (Eigen::Index col = 0; col < n; ++col) {
        // partial pivoting on the current column
        Eigen::Index pivot = col;
        double best = std::abs(a(col, col));
        for (Eigen::Index r = col + 1; r < n; ++r) {
            const double mag = std::abs(a(r, col));
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best <= kPivotTolerance * scale) {
            throw singular_error("matrix is singular within pivot tolerance");
        }
        if (pivot != col) {
            a.row(pivot).swap(a.row(col));
            std::swap(b(pivot), b(col));
        }
        for (Eigen::Index r = col + 1; r < n; ++r) {
            const auto factor = a(r, col) / a(col, col);
            a.row(r).tail(n - col) -= factor * a.row(col).tail(n - col);
            b(r) -= factor * b(col);
        }
    }

    Vector x = b;
    for (Eigen::Index r = n - 1; r >= 0; --r) {
        auto acc = b(r);
        for (Eigen::Index c = r + 1; c < n; ++c) acc -= a(r, c) * x(c);
        x(r) = acc / a(r, r);
    }
    return x;
}

} // namespace

Eigen::VectorXcd solve_gaussian(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& b) {
    return eliminate<Eigen::MatrixXcd, Eigen::VectorXcd>(a, b);
}

Eigen::VectorXd solve_gaussian(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
    return eliminate<Eigen::MatrixXd, Eigen::VectorXd>(a, b);
}

bool is_hermitian(const Eigen::MatrixXcd& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Eigen::MatrixXcd& m, double tol) {
    if (m.rows() != m.cols()) return false;
    Eigen::MatrixXcd gram = m.adjoint() * m;
    return (gram - Eigen::MatrixXcd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tol;
}

} // namespace qsl
