#include "qsl/qsvm.hpp"

#include <cmath>
#include <stdexcept>

#include "qsl/errors.hpp"
#include "qsl/linalg.hpp"

namespace qsl::lssvm {

KernelSpec KernelSpec::linear(double ridge) {
    KernelSpec k;
    k.kind = KernelKind::Linear;
    k.ridge = ridge;
    return k;
}

KernelSpec KernelSpec::polynomial(int degree, double coef0, double ridge) {
    if (degree < 1) throw std::invalid_argument("polynomial degree must be at least 1");
    if (coef0 < 0.0) throw std::invalid_argument("polynomial coef0 must be nonnegative");
    KernelSpec k;
    k.kind = KernelKind::Polynomial;
    k.degree = degree;
    k.coef0 = coef0;
    k.ridge = ridge;
    return k;
}

KernelSpec KernelSpec::rbf(double gamma, double ridge) {
    if (!(gamma > 0.0)) throw std::invalid_argument("rbf gamma must be positive");
    KernelSpec k;
    k.kind = KernelKind::RBF;
    k.gamma = gamma;
    k.ridge = ridge;
    return k;
}

KernelSpec KernelSpec::quantum(vqc::FeatureMap map, double ridge) {
    KernelSpec k;
    k.kind = KernelKind::Quantum;
    k.feature_map = std::move(map);
    k.ridge = ridge;
    return k;
}

double quantum_kernel(const Eigen::VectorXd& x, const Eigen::VectorXd& x2,
                      const vqc::FeatureMap& map) {
    if (x.size() != x2.size()) throw std::invalid_argument("kernel arguments differ in dimension");
    QuantumState a = vqc::encode(map, x);
    QuantumState b = vqc::encode(map, x2);
    return std::norm(inner_product(a, b));
}

double kernel_value(const KernelSpec& kernel, const Eigen::VectorXd& x,
                    const Eigen::VectorXd& x2) {
    if (x.size() != x2.size()) throw std::invalid_argument("kernel arguments differ in dimension");
    switch (kernel.kind) {
        case KernelKind::Linear:
            return x.dot(x2);
        case KernelKind::Polynomial:
            return std::pow(x.dot(x2) + kernel.coef0, kernel.degree);
        case KernelKind::RBF:
            return std::exp(-kernel.gamma * (x - x2).squaredNorm());
        case KernelKind::Quantum:
            return quantum_kernel(x, x2, kernel.feature_map);
    }
    throw std::logic_error("unknown kernel kind");
}

Eigen::MatrixXd gram_matrix(const TrainingSet& data, const KernelSpec& kernel) {
    const Eigen::Index n = data.size();
    Eigen::MatrixXd gram(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            const double v = kernel_value(kernel, data.features.row(i).transpose(),
                                          data.features.row(j).transpose());
            gram(i, j) = v;
            gram(j, i) = v;
        }
    }
    return gram;
}

BorderedSystem assemble_system(const Eigen::MatrixXd& gram, const Eigen::VectorXi& labels,
                               double ridge) {
    const Eigen::Index n = gram.rows();
    if (gram.cols() != n) throw std::invalid_argument("Gram matrix must be square");
    if (labels.size() != n) throw std::invalid_argument("label count must match the Gram size");

    BorderedSystem sys;
    sys.matrix = Eigen::MatrixXd::Zero(n + 1, n + 1);
    sys.matrix.block(0, 1, 1, n).setOnes();
    sys.matrix.block(1, 0, n, 1).setOnes();
    sys.matrix.block(1, 1, n, n) = gram + ridge * Eigen::MatrixXd::Identity(n, n);
    sys.rhs = Eigen::VectorXd::Zero(n + 1);
    sys.rhs.tail(n) = labels.cast<double>();
    return sys;
}

LSSVMModel train(const TrainingSet& data, const KernelSpec& kernel, Solver solver,
                 int clock_qubits) {
    validate_training_set(data);
    BorderedSystem bordered = assemble_system(gram_matrix(data, kernel), data.labels, kernel.ridge);

    Eigen::VectorXd packed;
    if (solver == Solver::Classical) {
        try {
            packed = solve_gaussian(bordered.matrix, bordered.rhs);
        } catch (const singular_error&) {
            throw singular_error("bordered system is singular; raise the ridge term");
        }
    } else {
        hhl::HermitianSystem sys;
        try {
            sys = hhl::make_hermitian(bordered.matrix.cast<cd>(), bordered.rhs.cast<cd>());
        } catch (const singular_error&) {
            throw singular_error("bordered system is singular; raise the ridge term");
        }
        const int m = clock_qubits > 0 ? clock_qubits : hhl::default_clock_qubits(sys);
        hhl::HHLSolution sol = hhl::hhl_solve(sys, hhl::choose_config(sys, m));
        packed = hhl::recover_solution(sys, sol);
    }

    LSSVMModel model;
    model.bias = packed(0);
    model.multipliers = packed.tail(data.size());
    model.kernel = kernel;
    model.support_data = data;
    model.solver = solver;
    return model;
}

double decision_value(const LSSVMModel& model, const Eigen::VectorXd& x) {
    if (x.size() != model.support_data.feature_count()) {
        throw std::invalid_argument("query dimension does not match the training features");
    }
    double acc = model.bias;
    for (Eigen::Index i = 0; i < model.support_data.size(); ++i) {
        acc += model.multipliers(i) *
               kernel_value(model.kernel, model.support_data.features.row(i).transpose(), x);
    }
    return acc;
}

int predict(const LSSVMModel& model, const Eigen::VectorXd& x) {
    return decision_value(model, x) >= 0.0 ? 1 : -1;
}

double training_error(const LSSVMModel& model, const TrainingSet& data) {
    int wrong = 0;
    for (Eigen::Index i = 0; i < data.size(); ++i) {
        if (predict(model, data.features.row(i).transpose()) != data.labels(i)) ++wrong;
    }
    return double(wrong) / double(data.size());
}

} // namespace qsl::lssvm
