// Least-squares SVM: Gram construction over classical or quantum kernels,
// the bordered system [[0, 1^T], [1, Omega + ridge I]] (w0, gamma) = (0, y),
// solved classically or through the quantum linear solver, and the signed
// kernel-expansion predictor.

#pragma once

#include <Eigen/Dense>
#include <string>

#include "qsl/dataset.hpp"
#include "qsl/hhl.hpp"
#include "qsl/vqc.hpp"

namespace qsl::lssvm {

enum class KernelKind { Linear, Polynomial, RBF, Quantum };

struct KernelSpec {
    KernelKind kind = KernelKind::Linear;
    int degree = 2;          // polynomial
    double coef0 = 1.0;      // polynomial
    double gamma = 1.0;      // rbf
    vqc::FeatureMap feature_map; // quantum
    double ridge = 1e-3;     // added to the Gram diagonal

    static KernelSpec linear(double ridge = 1e-3);
    static KernelSpec polynomial(int degree, double coef0, double ridge = 1e-3);
    static KernelSpec rbf(double gamma, double ridge = 1e-3);
    static KernelSpec quantum(vqc::FeatureMap map, double ridge = 1e-3);
};

/// Single kernel evaluation k(x, x2).
double kernel_value(const KernelSpec& kernel, const Eigen::VectorXd& x,
                    const Eigen::VectorXd& x2);

/// State-overlap kernel |<phi(x)|phi(x2)>|^2 computed exactly; the swap test
/// serves as its independent circuit oracle in the test suites.
double quantum_kernel(const Eigen::VectorXd& x, const Eigen::VectorXd& x2,
                      const vqc::FeatureMap& map);

/// Pairwise Gram matrix (ridge not included).
Eigen::MatrixXd gram_matrix(const TrainingSet& data, const KernelSpec& kernel);

struct BorderedSystem {
    Eigen::MatrixXd matrix;  // (N+1) x (N+1)
    Eigen::VectorXd rhs;     // [0, y]
};

/// Bordered matrix [[0, 1^T], [1, gram + ridge I]] with rhs (0, y).
BorderedSystem assemble_system(const Eigen::MatrixXd& gram, const Eigen::VectorXi& labels,
                               double ridge);

enum class Solver { Classical, HHL };

struct LSSVMModel {
    double bias = 0.0;                 // w0
    Eigen::VectorXd multipliers;       // gamma, one per training row
    KernelSpec kernel;
    TrainingSet support_data;
    Solver solver = Solver::Classical;
};

/// Solves the bordered system. The HHL path pads the symmetric matrix to a
/// power-of-two dimension, runs the quantum solver with the given clock
/// width (default_clock_qubits when clock_qubits <= 0), and rescales the
/// post-selected state by the tracked norm to recover (w0, gamma).
LSSVMModel train(const TrainingSet& data, const KernelSpec& kernel, Solver solver,
                 int clock_qubits = 0);

/// Kernel-expansion decision value sum_i gamma_i k(x_i, x) + w0. The
/// multipliers absorb the labels through the (0, y) right-hand side.
double decision_value(const LSSVMModel& model, const Eigen::VectorXd& x);

/// Signed prediction; an exact zero resolves to +1.
int predict(const LSSVMModel& model, const Eigen::VectorXd& x);

/// Misclassification rate of the model over a dataset.
double training_error(const LSSVMModel& model, const TrainingSet& data);

} // namespace qsl::lssvm
