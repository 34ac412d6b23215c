// Hybrid quantum-classical learner: angle feature maps, a layered RY/RZ +
// CNOT-ring ansatz, Z-readout on qubit 0, parameter-shift gradients, plain
// gradient descent, and the deep-circuit gradient-variance diagnostic.

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "qsl/dataset.hpp"
#include "qsl/state.hpp"

namespace qsl::vqc {

enum class EncodingScheme {
    Angle,         // one feature per qubit, RY(scaled feature)
    RepeatedAngle, // features cycled over the qubits
};

/// Feature encoding |phi(x)> = prod_q RY(offset_j + slope_j * x_j)|0>, with
/// the affine scaling chosen to land inside [0, pi].
struct FeatureMap {
    int n_qubits = 1;
    EncodingScheme scheme = EncodingScheme::Angle;
    Eigen::VectorXd offsets; // per feature
    Eigen::VectorXd slopes;  // per feature

    /// Uniform scaling of every feature from [lo, hi] onto [0, pi].
    static FeatureMap angle_range(int n_qubits, double lo, double hi,
                                  EncodingScheme scheme = EncodingScheme::Angle);
    /// Per-feature min-max scaling onto [0, pi] taken from the data columns.
    static FeatureMap min_max(const Eigen::MatrixXd& features,
                              EncodingScheme scheme = EncodingScheme::Angle);
};

QuantumState encode(const FeatureMap& map, const Eigen::VectorXd& x);

/// Layered ansatz: each layer applies RY(theta), RZ(theta) per qubit (two
/// parameters per qubit per layer, qubit-major) followed by a CNOT ring.
struct Ansatz {
    int n_qubits = 1;
    int layers = 1;
    int parameter_count() const { return 2 * n_qubits * layers; }
};

QuantumState apply_ansatz(const QuantumState& state, const Ansatz& ansatz,
                          const Eigen::VectorXd& theta);

/// f(x; theta) = <Z> on qubit 0 of U(theta) U_phi(x)|0>, in [-1, 1].
double model_output(const FeatureMap& map, const Ansatz& ansatz,
                    const Eigen::VectorXd& theta, const Eigen::VectorXd& x);
/// Same readout without data encoding (bare U(theta)|0>).
double model_output(const Ansatz& ansatz, const Eigen::VectorXd& theta);

/// Classification label: sign of the readout, exact zero counts as +1.
int predict_label(const FeatureMap& map, const Ansatz& ansatz,
                  const Eigen::VectorXd& theta, const Eigen::VectorXd& x);

/// d<Z>/d theta_j by the two-point shift rule (exactly two circuit runs).
double parameter_shift_grad(const FeatureMap& map, const Ansatz& ansatz,
                            const Eigen::VectorXd& theta, const Eigen::VectorXd& x,
                            int index);

enum class LossKind { MSE, Logistic };
enum class GradientMethod { ParameterShift, FiniteDifference };
enum class InitScheme { Uniform, Small };

inline constexpr double kFiniteDifferenceStep = 1e-6;

struct GradientEstimate {
    Eigen::VectorXd partials;
    std::string method;
    long circuit_evaluations = 0; // shifted executions only: 2M per example
};

/// Loss gradient over a batch, assembled from per-example shift-rule
/// partials by the chain rule.
GradientEstimate full_gradient(const FeatureMap& map, const Ansatz& ansatz,
                               const Eigen::VectorXd& theta, const TrainingSet& batch,
                               LossKind loss = LossKind::MSE,
                               GradientMethod method = GradientMethod::ParameterShift);

struct TrainConfig {
    double learning_rate = 0.1;
    int epochs = 100;
    std::uint64_t seed = 42;
    LossKind loss = LossKind::MSE;
    GradientMethod gradient = GradientMethod::ParameterShift;
    InitScheme init = InitScheme::Uniform;
};

struct TrainResult {
    Eigen::VectorXd theta;
    std::vector<double> losses;       // epochs + 1 entries, initial loss first
    std::vector<double> train_errors; // same length, misclassification rates
};

/// Full-batch gradient descent, deterministic per seed. Throws
/// divergence_error (with the epoch) if the loss leaves the finite range.
TrainResult train(const TrainingSet& data, const FeatureMap& map, const Ansatz& ansatz,
                  const TrainConfig& config);

struct BarrenRow {
    int n_qubits = 0;
    int layers = 0;
    double grad_variance = 0.0;
};

/// Var[dC/d theta_1] over uniformly sampled parameters of deep random
/// circuits, per qubit count; C is the bare-ansatz Z readout.
std::vector<BarrenRow> barren_diagnostic(const std::vector<int>& qubit_range, int layers,
                                         int samples, std::uint64_t seed);

/// Plain-text parameter persistence: two header lines (n_qubits, layers)
/// then one parameter per line.
void save_parameters(const std::string& path, const Ansatz& ansatz,
                     const Eigen::VectorXd& theta);
struct SavedParameters {
    Ansatz ansatz;
    Eigen::VectorXd theta;
};
SavedParameters load_parameters(const std::string& path);

} // namespace qsl::vqc
