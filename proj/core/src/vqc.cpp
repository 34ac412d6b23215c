#include "qsl/vqc.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qsl/errors.hpp"
#include "qsl/gates.hpp"
#include "qsl/measure.hpp"

namespace qsl::vqc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleTol = 1e-9;

int feature_index(const FeatureMap& map, int qubit, Eigen::Index p) {
    return map.scheme == EncodingScheme::Angle ? qubit : qubit % static_cast<int>(p);
}

double loss_value(LossKind kind, double f, int y) {
    if (kind == LossKind::MSE) {
        const double d = f - double(y);
        return d * d;
    }
    return std::log1p(std::exp(-double(y) * f));
}

double loss_slope(LossKind kind, double f, int y) {
    if (kind == LossKind::MSE) return 2.0 * (f - double(y));
    const double margin = double(y) * f;
    return -double(y) / (1.0 + std::exp(margin));
}

} // namespace

FeatureMap FeatureMap::angle_range(int n_qubits, double lo, double hi, EncodingScheme scheme) {
    if (!(lo < hi)) throw std::domain_error("feature range must satisfy lo < hi");
    FeatureMap map;
    map.n_qubits = n_qubits;
    map.scheme = scheme;
    const double slope = kPi / (hi - lo);
    map.slopes = Eigen::VectorXd::Constant(n_qubits, slope);
    map.offsets = Eigen::VectorXd::Constant(n_qubits, -lo * slope);
    return map;
}

FeatureMap FeatureMap::min_max(const Eigen::MatrixXd& features, EncodingScheme scheme) {
    const Eigen::Index p = features.cols();
    if (p < 1) throw std::invalid_argument("min-max map needs at least one feature column");
    FeatureMap map;
    map.n_qubits = static_cast<int>(p);
    map.scheme = scheme;
    map.offsets.resize(p);
    map.slopes.resize(p);
    for (Eigen::Index j = 0; j < p; ++j) {
        const double lo = features.col(j).minCoeff();
        const double hi = features.col(j).maxCoeff();
        if (hi - lo < 1e-12) {
            // constant column: park it mid-range
            map.slopes(j) = 0.0;
            map.offsets(j) = kPi / 2.0;
        } else {
            map.slopes(j) = kPi / (hi - lo);
            map.offsets(j) = -lo * map.slopes(j);
        }
    }
    return map;
}

QuantumState encode(const FeatureMap& map, const Eigen::VectorXd& x) {
    const Eigen::Index p = map.offsets.size();
    if (map.scheme == EncodingScheme::Angle && x.size() != map.n_qubits) {
        throw std::invalid_argument("angle encoding expects one feature per qubit");
    }
    if (x.size() < 1 || x.size() > std::max<Eigen::Index>(p, map.n_qubits)) {
        throw std::invalid_argument("feature vector does not fit the map");
    }
    QuantumState state = prepare_basis(map.n_qubits, 0);
    for (int q = 0; q < map.n_qubits; ++q) {
        const int j = feature_index(map, q, x.size());
        const double angle = map.offsets(j % p) + map.slopes(j % p) * x(j);
        if (angle < -kAngleTol || angle > kPi + kAngleTol) {
            throw std::invalid_argument("scaled feature angle " + std::to_string(angle) +
                                        " falls outside [0, pi]");
        }
        state = apply_gate(state, GateOp::ry(angle, q));
    }
    return state;
}

QuantumState apply_ansatz(const QuantumState& state, const Ansatz& ansatz,
                          const Eigen::VectorXd& theta) {
    if (ansatz.layers < 1) throw std::domain_error("ansatz needs at least one layer");
    if (theta.size() != ansatz.parameter_count()) {
        throw std::invalid_argument("parameter vector length must be 2 * qubits * layers");
    }
    QuantumState out = state;
    int k = 0;
    for (int layer = 0; layer < ansatz.layers; ++layer) {
        for (int q = 0; q < ansatz.n_qubits; ++q) {
            out = apply_gate(out, GateOp::ry(theta(k++), q));
            out = apply_gate(out, GateOp::rz(theta(k++), q));
        }
        if (ansatz.n_qubits >= 2) {
            for (int q = 0; q < ansatz.n_qubits; ++q) {
                out = apply_gate(out, GateOp::cnot(q, (q + 1) % ansatz.n_qubits));
            }
        }
    }
    return out;
}

double model_output(const FeatureMap& map, const Ansatz& ansatz,
                    const Eigen::VectorXd& theta, const Eigen::VectorXd& x) {
    QuantumState psi = apply_ansatz(encode(map, x), ansatz, theta);
    return expectation(psi, Observable::pauli_z(0));
}

double model_output(const Ansatz& ansatz, const Eigen::VectorXd& theta) {
    QuantumState psi = apply_ansatz(prepare_basis(ansatz.n_qubits, 0), ansatz, theta);
    return expectation(psi, Observable::pauli_z(0));
}

int predict_label(const FeatureMap& map, const Ansatz& ansatz,
                  const Eigen::VectorXd& theta, const Eigen::VectorXd& x) {
    return model_output(map, ansatz, theta, x) >= 0.0 ? 1 : -1;
}

double parameter_shift_grad(const FeatureMap& map, const Ansatz& ansatz,
                            const Eigen::VectorXd& theta, const Eigen::VectorXd& x,
                            int index) {
    if (index < 0 || index >= ansatz.parameter_count()) {
        throw std::domain_error("parameter index out of range");
    }
    Eigen::VectorXd shifted = theta;
    shifted(index) = theta(index) + kPi / 2.0;
    const double plus = model_output(map, ansatz, shifted, x);
    shifted(index) = theta(index) - kPi / 2.0;
    const double minus = model_output(map, ansatz, shifted, x);
    return 0.5 * (plus - minus);
}

GradientEstimate full_gradient(const FeatureMap& map, const Ansatz& ansatz,
                               const Eigen::VectorXd& theta, const TrainingSet& batch,
                               LossKind loss, GradientMethod method) {
    if (batch.size() < 1) throw std::invalid_argument("gradient needs a nonempty batch");
    const int m = ansatz.parameter_count();
    const Eigen::Index n = batch.size();

    GradientEstimate grad;
    grad.partials = Eigen::VectorXd::Zero(m);
    grad.method = method == GradientMethod::ParameterShift ? "parameter-shift" : "finite-difference";

    for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::VectorXd x = batch.features.row(i).transpose();
        const int y = batch.labels(i);
        const double f = model_output(map, ansatz, theta, x);
        const double slope = loss_slope(loss, f, y);
        for (int j = 0; j < m; ++j) {
            double df = 0.0;
            if (method == GradientMethod::ParameterShift) {
                Eigen::VectorXd shifted = theta;
                shifted(j) = theta(j) + kPi / 2.0;
                const double plus = model_output(map, ansatz, shifted, x);
                ++grad.circuit_evaluations;
                shifted(j) = theta(j) - kPi / 2.0;
                const double minus = model_output(map, ansatz, shifted, x);
                ++grad.circuit_evaluations;
                df = 0.5 * (plus - minus);
            } else {
                Eigen::VectorXd shifted = theta;
                shifted(j) = theta(j) + kFiniteDifferenceStep;
                const double plus = model_output(map, ansatz, shifted, x);
                ++grad.circuit_evaluations;
                shifted(j) = theta(j) - kFiniteDifferenceStep;
                const double minus = model_output(map, ansatz, shifted, x);
                ++grad.circuit_evaluations;
                df = (plus - minus) / (2.0 * kFiniteDifferenceStep);
            }
            grad.partials(j) += slope * df / double(n);
        }
    }
    for (int j = 0; j < m; ++j) {
        if (!std::isfinite(grad.partials(j))) {
            throw std::runtime_error("non-finite gradient component");
        }
    }
    return grad;
}

TrainResult train(const TrainingSet& data, const FeatureMap& map, const Ansatz& ansatz,
                  const TrainConfig& config) {
    validate_training_set(data);
    if (!(config.learning_rate > 0.0)) throw std::domain_error("learning rate must be positive");
    if (config.epochs < 0) throw std::domain_error("epoch count cannot be negative");

    const int m = ansatz.parameter_count();
    std::mt19937_64 rng(config.seed);
    Eigen::VectorXd theta(m);
    if (config.init == InitScheme::Uniform) {
        std::uniform_real_distribution<double> uni(0.0, 2.0 * kPi);
        for (int j = 0; j < m; ++j) theta(j) = uni(rng);
    } else {
        std::normal_distribution<double> small(0.0, 0.1);
        for (int j = 0; j < m; ++j) theta(j) = small(rng);
    }

    auto batch_metrics = [&](const Eigen::VectorXd& th, double& loss_out, double& err_out) {
        double loss_acc = 0.0;
        int wrong = 0;
        for (Eigen::Index i = 0; i < data.size(); ++i) {
            const Eigen::VectorXd x = data.features.row(i).transpose();
            const double f = model_output(map, ansatz, th, x);
            loss_acc += loss_value(config.loss, f, data.labels(i));
            const int label = f >= 0.0 ? 1 : -1;
            if (label != data.labels(i)) ++wrong;
        }
        loss_out = loss_acc / double(data.size());
        err_out = double(wrong) / double(data.size());
    };

    TrainResult result;
    result.losses.reserve(config.epochs + 1);
    result.train_errors.reserve(config.epochs + 1);

    double loss = 0.0, err = 0.0;
    batch_metrics(theta, loss, err);
    result.losses.push_back(loss);
    result.train_errors.push_back(err);

    for (int epoch = 1; epoch <= config.epochs; ++epoch) {
        GradientEstimate grad = full_gradient(map, ansatz, theta, data, config.loss, config.gradient);
        theta -= config.learning_rate * grad.partials;
        batch_metrics(theta, loss, err);
        if (!std::isfinite(loss)) {
            throw divergence_error("training loss became non-finite", epoch);
        }
        result.losses.push_back(loss);
        result.train_errors.push_back(err);
    }
    result.theta = theta;
    return result;
}

std::vector<BarrenRow> barren_diagnostic(const std::vector<int>& qubit_range, int layers,
                                         int samples, std::uint64_t seed) {
    if (samples < 100) throw std::domain_error("variance estimate needs at least 100 samples");
    if (layers < 1) throw std::domain_error("diagnostic needs at least one layer");

    std::vector<BarrenRow> rows;
    for (int n : qubit_range) {
        Ansatz ansatz{n, layers};
        const int m = ansatz.parameter_count();
        std::mt19937_64 rng(seed + std::uint64_t(n)); // per-width stream, reproducible
        std::uniform_real_distribution<double> uni(0.0, 2.0 * kPi);

        double sum = 0.0, sum_sq = 0.0;
        Eigen::VectorXd theta(m);
        for (int s = 0; s < samples; ++s) {
            for (int j = 0; j < m; ++j) theta(j) = uni(rng);
            Eigen::VectorXd plus = theta, minus = theta;
            plus(0) += kPi / 2.0;
            minus(0) -= kPi / 2.0;
            const double g = 0.5 * (model_output(ansatz, plus) - model_output(ansatz, minus));
            sum += g;
            sum_sq += g * g;
        }
        const double mean = sum / double(samples);
        BarrenRow row;
        row.n_qubits = n;
        row.layers = layers;
        row.grad_variance = std::max(0.0, sum_sq / double(samples) - mean * mean);
        rows.push_back(row);
    }
    return rows;
}

void save_parameters(const std::string& path, const Ansatz& ansatz,
                     const Eigen::VectorXd& theta) {
    if (theta.size() != ansatz.parameter_count()) {
        throw std::invalid_argument("parameter vector does not match the ansatz");
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write parameter file: " + path);
    out << ansatz.n_qubits << "\n" << ansatz.layers << "\n";
    out.precision(17);
    for (Eigen::Index j = 0; j < theta.size(); ++j) out << theta(j) << "\n";
}

SavedParameters load_parameters(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read parameter file: " + path);
    SavedParameters saved;
    if (!(in >> saved.ansatz.n_qubits >> saved.ansatz.layers)) {
        throw data_format_error("parameter file needs n_qubits and layers header lines", 1);
    }
    const int m = saved.ansatz.parameter_count();
    saved.theta.resize(m);
    for (int j = 0; j < m; ++j) {
        if (!(in >> saved.theta(j))) {
            throw data_format_error("parameter file ended before " + std::to_string(m) +
                                    " values were read", 2 + j);
        }
    }
    return saved;
}

} // namespace qsl::vqc
