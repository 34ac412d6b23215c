// Experiment runner: one subcommand per study, deterministic CSV output.
// Every file starts with the resolved configuration echoed as '# key = value'
// lines (wall time last, excluded from reproducibility comparisons), then a
// header row and the data rows. Exit codes: 0 success, 1 check failure,
// 2 usage or data error.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qsl/baselines.hpp"
#include "qsl/dataset.hpp"
#include "qsl/errors.hpp"
#include "qsl/hhl.hpp"
#include "qsl/qsplines.hpp"
#include "qsl/qsvm.hpp"
#include "qsl/vqc.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string num(int v) { return std::to_string(v); }
std::string num(long v) { return std::to_string(v); }
std::string num(std::uint64_t v) { return std::to_string(v); }

struct CsvReport {
    std::map<std::string, std::string> config; // echoed sorted
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    bool checks_passed = true;
};

int write_report(const std::string& path, const CsvReport& report, double wall_seconds) {
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot open output file " << path << "\n";
        return kExitUsage;
    }
    for (const auto& [key, value] : report.config) {
        out << "# " << key << " = " << value << "\n";
    }
    out << "# wall_time_seconds = " << num(wall_seconds) << "\n";
    for (std::size_t c = 0; c < report.columns.size(); ++c) {
        out << report.columns[c] << (c + 1 < report.columns.size() ? "," : "\n");
    }
    for (const auto& row : report.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << row[c] << (c + 1 < row.size() ? "," : "\n");
        }
    }
    return report.checks_passed ? kExitOk : kExitCheckFailure;
}

int finish(const std::string& path, CsvReport& report,
           std::chrono::steady_clock::time_point start) {
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const int status = write_report(path, report, wall);
    std::cout << path << ": " << report.rows.size() << " rows, " << num(wall)
              << " s, exit " << status << "\n";
    return status;
}

// ---------------------------------------------------------------------------

int run_hhl(int size, int clock_qubits, int trials, std::uint64_t seed,
            const std::string& out_path) {
    const auto start = std::chrono::steady_clock::now();
    CsvReport report;
    report.config = {{"subcommand", "hhl"},
                     {"size", num(size)},
                     {"clock_qubits", num(clock_qubits)},
                     {"trials", num(trials)},
                     {"seed", num(seed)},
                     {"out", out_path},
                     {"spectrum", "[1, 2]"}};
    report.columns = {"trial", "size", "clock_qubits", "kappa", "fidelity", "success_prob"};

    for (int trial = 0; trial < trials; ++trial) {
        auto sys = qsl::hhl::random_spectrum_system(size, 1.0, 2.0, seed + std::uint64_t(trial));
        auto sol = qsl::hhl::hhl_solve(sys, qsl::hhl::choose_config(sys, clock_qubits));
        if (!std::isfinite(sol.fidelity_vs_classical) || !std::isfinite(sol.success_probability)) {
            report.checks_passed = false;
        }
        report.rows.push_back({num(trial), num(size), num(clock_qubits),
                               num(sys.condition_number), num(sol.fidelity_vs_classical),
                               num(sol.success_probability)});
    }
    return finish(out_path, report, start);
}

int run_qspline(const std::string& function, int knots, double lo, double hi, int probes,
                int clock_qubits, std::uint64_t seed, const std::string& out_path) {
    const auto start = std::chrono::steady_clock::now();
    qsl::qspline::TargetFunction target = qsl::qspline::target_by_name(function, lo, hi);
    qsl::qspline::KnotGrid grid = qsl::qspline::build_grid(lo, hi, knots);
    qsl::hhl::HHLConfig cfg;
    cfg.clock_qubits = clock_qubits;
    qsl::qspline::QSplineModel model = qsl::qspline::fit(target, grid, cfg);

    CsvReport report;
    report.config = {{"subcommand", "qspline"}, {"function", function},
                     {"knots", num(knots)},    {"range_lo", num(lo)},
                     {"range_hi", num(hi)},    {"probe", num(probes)},
                     {"clock_qubits", num(clock_qubits)}, {"seed", num(seed)},
                     {"out", out_path}};
    report.columns = {"x", "true_value", "classical_estimate", "quantum_estimate",
                      "abs_err_quantum"};

    for (int i = 0; i < probes; ++i) {
        const double x =
            probes == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * double(i) / double(probes - 1);
        const double truth = target.codomain.invert(target.codomain.apply(target.fn(x)));
        const double classical = qsl::qspline::classical_predict(model, x);
        qsl::qspline::SplineEval ev = qsl::qspline::evaluate_detailed(model, x);
        if (!(ev.raw_overlap >= 0.0 && ev.raw_overlap <= 1.0) || !std::isfinite(ev.value)) {
            report.checks_passed = false;
        }
        report.rows.push_back({num(x), num(truth), num(classical), num(ev.value),
                               num(std::abs(ev.value - classical))});
    }
    return finish(out_path, report, start);
}

qsl::lssvm::KernelSpec make_kernel(const std::string& kind, double ridge, double gamma,
                                   int degree, double coef0, const qsl::TrainingSet& data) {
    if (kind == "linear") return qsl::lssvm::KernelSpec::linear(ridge);
    if (kind == "poly") return qsl::lssvm::KernelSpec::polynomial(degree, coef0, ridge);
    if (kind == "rbf") return qsl::lssvm::KernelSpec::rbf(gamma, ridge);
    if (kind == "quantum") {
        return qsl::lssvm::KernelSpec::quantum(qsl::vqc::FeatureMap::min_max(data.features),
                                               ridge);
    }
    throw CLI::ValidationError("--kernel", "unknown kernel '" + kind + "'");
}

int run_qsvm(const std::string& data_path, const std::string& kernel_kind, double ridge,
             double gamma, int degree, double coef0, const std::string& solver_kind,
             int clock_qubits, std::uint64_t seed, const std::string& out_path) {
    const auto start = std::chrono::steady_clock::now();
    qsl::LoadedDataset loaded = qsl::load_dataset_csv(data_path);
    for (const std::string& w : loaded.warnings) std::cerr << "warning: " << w << "\n";
    qsl::lssvm::KernelSpec kernel =
        make_kernel(kernel_kind, ridge, gamma, degree, coef0, loaded.data);

    CsvReport report;
    report.config = {{"subcommand", "qsvm"},   {"data", data_path},
                     {"kernel", kernel_kind},  {"ridge", num(ridge)},
                     {"gamma", num(gamma)},    {"degree", num(degree)},
                     {"coef0", num(coef0)},    {"solver", solver_kind},
                     {"clock_qubits", num(clock_qubits)}, {"seed", num(seed)},
                     {"out", out_path}};
    report.columns = {"solver", "w0"};
    for (Eigen::Index i = 0; i < loaded.data.size(); ++i) {
        report.columns.push_back("gamma_" + std::to_string(i));
    }
    report.columns.push_back("train_error");

    std::vector<qsl::lssvm::Solver> solvers;
    if (solver_kind == "classical") solvers = {qsl::lssvm::Solver::Classical};
    else if (solver_kind == "hhl") solvers = {qsl::lssvm::Solver::HHL};
    else if (solver_kind == "both")
        solvers = {qsl::lssvm::Solver::Classical, qsl::lssvm::Solver::HHL};
    else throw CLI::ValidationError("--solver", "expected classical | hhl | both");

    for (qsl::lssvm::Solver solver : solvers) {
        qsl::lssvm::LSSVMModel model =
            qsl::lssvm::train(loaded.data, kernel, solver, clock_qubits);
        std::vector<std::string> row;
        row.push_back(solver == qsl::lssvm::Solver::Classical ? "classical" : "hhl");
        row.push_back(num(model.bias));
        bool finite = std::isfinite(model.bias);
        for (Eigen::Index i = 0; i < model.multipliers.size(); ++i) {
            row.push_back(num(model.multipliers(i)));
            finite = finite && std::isfinite(model.multipliers(i));
        }
        row.push_back(num(qsl::lssvm::training_error(model, loaded.data)));
        if (!finite) report.checks_passed = false;
        report.rows.push_back(std::move(row));
    }
    return finish(out_path, report, start);
}

int run_vqc_train(const std::string& data_path, int qubits, int layers, double lr, int epochs,
                  std::uint64_t seed, const std::string& loss_kind,
                  const std::string& init_kind, const std::string& scheme_kind,
                  const std::string& out_path, const std::string& model_out) {
    const auto start = std::chrono::steady_clock::now();
    qsl::LoadedDataset loaded = qsl::load_dataset_csv(data_path);
    for (const std::string& w : loaded.warnings) std::cerr << "warning: " << w << "\n";

    const int n = qubits > 0 ? qubits : static_cast<int>(loaded.data.feature_count());
    qsl::vqc::EncodingScheme scheme;
    if (scheme_kind == "angle") scheme = qsl::vqc::EncodingScheme::Angle;
    else if (scheme_kind == "repeated") scheme = qsl::vqc::EncodingScheme::RepeatedAngle;
    else throw CLI::ValidationError("--scheme", "expected angle | repeated");

    qsl::vqc::FeatureMap map = qsl::vqc::FeatureMap::min_max(loaded.data.features, scheme);
    map.n_qubits = n;
    qsl::vqc::Ansatz ansatz{n, layers};

    qsl::vqc::TrainConfig cfg;
    cfg.learning_rate = lr;
    cfg.epochs = epochs;
    cfg.seed = seed;
    if (loss_kind == "mse") cfg.loss = qsl::vqc::LossKind::MSE;
    else if (loss_kind == "logistic") cfg.loss = qsl::vqc::LossKind::Logistic;
    else throw CLI::ValidationError("--loss", "expected mse | logistic");
    if (init_kind == "uniform") cfg.init = qsl::vqc::InitScheme::Uniform;
    else if (init_kind == "small") cfg.init = qsl::vqc::InitScheme::Small;
    else throw CLI::ValidationError("--init", "expected uniform | small");

    CsvReport report;
    report.config = {{"subcommand", "vqc-train"}, {"data", data_path},
                     {"qubits", num(n)},          {"layers", num(layers)},
                     {"lr", num(lr)},             {"epochs", num(epochs)},
                     {"seed", num(seed)},         {"loss", loss_kind},
                     {"init", init_kind},         {"scheme", scheme_kind},
                     {"out", out_path}};
    if (!model_out.empty()) report.config.emplace("model_out", model_out);
    report.columns = {"epoch", "loss", "train_error"};

    try {
        qsl::vqc::TrainResult result = qsl::vqc::train(loaded.data, map, ansatz, cfg);
        for (std::size_t e = 0; e < result.losses.size(); ++e) {
            report.rows.push_back({num(long(e)), num(result.losses[e]), num(result.train_errors[e])});
        }
        if (!model_out.empty()) qsl::vqc::save_parameters(model_out, ansatz, result.theta);
    } catch (const qsl::divergence_error& e) {
        std::cerr << "check failure: " << e.what() << " (epoch " << e.epoch << ")\n";
        report.checks_passed = false;
    }
    return finish(out_path, report, start);
}

int run_barren(int qubits_min, int qubits_max, int layers, int samples, std::uint64_t seed,
               const std::string& out_path) {
    const auto start = std::chrono::steady_clock::now();
    if (qubits_min < 1 || qubits_max < qubits_min) {
        throw CLI::ValidationError("--qubits-min/--qubits-max", "need 1 <= min <= max");
    }
    std::vector<int> widths;
    for (int n = qubits_min; n <= qubits_max; ++n) widths.push_back(n);
    auto rows = qsl::vqc::barren_diagnostic(widths, layers, samples, seed);

    CsvReport report;
    report.config = {{"subcommand", "barren"},   {"qubits_min", num(qubits_min)},
                     {"qubits_max", num(qubits_max)}, {"layers", num(layers)},
                     {"samples", num(samples)},  {"seed", num(seed)},
                     {"out", out_path}};
    report.columns = {"n_qubits", "layers", "grad_variance"};
    for (const auto& row : rows) {
        if (!std::isfinite(row.grad_variance) || row.grad_variance < 0.0) {
            report.checks_passed = false;
        }
        report.rows.push_back({num(row.n_qubits), num(row.layers), num(row.grad_variance)});
    }
    return finish(out_path, report, start);
}

int run_kernel_gram(const std::string& data_path, const std::string& kernel_kind, double ridge,
                    double gamma, int degree, double coef0, std::uint64_t seed,
                    const std::string& out_path) {
    const auto start = std::chrono::steady_clock::now();
    qsl::LoadedDataset loaded = qsl::load_dataset_csv(data_path);
    for (const std::string& w : loaded.warnings) std::cerr << "warning: " << w << "\n";
    qsl::lssvm::KernelSpec kernel =
        make_kernel(kernel_kind, ridge, gamma, degree, coef0, loaded.data);
    Eigen::MatrixXd gram = qsl::lssvm::gram_matrix(loaded.data, kernel);

    CsvReport report;
    report.config = {{"subcommand", "kernel-gram"}, {"data", data_path},
                     {"kernel", kernel_kind},       {"ridge", num(ridge)},
                     {"gamma", num(gamma)},         {"degree", num(degree)},
                     {"coef0", num(coef0)},         {"seed", num(seed)},
                     {"out", out_path}};
    for (Eigen::Index j = 0; j < gram.cols(); ++j) {
        report.columns.push_back("k_" + std::to_string(j));
    }
    for (Eigen::Index i = 0; i < gram.rows(); ++i) {
        std::vector<std::string> row;
        for (Eigen::Index j = 0; j < gram.cols(); ++j) {
            if (!std::isfinite(gram(i, j))) report.checks_passed = false;
            row.push_back(num(gram(i, j)));
        }
        report.rows.push_back(std::move(row));
    }
    return finish(out_path, report, start);
}

} // namespace

// Config files hold `key = value` lines ('#' starts a comment) where each
// key is a long option of the chosen subcommand. Command-line flags win:
// file entries are injected only for options absent from the command line.
std::vector<std::string> apply_config_file(const std::vector<std::string>& args) {
    std::vector<std::string> out;
    std::string config_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw CLI::ValidationError("--config", "expects a file path");
            config_path = args[++i];
        } else {
            out.push_back(args[i]);
        }
    }
    if (config_path.empty()) return out;

    std::ifstream in(config_path);
    if (!in) throw CLI::ValidationError("--config", "cannot open file " + config_path);

    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };

    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw CLI::ValidationError("--config", "expected 'key = value', got '" + line + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw CLI::ValidationError("--config", "empty key in config file");

        const std::string flag = "--" + key;
        if (std::find(out.begin(), out.end(), flag) != out.end()) continue; // flag overrides
        out.push_back(flag);
        std::stringstream values(value);
        std::string word;
        while (values >> word) out.push_back(word);
    }
    return out;
}

int main(int argc, char** argv) {
    CLI::App app{"quantum supervised-learning experiment runner"};
    app.require_subcommand(1);

    std::uint64_t seed = 42;

    // --- hhl ----------------------------------------------------------------
    auto* hhl_cmd = app.add_subcommand("hhl", "random Hermitian solves: quantum vs classical");
    int hhl_size = 4, hhl_clock = 7, hhl_trials = 20;
    std::string hhl_out;
    hhl_cmd->add_option("--size", hhl_size, "system dimension")
        ->check(CLI::IsMember({2, 4, 8, 16}));
    hhl_cmd->add_option("--clock-qubits", hhl_clock)->check(CLI::Range(1, 14));
    hhl_cmd->add_option("--trials", hhl_trials)->check(CLI::PositiveNumber);
    hhl_cmd->add_option("--seed", seed);
    hhl_cmd->add_option("--out", hhl_out, "output CSV path")->required();
    hhl_cmd->add_option("--config")
        ->description("key = value file; command-line flags take precedence");

    // --- qspline ------------------------------------------------------------
    auto* spline_cmd = app.add_subcommand("qspline", "quantum spline fit and probe sweep");
    std::string spline_fn = "sigmoid", spline_out;
    int spline_knots = 20, spline_probe = 200, spline_clock = 12;
    std::vector<double> spline_range{-10.0, 10.0};
    spline_cmd->add_option("--function", spline_fn, "target name (sigmoid | tanh01 | relu01 | sin01)");
    spline_cmd->add_option("--knots", spline_knots, "interval count")->check(CLI::PositiveNumber);
    spline_cmd->add_option("--range", spline_range, "LO HI")->expected(2);
    spline_cmd->add_option("--probe", spline_probe, "probe point count")->check(CLI::PositiveNumber);
    spline_cmd->add_option("--clock-qubits", spline_clock)->check(CLI::Range(1, 14));
    spline_cmd->add_option("--seed", seed);
    spline_cmd->add_option("--out", spline_out)->required();
    spline_cmd->add_option("--config")
        ->description("key = value file; command-line flags take precedence");

    // --- qsvm ---------------------------------------------------------------
    auto* qsvm_cmd = app.add_subcommand("qsvm", "least-squares SVM on a CSV dataset");
    std::string qsvm_data, qsvm_kernel = "linear", qsvm_solver = "both", qsvm_out;
    double qsvm_ridge = 1e-3, qsvm_gamma = 1.0, qsvm_coef0 = 1.0;
    int qsvm_degree = 2, qsvm_clock = 0;
    qsvm_cmd->add_option("--data", qsvm_data, "dataset CSV")->required();
    qsvm_cmd->add_option("--kernel", qsvm_kernel, "linear | poly | rbf | quantum");
    qsvm_cmd->add_option("--ridge", qsvm_ridge);
    qsvm_cmd->add_option("--gamma", qsvm_gamma, "rbf width");
    qsvm_cmd->add_option("--degree", qsvm_degree, "polynomial degree");
    qsvm_cmd->add_option("--coef0", qsvm_coef0, "polynomial offset");
    qsvm_cmd->add_option("--solver", qsvm_solver, "classical | hhl | both");
    qsvm_cmd->add_option("--clock-qubits", qsvm_clock, "0 = derive from conditioning");
    qsvm_cmd->add_option("--seed", seed);
    qsvm_cmd->add_option("--out", qsvm_out)->required();
    qsvm_cmd->add_option("--config")
        ->description("key = value file; command-line flags take precedence");

    // --- vqc-train ----------------------------------------------------------
    auto* vqc_cmd = app.add_subcommand("vqc-train", "variational classifier training loop");
    std::string vqc_data, vqc_loss = "mse", vqc_init = "uniform", vqc_scheme = "angle";
    std::string vqc_out, vqc_model_out;
    int vqc_qubits = 0, vqc_layers = 2, vqc_epochs = 200;
    double vqc_lr = 0.1;
    vqc_cmd->add_option("--data", vqc_data)->required();
    vqc_cmd->add_option("--qubits", vqc_qubits, "0 = one per feature");
    vqc_cmd->add_option("--layers", vqc_layers)->check(CLI::PositiveNumber);
    vqc_cmd->add_option("--lr", vqc_lr)->check(CLI::PositiveNumber);
    vqc_cmd->add_option("--epochs", vqc_epochs)->check(CLI::NonNegativeNumber);
    vqc_cmd->add_option("--seed", seed);
    vqc_cmd->add_option("--loss", vqc_loss, "mse | logistic");
    vqc_cmd->add_option("--init", vqc_init, "uniform | small");
    vqc_cmd->add_option("--scheme", vqc_scheme, "angle | repeated");
    vqc_cmd->add_option("--out", vqc_out)->required();
    vqc_cmd->add_option("--model-out", vqc_model_out, "persist trained parameters");
    vqc_cmd->add_option("--config")
        ->description("key = value file; command-line flags take precedence");

    // --- barren -------------------------------------------------------------
    auto* barren_cmd = app.add_subcommand("barren", "gradient-variance sweep over qubit counts");
    int barren_min = 2, barren_max = 8, barren_layers = 20, barren_samples = 200;
    std::string barren_out;
    barren_cmd->add_option("--qubits-min", barren_min);
    barren_cmd->add_option("--qubits-max", barren_max);
    barren_cmd->add_option("--layers", barren_layers)->check(CLI::PositiveNumber);
    barren_cmd->add_option("--samples", barren_samples)->check(CLI::PositiveNumber);
    barren_cmd->add_option("--seed", seed);
    barren_cmd->add_option("--out", barren_out)->required();
    barren_cmd->add_option("--config")
        ->description("key = value file; command-line flags take precedence");

    // --- kernel-gram ----------------------------------------------------------
    auto* gram_cmd = app.add_subcommand("kernel-gram", "export the full Gram matrix");
    std::string gram_data, gram_kernel = "quantum", gram_out;
    double gram_ridge = 0.0, gram_gamma = 1.0, gram_coef0 = 1.0;
    int gram_degree = 2;
    gram_cmd->add_option("--data", gram_data)->required();
    gram_cmd->add_option("--kernel", gram_kernel, "linear | poly | rbf | quantum");
    gram_cmd->add_option("--ridge", gram_ridge);
    gram_cmd->add_option("--gamma", gram_gamma);
    gram_cmd->add_option("--degree", gram_degree);
    gram_cmd->add_option("--coef0", gram_coef0);
    gram_cmd->add_option("--seed", seed);
    gram_cmd->add_option("--out", gram_out)->required();
    gram_cmd->add_option("--config")
        ->description("key = value file; command-line flags take precedence");

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        args = apply_config_file(args);
        std::reverse(args.begin(), args.end()); // CLI11 consumes back-to-front
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (hhl_cmd->parsed()) return run_hhl(hhl_size, hhl_clock, hhl_trials, seed, hhl_out);
        if (spline_cmd->parsed()) {
            return run_qspline(spline_fn, spline_knots, spline_range[0], spline_range[1],
                               spline_probe, spline_clock, seed, spline_out);
        }
        if (qsvm_cmd->parsed()) {
            return run_qsvm(qsvm_data, qsvm_kernel, qsvm_ridge, qsvm_gamma, qsvm_degree,
                            qsvm_coef0, qsvm_solver, qsvm_clock, seed, qsvm_out);
        }
        if (vqc_cmd->parsed()) {
            return run_vqc_train(vqc_data, vqc_qubits, vqc_layers, vqc_lr, vqc_epochs, seed,
                                 vqc_loss, vqc_init, vqc_scheme, vqc_out, vqc_model_out);
        }
        if (barren_cmd->parsed()) {
            return run_barren(barren_min, barren_max, barren_layers, barren_samples, seed,
                              barren_out);
        }
        if (gram_cmd->parsed()) {
            return run_kernel_gram(gram_data, gram_kernel, gram_ridge, gram_gamma, gram_degree,
                                   gram_coef0, seed, gram_out);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qsl::data_format_error& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "check failure: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitUsage;
}
