#include "qsl/qsplines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qsl/errors.hpp"
#include "qsl/linalg.hpp"
#include "qsl/measure.hpp"

namespace qsl::qspline {

KnotGrid build_grid(double lo, double hi, int intervals) {
    if (!(lo < hi)) throw std::domain_error("grid bounds must satisfy lo < hi");
    if (intervals < 1) throw std::domain_error("grid needs at least one interval");
    KnotGrid grid;
    grid.knots.resize(intervals + 1);
    for (int i = 0; i <= intervals; ++i) {
        grid.knots[i] = lo + (hi - lo) * double(i) / double(intervals);
    }
    grid.knots.back() = hi;
    return grid;
}

TargetFunction target_by_name(const std::string& name, double lo, double hi) {
    (void)lo;
    if (name == "sigmoid") {
        return {name, [](double x) { return 1.0 / (1.0 + std::exp(-x)); }, {}};
    }
    if (name == "tanh01") {
        return {name, [](double x) { return 0.5 * (std::tanh(x) + 1.0); }, {}};
    }
    if (name == "relu01") {
        const double denom = hi > 0.0 ? hi : 1.0;
        return {name, [denom](double x) { return std::max(0.0, x) / denom; }, {}};
    }
    if (name == "sin01") {
        return {name, [](double x) { return 0.5 * (std::sin(x) + 1.0); }, {}};
    }
    std::string known;
    for (const auto& n : target_names()) known += (known.empty() ? "" : " | ") + n;
    throw std::invalid_argument("unknown target function '" + name + "' (registry: " + known + ")");
}

std::vector<std::string> target_names() { return {"sigmoid", "tanh01", "relu01", "sin01"}; }

SplineBlock assemble_block(const TargetFunction& f, double lo, double hi) {
    if (lo == hi) throw std::domain_error("interval endpoints must be distinct");
    SplineBlock block;
    block.design << 1.0, lo, 1.0, hi;
    const double y0 = f.codomain.apply(f.fn(lo));
    const double y1 = f.codomain.apply(f.fn(hi));
    if (!std::isfinite(y0) || !std::isfinite(y1)) {
        throw std::domain_error("target function is undefined at an interval endpoint");
    }
    block.targets << y0, y1;
    return block;
}

namespace {

Eigen::Vector2d solve_block(const SplineBlock& block) {
    Eigen::VectorXd x = solve_gaussian(Eigen::MatrixXd(block.design),
                                       Eigen::VectorXd(block.targets));
    return x;
}

int locate_interval(const KnotGrid& grid, double x) {
    const auto& k = grid.knots;
    if (x < k.front() || x > k.back()) {
        throw std::domain_error("query point lies outside the knot range (no extrapolation)");
    }
    // knots belong to the interval on their right, except the last knot
    auto it = std::upper_bound(k.begin(), k.end(), x);
    int idx = static_cast<int>(it - k.begin()) - 1;
    return std::min(idx, grid.interval_count() - 1);
}

} // namespace

std::vector<Eigen::Vector2d> classical_spline_fit(const TargetFunction& f, const KnotGrid& grid) {
    std::vector<Eigen::Vector2d> coeffs;
    for (int k = 0; k < grid.interval_count(); ++k) {
        SplineBlock block = assemble_block(f, grid.knots[k], grid.knots[k + 1]);
        if (block.targets.norm() < 1e-300) {
            coeffs.emplace_back(Eigen::Vector2d::Zero());
        } else {
            coeffs.push_back(solve_block(block));
        }
    }
    return coeffs;
}

QSplineModel fit(const TargetFunction& f, const KnotGrid& grid, const hhl::HHLConfig& config) {
    QSplineModel model;
    model.grid = grid;
    model.target_name = f.name;
    model.codomain_scale = f.codomain;

    for (int k = 0; k < grid.interval_count(); ++k) {
        SplineBlock block = assemble_block(f, grid.knots[k], grid.knots[k + 1]);
        if (block.targets.norm() < 1e-300) {
            // Zero targets cannot be amplitude-encoded; the solution is zero.
            block.degenerate = true;
            block.beta_classical.setZero();
            block.beta_state = prepare_basis(1, 0);
            block.beta_norm = 0.0;
            model.blocks.push_back(std::move(block));
            continue;
        }
        block.beta_classical = solve_block(block);

        hhl::HermitianSystem sys = hhl::make_hermitian(
            block.design.cast<cd>(), block.targets.cast<cd>());
        hhl::HHLConfig cfg = hhl::choose_config(sys, config.clock_qubits);
        cfg.tolerance = config.tolerance;
        hhl::HHLSolution sol = hhl::hhl_solve(sys, cfg);

        // The dilated solution is [0, beta]; slice the lower block.
        QuantumState beta = make_zero_state(1);
        beta.amplitudes[0] = sol.state.amplitudes[sys.solution_offset];
        beta.amplitudes[1] = sol.state.amplitudes[sys.solution_offset + 1];
        normalize(beta);
        block.beta_state = std::move(beta);
        block.beta_norm = sol.norm_estimate;

        Eigen::VectorXcd beta_ref = block.beta_classical.cast<cd>();
        block.fidelity = hhl::fidelity(block.beta_state, beta_ref);
        model.blocks.push_back(std::move(block));
    }
    return model;
}

SplineEval evaluate_detailed(const QSplineModel& model, double x) {
    SplineEval out;
    out.block = locate_interval(model.grid, x);
    const SplineBlock& block = model.blocks[out.block];
    if (block.degenerate) {
        out.value = model.codomain_scale.invert(0.0);
        return out;
    }

    EncodedVector query = amplitude_encode(std::vector<double>{1.0, x});
    out.p0 = swap_test(block.beta_state, query.state);

    // |<beta|x>| = sqrt(2 p0 - 1); residuals below double resolution are
    // genuine zero overlaps, not signal.
    double overlap_sq = 2.0 * out.p0 - 1.0;
    out.raw_overlap = overlap_sq < 1e-14 ? 0.0 : std::sqrt(overlap_sq);

    const double scaled = out.raw_overlap * block.beta_norm * query.norm;
    out.value = model.codomain_scale.invert(scaled);
    return out;
}

double evaluate(const QSplineModel& model, double x) {
    return evaluate_detailed(model, x).value;
}

double classical_predict(const QSplineModel& model, double x) {
    int k = locate_interval(model.grid, x);
    const Eigen::Vector2d& beta = model.blocks[k].beta_classical;
    return model.codomain_scale.invert(beta(0) + beta(1) * x);
}

} // namespace qsl::qspline
