// Piecewise-linear function fitting through per-interval 2x2 linear systems.
// Each block is solved both classically (oracle) and through the quantum
// solver; evaluation runs a swap test between the coefficient state and the
// encoded query point and back-transforms the ancilla probability.

#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "qsl/hhl.hpp"
#include "qsl/state.hpp"

namespace qsl::qspline {

struct KnotGrid {
    std::vector<double> knots; // strictly increasing, at least two
    int interval_count() const { return static_cast<int>(knots.size()) - 1; }
};

/// K+1 equally spaced knots over [lo, hi].
KnotGrid build_grid(double lo, double hi, int intervals);

/// Affine codomain map scaled = mul * f + add used to bring targets into
/// [0, 1]; identity for the shipped targets, which are defined pre-scaled.
struct AffineMap {
    double mul = 1.0;
    double add = 0.0;
    double apply(double y) const { return mul * y + add; }
    double invert(double y) const { return (y - add) / mul; }
};

struct TargetFunction {
    std::string name;
    std::function<double(double)> fn; // value before codomain scaling
    AffineMap codomain;               // brings fn into [0, 1]
};

/// Registry lookup: sigmoid | tanh01 | relu01 | sin01 (relu01 is normalized
/// by the upper range bound). Throws std::invalid_argument listing the
/// registry for unknown names.
TargetFunction target_by_name(const std::string& name, double lo, double hi);
std::vector<std::string> target_names();

struct SplineBlock {
    Eigen::Matrix2d design;           // rows [1, knot] at the interval ends
    Eigen::Vector2d targets;          // scaled function values at the ends
    Eigen::Vector2d beta_classical;   // elimination oracle
    QuantumState beta_state;          // quantum coefficient state
    double beta_norm = 0.0;           // classical rescale factor ||beta||
    bool degenerate = false;          // all-zero targets: solved classically as zero
    double fidelity = 1.0;            // quantum vs classical coefficient fidelity
};

struct QSplineModel {
    KnotGrid grid;
    std::vector<SplineBlock> blocks;
    std::string target_name;
    AffineMap codomain_scale;
};

/// Design matrix and scaled targets for one interval.
SplineBlock assemble_block(const TargetFunction& f, double lo, double hi);

/// Per-block classical coefficients (the oracle path of fit).
std::vector<Eigen::Vector2d> classical_spline_fit(const TargetFunction& f, const KnotGrid& grid);

/// Fits every block through the quantum solver (dilated 2x2 systems); the
/// evolution time and rotation constant are re-derived per block from
/// config.clock_qubits since each block has its own spectrum.
QSplineModel fit(const TargetFunction& f, const KnotGrid& grid, const hhl::HHLConfig& config);

struct SplineEval {
    double value = 0.0;        // final estimate, codomain map inverted
    double raw_overlap = 0.0;  // sqrt(2 p0 - 1), always in [0, 1]
    double p0 = 0.5;           // swap-test ancilla probability
    int block = 0;
};

/// Quantum evaluation at x (must lie inside the grid range; no clamping).
SplineEval evaluate_detailed(const QSplineModel& model, double x);
double evaluate(const QSplineModel& model, double x);

/// Classical piecewise prediction from the oracle coefficients, same
/// codomain inversion as evaluate.
double classical_predict(const QSplineModel& model, double x);

} // namespace qsl::qspline
