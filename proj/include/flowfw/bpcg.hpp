#pragma once

#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "flowfw/active_set.hpp"
#include "flowfw/graph.hpp"
#include "flowfw/loss.hpp"

namespace flowfw {

enum class PoissonScaleMode {
    SourceOutflow,  // M = total observed flow leaving the source
    MaxEdgeFlow,    // M = ||r||_inf
};

enum class Termination { GapConverged, EarlyExactMatch, IterationLimit, TimeLimit };

std::string_view to_string(Termination t);

struct SolverConfig {
    int max_iterations = 5000;
    double gap_tolerance = 1e-10;
    double time_limit_seconds = 1800.0;
    // Stop as soon as the rounded conic weights reproduce r (least squares only).
    bool early_termination = false;
    LossKind loss_kind = LossKind::LeastSquares;
    PoissonScaleMode poisson_scale_mode = PoissonScaleMode::SourceOutflow;
    double poisson_epsilon = PoissonLoss::kDefaultEpsilon;

    void validate() const;
};

struct SolverReport {
    int iterations = 0;
    Termination termination = Termination::IterationLimit;
    // primal_trace[0] is f(x_0); primal_trace[t + 1] follows iteration t.
    std::vector<double> primal_trace;
    std::vector<double> gap_trace;
    double wall_time_seconds = 0.0;
    std::size_t final_active_set_size = 0;
};

enum class StepKind { Pairwise, FrankWolfe, None };

// Per-iteration snapshot handed to an optional observer, after the update.
struct IterationInfo {
    int iteration;
    StepKind step;
    double gamma;
    double gamma_max;
    double gap;
    const ScaledVertex* fw_vertex;    // v_t
    const ScaledVertex* away_vertex;  // a_t (pairwise steps)
};

using IterationObserver = std::function<void(const IterationInfo&, const ActiveSet&)>;

struct SolveResult {
    ActiveSet active_set;
    SolverReport report;
    double scale = 1.0;  // atom scale M (1 for least squares)
};

// Scale of the Poisson feasible set for the given mode.
double poisson_scale(const FlowGraph& g, std::span<const double> r, PoissonScaleMode mode);

// <gradient, x - v>
double fw_gap(std::span<const double> gradient, std::span<const double> x, std::span<const double> v);

// Blended pairwise conditional gradient over the path polytope (least squares)
// or the scaled, origin-augmented path polytope (Poisson).
SolveResult solve(const FlowGraph& g, std::span<const double> r, const SolverConfig& config,
                  const IterationObserver& observer = {});

}  // namespace flowfw
