#include "flowfw/bpcg.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>

#include "flowfw/decompose.hpp"
#include "flowfw/errors.hpp"
#include "flowfw/vec.hpp"

namespace flowfw {

std::string_view to_string(Termination t) {
    switch (t) {
        case Termination::GapConverged: return "GapConverged";
        case Termination::EarlyExactMatch: return "EarlyExactMatch";
        case Termination::IterationLimit: return "IterationLimit";
        case Termination::TimeLimit: return "TimeLimit";
    }
    return "Unknown";
}

void SolverConfig::validate() const {
    if (max_iterations < 1) throw ConfigError("max_iterations must be >= 1");
    if (!(gap_tolerance >= 0.0)) throw ConfigError("gap_tolerance must be >= 0");
    if (!(time_limit_seconds > 0.0)) throw ConfigError("time_limit_seconds must be > 0");
    if (!(poisson_epsilon > 0.0)) throw ConfigError("poisson_epsilon must be > 0");
    if (early_termination && loss_kind != LossKind::LeastSquares) {
        throw ConfigError("early termination is only defined for the least-squares loss");
    }
}

double poisson_scale(const FlowGraph& g, std::span<const double> r, PoissonScaleMode mode) {
    require_length(r.size(), g.edge_count(), "poisson_scale");
    const double max_edge = vec::max_abs(r);
    if (mode == PoissonScaleMode::MaxEdgeFlow) return max_edge;
    const double outflow = source_outflow(g, r);
    // Noisy data may leave the source edges empty; fall back to the largest edge.
    return outflow > 0.0 ? outflow : max_edge;
}

double fw_gap(std::span<const double> gradient, std::span<const double> x, std::span<const double> v) {
    require_length(x.size(), gradient.size(), "fw_gap");
    require_length(v.size(), gradient.size(), "fw_gap");
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += gradient[i] * (x[i] - v[i]);
    return s;
}

namespace {

constexpr int kResyncPeriod = 100;

// Greedy edge cover: repeatedly route a path through the lowest-index edge
// with the smallest coverage count, preferring little-covered edges elsewhere.
std::vector<PathVertex> covering_paths(const FlowGraph& g) {
    const std::size_t m = g.edge_count();
    std::vector<double> coverage(m, 0.0);
    std::vector<PathVertex> paths;
    for (;;) {
        std::size_t target = m;
        for (std::size_t e = 0; e < m; ++e) {
            if (coverage[e] == 0.0) {
                target = e;
                break;
            }
        }
        if (target == m) break;
        std::vector<double> costs = coverage;
        double others = 0.0;
        for (double c : coverage) others += c;
        costs[target] = -(others + 1.0);  // forces the path through `target`
        PathVertex p = shortest_path_lmo(g, costs);
        for (EdgeId e : p.edges) coverage[static_cast<std::size_t>(e)] += 1.0;
        paths.push_back(std::move(p));
    }
    return paths;
}

}  // namespace

SolveResult solve(const FlowGraph& g, std::span<const double> r, const SolverConfig& config,
                  const IterationObserver& observer) {
    config.validate();
    require_length(r.size(), g.edge_count(), "solve");
    const auto start = std::chrono::steady_clock::now();
    const std::size_t m = g.edge_count();
    const bool poisson = config.loss_kind == LossKind::Poisson;

    std::unique_ptr<Objective> loss;
    if (poisson) {
        loss = std::make_unique<PoissonLoss>(g, r, config.poisson_epsilon);
    } else {
        loss = std::make_unique<LeastSquaresLoss>(std::vector<double>(r.begin(), r.end()));
    }
    if (!(vec::norm_sq(r) > 0.0)) throw InvalidArgument("solve: reference flow is identically zero");

    SolveResult result{ActiveSet(m), {}, 1.0};
    ActiveSet& active = result.active_set;
    SolverReport& report = result.report;

    if (poisson) {
        result.scale = poisson_scale(g, r, config.poisson_scale_mode);
        auto cover = covering_paths(g);
        const double w = 1.0 / static_cast<double>(cover.size());
        for (auto& p : cover) active.add(ScaledVertex::of(std::move(p), result.scale), w);
    } else {
        active.add(ScaledVertex::of(shortest_path_lmo(g, std::vector<double>(m, 1.0)), 1.0), 1.0);
    }
    const double scale = result.scale;

    auto lmo = [&](std::span<const double> grad) {
        if (poisson) return scaled_lmo(g, grad, scale);
        return ScaledVertex::of(shortest_path_lmo(g, grad), 1.0);
    };
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    report.primal_trace.push_back(loss->value(active.iterate()));
    report.termination = Termination::IterationLimit;

    for (int t = 0; t < config.max_iterations; ++t) {
        if (config.early_termination && exact_match(integral_decomposition(active, r), r)) {
            report.termination = Termination::EarlyExactMatch;
            break;
        }
        if (elapsed() >= config.time_limit_seconds) {
            report.termination = Termination::TimeLimit;
            break;
        }

        const std::vector<double>& x = active.iterate();
        const std::vector<double> grad = loss->gradient(x);
        const ScaledVertex v = lmo(grad);
        const auto [away, local] = active_set_extremes(active, grad);
        const double grad_x = vec::dot(grad, x);
        const double gap = grad_x - v.inner(grad);
        report.gap_trace.push_back(gap);
        ++report.iterations;

        IterationInfo info{t, StepKind::None, 0.0, 0.0, gap, &v, nullptr};
        if (gap <= config.gap_tolerance) {
            report.termination = Termination::GapConverged;
            report.primal_trace.push_back(report.primal_trace.back());
            if (observer) observer(info, active);
            break;
        }

        const double pairwise_gap = active.atom(away).inner(grad) - active.atom(local).inner(grad);
        ScaledVertex away_atom;
        if (away != local && pairwise_gap >= gap) {
            away_atom = active.atom(away);
            std::vector<double> d = active.atom(away).dense(m);
            vec::axpy(-1.0, active.atom(local).dense(m), d);
            const double gamma_max = active.weight(away);
            const double gamma = loss->step_size(x, d, gamma_max);
            active.transfer(away, local, gamma, gamma >= gamma_max);
            info.step = StepKind::Pairwise;
            info.gamma = gamma;
            info.gamma_max = gamma_max;
            info.away_vertex = &away_atom;
        } else {
            std::vector<double> d(x.begin(), x.end());
            vec::axpy(-1.0, v.dense(m), d);
            const double gamma = loss->step_size(x, d, 1.0);
            if (gamma >= 1.0) {
                active.reset_to(v);
            } else if (gamma > 0.0) {
                active.blend_toward(v, gamma);
            }
            info.step = StepKind::FrankWolfe;
            info.gamma = gamma;
            info.gamma_max = 1.0;
        }
        active.renormalize();
        if ((t + 1) % kResyncPeriod == 0) active.resync_iterate();
        if (poisson) {
            // Round-off can leave tiny negative coordinates on edges the
            // active set no longer covers.
            bool negative = false;
            for (double xe : active.iterate()) negative = negative || xe < 0.0;
            if (negative) active.resync_iterate();
        }
        report.primal_trace.push_back(loss->value(active.iterate()));
        if (observer) observer(info, active);
    }

    active.renormalize();
    active.resync_iterate();
    report.final_active_set_size = active.size();
    report.wall_time_seconds = elapsed();
    return result;
}

}  // namespace flowfw
