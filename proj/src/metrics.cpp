#include "flowfw/metrics.hpp"

#include <cmath>

#include "flowfw/errors.hpp"

namespace flowfw {

GroundTruth GroundTruth::build(std::vector<PathVertex> paths, std::vector<double> weights,
                               std::size_t edge_count) {
    require_length(weights.size(), paths.size(), "GroundTruth");
    GroundTruth t;
    t.true_flow.assign(edge_count, 0.0);
    for (std::size_t k = 0; k < paths.size(); ++k) {
        if (!(weights[k] > 0.0)) throw InvalidArgument("ground-truth weights must be positive");
        for (EdgeId e : paths[k].edges) {
            if (e < 0 || static_cast<std::size_t>(e) >= edge_count) {
                throw GraphMismatchError("ground-truth path uses an edge outside the graph");
            }
            t.true_flow[static_cast<std::size_t>(e)] += weights[k];
        }
    }
    t.paths = std::move(paths);
    t.weights = std::move(weights);
    return t;
}

Decomposition GroundTruth::as_decomposition() const {
    return Decomposition::build(paths, weights, true_flow.size());
}

namespace {

// Weight of the path with node sequence `nodes` in (paths, weights), or -1.
double weight_of(const std::vector<PathVertex>& paths, const std::vector<double>& weights,
                 const std::vector<NodeId>& nodes) {
    for (std::size_t k = 0; k < paths.size(); ++k) {
        if (paths[k].nodes == nodes) return weights[k];
    }
    return -1.0;
}

void check_same_graph(const Decomposition& s, const GroundTruth& t) {
    if (s.reconstruction.size() != t.true_flow.size()) {
        throw GraphMismatchError("solution and ground truth are over different graphs");
    }
}

}  // namespace

std::size_t path_error(const Decomposition& solution, const GroundTruth& truth, PathErrorMode mode) {
    check_same_graph(solution, truth);
    std::size_t errors = 0;
    for (std::size_t k = 0; k < solution.paths.size(); ++k) {
        const double w = weight_of(truth.paths, truth.weights, solution.paths[k].nodes);
        if (w < 0.0 || std::abs(w - solution.weights[k]) > kWeightTolerance) ++errors;
    }
    if (mode == PathErrorMode::Symmetric) {
        for (const auto& p : truth.paths) {
            if (weight_of(solution.paths, solution.weights, p.nodes) < 0.0) ++errors;
        }
    }
    return errors;
}

double flow_error(const Decomposition& solution, const GroundTruth& truth) {
    check_same_graph(solution, truth);
    double s = 0.0;
    for (std::size_t e = 0; e < truth.true_flow.size(); ++e) {
        const double diff = solution.reconstruction[e] - truth.true_flow[e];
        s += diff * diff;
    }
    return std::sqrt(s);
}

double relative_flow_error(const Decomposition& solution, const GroundTruth& truth, const FlowGraph& g) {
    if (truth.true_flow.size() != g.edge_count()) {
        throw GraphMismatchError("ground truth does not match the graph");
    }
    return flow_error(solution, truth) / static_cast<double>(g.edge_count());
}

double shifted_geomean(std::span<const double> values, double shift) {
    if (values.empty()) throw EmptyListError("shifted_geomean of an empty list");
    if (!(shift > 0.0)) throw InvalidArgument("shifted_geomean: shift must be positive");
    double s = 0.0;
    for (double v : values) {
        if (!(v >= 0.0)) throw InvalidArgument("shifted_geomean: values must be nonnegative");
        s += std::log(v + shift);
    }
    return std::exp(s / static_cast<double>(values.size())) - shift;
}

double arithmetic_mean(std::span<const double> values) {
    if (values.empty()) throw EmptyListError("mean of an empty list");
    double s = 0.0;
    for (double v : values) s += v;
    return s / static_cast<double>(values.size());
}

}  // namespace flowfw
