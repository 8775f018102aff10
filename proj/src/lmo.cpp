#include "flowfw/lmo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "flowfw/errors.hpp"

namespace flowfw {

PathVertex PathVertex::from_nodes(const FlowGraph& g, std::vector<NodeId> nodes) {
    if (nodes.size() < 2 || nodes.front() != g.source() || nodes.back() != g.sink()) {
        throw PathValidationError("path must run from the source to the sink");
    }
    PathVertex p;
    p.edges.reserve(nodes.size() - 1);
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        EdgeId e = g.find_edge(nodes[i], nodes[i + 1]);
        if (e < 0) {
            throw PathValidationError("no edge (" + std::to_string(nodes[i]) + ", " +
                                      std::to_string(nodes[i + 1]) + ")");
        }
        p.edges.push_back(e);
    }
    std::sort(p.edges.begin(), p.edges.end());
    p.nodes = std::move(nodes);
    return p;
}

std::vector<double> PathVertex::incidence(std::size_t edge_count, double scale) const {
    std::vector<double> v(edge_count, 0.0);
    for (EdgeId e : edges) v[static_cast<std::size_t>(e)] = scale;
    return v;
}

double PathVertex::cost(std::span<const double> costs) const {
    double c = 0.0;
    for (EdgeId e : edges) c += costs[static_cast<std::size_t>(e)];
    return c;
}

std::vector<double> ScaledVertex::dense(std::size_t edge_count) const {
    if (is_origin()) return std::vector<double>(edge_count, 0.0);
    return path->incidence(edge_count, scale);
}

double ScaledVertex::inner(std::span<const double> v) const {
    return is_origin() ? 0.0 : scale * path->cost(v);
}

PathVertex shortest_path_lmo(const FlowGraph& g, std::span<const double> costs) {
    require_length(costs.size(), g.edge_count(), "shortest_path_lmo");
    for (double c : costs) {
        if (!std::isfinite(c)) throw InvalidArgument("shortest_path_lmo: non-finite cost");
    }
    const auto n = static_cast<std::size_t>(g.node_count());
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    std::vector<EdgeId> pred(n, -1);
    dist[static_cast<std::size_t>(g.source())] = 0.0;
    for (NodeId u : g.topo_order()) {
        auto ui = static_cast<std::size_t>(u);
        for (EdgeId e : g.in_edges(u)) {  // ascending index
            double cand = dist[static_cast<std::size_t>(g.edge(e).tail)] + costs[static_cast<std::size_t>(e)];
            if (cand < dist[ui]) {
                dist[ui] = cand;
                pred[ui] = e;
            }
        }
    }
    PathVertex p;
    NodeId u = g.sink();
    p.nodes.push_back(u);
    while (u != g.source()) {
        EdgeId e = pred[static_cast<std::size_t>(u)];
        p.edges.push_back(e);
        u = g.edge(e).tail;
        p.nodes.push_back(u);
    }
    std::reverse(p.nodes.begin(), p.nodes.end());
    std::sort(p.edges.begin(), p.edges.end());
    return p;
}

ScaledVertex scaled_lmo(const FlowGraph& g, std::span<const double> costs, double scale) {
    if (!(scale > 0.0)) throw InvalidArgument("scaled_lmo: scale must be positive");
    PathVertex p = shortest_path_lmo(g, costs);
    if (scale * p.cost(costs) <= 0.0) return ScaledVertex::of(std::move(p), scale);
    return ScaledVertex::origin();
}

}  // namespace flowfw
