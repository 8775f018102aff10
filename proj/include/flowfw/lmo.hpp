#pragma once

#include <optional>
#include <span>
#include <vector>

#include "flowfw/graph.hpp"

namespace flowfw {

// An s-t path, stored both as its node sequence and its (sorted) edge indices.
// Path identity is the edge list.
struct PathVertex {
    std::vector<NodeId> nodes;
    std::vector<EdgeId> edges;

    // Builds the path from a node sequence; throws PathValidationError if a
    // consecutive pair is not an edge or the endpoints are not source/sink.
    static PathVertex from_nodes(const FlowGraph& g, std::vector<NodeId> nodes);

    std::vector<double> incidence(std::size_t edge_count, double scale = 1.0) const;
    double cost(std::span<const double> costs) const;

    friend bool operator==(const PathVertex& a, const PathVertex& b) { return a.edges == b.edges; }
};

// Either scale * incidence(path), or the origin.
struct ScaledVertex {
    std::optional<PathVertex> path;
    double scale = 1.0;

    static ScaledVertex origin() { return ScaledVertex{std::nullopt, 0.0}; }
    static ScaledVertex of(PathVertex p, double scale) { return ScaledVertex{std::move(p), scale}; }

    bool is_origin() const noexcept { return !path.has_value(); }
    std::vector<double> dense(std::size_t edge_count) const;
    // <vertex, v>
    double inner(std::span<const double> v) const;

    friend bool operator==(const ScaledVertex& a, const ScaledVertex& b) {
        if (a.is_origin() || b.is_origin()) return a.is_origin() == b.is_origin();
        return a.scale == b.scale && *a.path == *b.path;
    }
};

// Minimum-cost s-t path by dynamic programming over the topological order.
// Costs may be negative. On equal cost at a node the incoming edge with the
// smaller index wins.
PathVertex shortest_path_lmo(const FlowGraph& g, std::span<const double> costs);

// LMO over scale * conv(paths U {0}): the shortest path if its scaled cost is
// <= 0, the origin otherwise.
ScaledVertex scaled_lmo(const FlowGraph& g, std::span<const double> costs, double scale);

}  // namespace flowfw
