#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace flowfw {

using NodeId = std::int32_t;
using EdgeId = std::int32_t;

struct Edge {
    NodeId tail;
    NodeId head;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable, validated DAG. Node 0 is the source and node n-1 the sink; edge
// indices follow construction order and index every flow/gradient vector.
class FlowGraph {
public:
    NodeId node_count() const noexcept { return node_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    NodeId source() const noexcept { return 0; }
    NodeId sink() const noexcept { return node_count_ - 1; }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
    const std::vector<NodeId>& topo_order() const noexcept { return topo_order_; }

    // Incident edge indices, ascending.
    std::span<const EdgeId> in_edges(NodeId u) const { return in_[static_cast<std::size_t>(u)]; }
    std::span<const EdgeId> out_edges(NodeId u) const { return out_[static_cast<std::size_t>(u)]; }

    // Edge index for (tail, head), or -1.
    EdgeId find_edge(NodeId tail, NodeId head) const;

    friend bool operator==(const FlowGraph& a, const FlowGraph& b) {
        return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
    }

private:
    friend FlowGraph build_dag(NodeId, std::span<const Edge>);

    NodeId node_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<NodeId> topo_order_;
    std::vector<std::vector<EdgeId>> in_;
    std::vector<std::vector<EdgeId>> out_;
};

// Throws CycleError, StructureError or DuplicateEdgeError.
FlowGraph build_dag(NodeId node_count, std::span<const Edge> edges);

inline FlowGraph build_dag(NodeId node_count, std::initializer_list<Edge> edges) {
    return build_dag(node_count, std::span<const Edge>(edges.begin(), edges.size()));
}

// Upper bound |E| - |V| + 2 on the number of paths needed to decompose a flow.
std::int64_t cyclomatic_bound(const FlowGraph& g);

// True iff every node other than source and sink conserves flow within tol.
bool is_flow(const FlowGraph& g, std::span<const double> x, double tol);

// Total value on the source's outgoing edges.
double source_outflow(const FlowGraph& g, std::span<const double> x);

}  // namespace flowfw
