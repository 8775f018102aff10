#include "flowfw/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <string>

#include "flowfw/errors.hpp"

namespace flowfw {

EdgeId FlowGraph::find_edge(NodeId tail, NodeId head) const {
    if (tail < 0 || tail >= node_count_) return -1;
    for (EdgeId e : out_edges(tail)) {
        if (edge(e).head == head) return e;
    }
    return -1;
}

namespace {

std::vector<bool> reachable(NodeId start, const std::vector<std::vector<EdgeId>>& adj,
                            const std::vector<Edge>& edges, bool forward) {
    std::vector<bool> seen(adj.size(), false);
    std::vector<NodeId> stack{start};
    seen[static_cast<std::size_t>(start)] = true;
    while (!stack.empty()) {
        NodeId u = stack.back();
        stack.pop_back();
        for (EdgeId e : adj[static_cast<std::size_t>(u)]) {
            const Edge& ed = edges[static_cast<std::size_t>(e)];
            NodeId w = forward ? ed.head : ed.tail;
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

}  // namespace

FlowGraph build_dag(NodeId node_count, std::span<const Edge> edges) {
    if (node_count < 2) {
        throw StructureError("graph needs at least a source and a sink (got " +
                             std::to_string(node_count) + " nodes)");
    }
    FlowGraph g;
    g.node_count_ = node_count;
    g.edges_.assign(edges.begin(), edges.end());
    const auto n = static_cast<std::size_t>(node_count);
    g.in_.assign(n, {});
    g.out_.assign(n, {});

    std::set<std::pair<NodeId, NodeId>> seen;
    for (std::size_t i = 0; i < g.edges_.size(); ++i) {
        const Edge& e = g.edges_[i];
        if (e.tail < 0 || e.tail >= node_count || e.head < 0 || e.head >= node_count) {
            throw StructureError("edge " + std::to_string(i) + " references a node outside [0, " +
                                 std::to_string(node_count) + ")");
        }
        if (e.tail == e.head) {
            throw CycleError("self-loop on node " + std::to_string(e.tail));
        }
        if (!seen.insert({e.tail, e.head}).second) {
            throw DuplicateEdgeError("repeated edge (" + std::to_string(e.tail) + ", " +
                                     std::to_string(e.head) + ")");
        }
        g.out_[static_cast<std::size_t>(e.tail)].push_back(static_cast<EdgeId>(i));
        g.in_[static_cast<std::size_t>(e.head)].push_back(static_cast<EdgeId>(i));
    }

    // Kahn's algorithm, smallest ready node first for a deterministic order.
    std::vector<std::size_t> indeg(n);
    for (std::size_t u = 0; u < n; ++u) indeg[u] = g.in_[u].size();
    std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
    for (std::size_t u = 0; u < n; ++u) {
        if (indeg[u] == 0) ready.push(static_cast<NodeId>(u));
    }
    while (!ready.empty()) {
        NodeId u = ready.top();
        ready.pop();
        g.topo_order_.push_back(u);
        for (EdgeId e : g.out_[static_cast<std::size_t>(u)]) {
            auto h = static_cast<std::size_t>(g.edges_[static_cast<std::size_t>(e)].head);
            if (--indeg[h] == 0) ready.push(static_cast<NodeId>(h));
        }
    }
    if (g.topo_order_.size() != n) throw CycleError("graph contains a directed cycle");

    if (!g.in_.front().empty()) throw StructureError("source (node 0) has incoming edges");
    if (!g.out_.back().empty()) {
        throw StructureError("sink (node " + std::to_string(node_count - 1) + ") has outgoing edges");
    }
    auto from_source = reachable(g.source(), g.out_, g.edges_, true);
    auto to_sink = reachable(g.sink(), g.in_, g.edges_, false);
    for (std::size_t u = 0; u < n; ++u) {
        if (!from_source[u] || !to_sink[u]) {
            throw StructureError("node " + std::to_string(u) + " is not on any source-sink path");
        }
    }
    return g;
}

std::int64_t cyclomatic_bound(const FlowGraph& g) {
    return static_cast<std::int64_t>(g.edge_count()) - g.node_count() + 2;
}

bool is_flow(const FlowGraph& g, std::span<const double> x, double tol) {
    require_length(x.size(), g.edge_count(), "is_flow");
    for (NodeId u = 1; u + 1 < g.node_count(); ++u) {
        double in = 0.0;
        double out = 0.0;
        for (EdgeId e : g.in_edges(u)) in += x[static_cast<std::size_t>(e)];
        for (EdgeId e : g.out_edges(u)) out += x[static_cast<std::size_t>(e)];
        if (!(std::abs(in - out) <= tol)) return false;
    }
    return true;
}

double source_outflow(const FlowGraph& g, std::span<const double> x) {
    require_length(x.size(), g.edge_count(), "source_outflow");
    double total = 0.0;
    for (EdgeId e : g.out_edges(g.source())) total += x[static_cast<std::size_t>(e)];
    return total;
}

}  // namespace flowfw
