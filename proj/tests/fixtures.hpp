#pragma once

#include <random>
#include <vector>

#include "flowfw/graph.hpp"
#include "flowfw/lmo.hpp"

namespace fixtures {

// Splice graph with exons a..d: s=0, a=1, b=2, c=3, d=4, t=5.
// Edges: s-a, s-b, a-c, b-c, c-d, c-t, d-t.
inline flowfw::FlowGraph figure1() {
    return flowfw::build_dag(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

inline std::vector<double> figure1_flow() { return {1, 2, 1, 2, 1, 2, 1}; }

inline flowfw::PathVertex path(const flowfw::FlowGraph& g, std::vector<flowfw::NodeId> nodes) {
    return flowfw::PathVertex::from_nodes(g, std::move(nodes));
}

inline std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> v(n);
    for (double& x : v) x = u(rng);
    return v;
}

}  // namespace fixtures
