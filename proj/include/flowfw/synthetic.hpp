#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flowfw/graph.hpp"
#include "flowfw/metrics.hpp"

// Seeded random instances: a DAG plus a ground-truth path decomposition whose
// flow is the (noiseless) observation.
namespace flowfw::synthetic {

struct InstanceSpec {
    int nodes = 10;       // including source and sink, >= 3
    int extra_edges = 4;  // forward edges beyond the spanning ones
    int paths = 3;        // ground-truth paths (distinct paths, may end up fewer)
    int max_weight = 10;  // weights drawn uniformly from [1, max_weight]
};

struct Instance {
    std::string id;
    FlowGraph graph;
    GroundTruth truth;
};

// Every node gets an in-edge from an earlier node and an out-edge to a later
// node, so all nodes lie on some s-t path; extra edges are random forward
// pairs. Truth paths are random walks from the source.
Instance random_instance(const InstanceSpec& spec, std::uint64_t seed, std::string id = "0");

// Random DAG only.
FlowGraph random_dag(int nodes, int extra_edges, std::uint64_t seed);

// `count` instances with sizes drawn between `small` and `large`.
std::vector<Instance> random_suite(int count, const InstanceSpec& small, const InstanceSpec& large,
                                   std::uint64_t seed);

}  // namespace flowfw::synthetic
