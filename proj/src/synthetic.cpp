#include "flowfw/synthetic.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "flowfw/errors.hpp"
#include "flowfw/perturb.hpp"

namespace flowfw::synthetic {

namespace {

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

FlowGraph random_dag(int nodes, int extra_edges, std::uint64_t seed) {
    if (nodes < 2) throw InvalidArgument("random_dag needs at least 2 nodes");
    std::mt19937_64 rng(mix64(seed));
    const int n = nodes;
    std::set<std::pair<NodeId, NodeId>> seen;
    std::vector<Edge> edges;
    auto add = [&](NodeId a, NodeId b) {
        if (seen.insert({a, b}).second) edges.push_back(Edge{a, b});
    };
    if (n == 2) {
        add(0, 1);
    }
    for (NodeId u = 1; u + 1 < n; ++u) {
        add(static_cast<NodeId>(uniform_int(rng, 0, u - 1)), u);
        add(u, static_cast<NodeId>(uniform_int(rng, u + 1, n - 1)));
    }
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    for (int k = 0; k < extra_edges && static_cast<long long>(edges.size()) < max_edges; ++k) {
        for (int attempt = 0; attempt < 64; ++attempt) {
            NodeId a = static_cast<NodeId>(uniform_int(rng, 0, n - 2));
            NodeId b = static_cast<NodeId>(uniform_int(rng, a + 1, n - 1));
            if (a == 0 && b == n - 1 && n > 2) continue;  // keep a direct s-t edge out
            if (seen.insert({a, b}).second) {
                edges.push_back(Edge{a, b});
                break;
            }
        }
    }
    return build_dag(n, edges);
}

Instance random_instance(const InstanceSpec& spec, std::uint64_t seed, std::string id) {
    if (spec.nodes < 3 || spec.paths < 1 || spec.max_weight < 1 || spec.extra_edges < 0) {
        throw InvalidArgument("random_instance: invalid spec");
    }
    FlowGraph g = random_dag(spec.nodes, spec.extra_edges, seed);
    std::mt19937_64 rng(mix64(seed ^ 0x5DEECE66DULL));
    std::vector<PathVertex> paths;
    std::vector<double> weights;
    for (int k = 0; k < spec.paths; ++k) {
        for (int attempt = 0; attempt < 16; ++attempt) {
            std::vector<NodeId> nodes{g.source()};
            while (nodes.back() != g.sink()) {
                auto out = g.out_edges(nodes.back());
                EdgeId e = out[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(out.size()) - 1))];
                nodes.push_back(g.edge(e).head);
            }
            PathVertex p = PathVertex::from_nodes(g, std::move(nodes));
            if (std::find(paths.begin(), paths.end(), p) == paths.end()) {
                paths.push_back(std::move(p));
                weights.push_back(uniform_int(rng, 1, spec.max_weight));
                break;
            }
        }
    }
    GroundTruth truth = GroundTruth::build(std::move(paths), std::move(weights), g.edge_count());
    return Instance{std::move(id), std::move(g), std::move(truth)};
}

std::vector<Instance> random_suite(int count, const InstanceSpec& small, const InstanceSpec& large,
                                   std::uint64_t seed) {
    std::mt19937_64 rng(mix64(seed));
    std::vector<Instance> out;
    out.reserve(static_cast<std::size_t>(std::max(count, 0)));
    for (int i = 0; i < count; ++i) {
        InstanceSpec s;
        s.nodes = uniform_int(rng, small.nodes, large.nodes);
        s.extra_edges = uniform_int(rng, small.extra_edges, large.extra_edges);
        s.paths = uniform_int(rng, small.paths, large.paths);
        s.max_weight = uniform_int(rng, small.max_weight, large.max_weight);
        out.push_back(random_instance(s, rng(), std::to_string(i)));
    }
    return out;
}

}  // namespace flowfw::synthetic
