#include "doctest.h"

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "flowfw/errors.hpp"
#include "flowfw/graph.hpp"
#include "flowfw/oracle.hpp"
#include "flowfw/synthetic.hpp"

using namespace flowfw;

TEST_CASE("build_dag accepts the smallest DAG") {
    auto g = build_dag(2, {{0, 1}});
    CHECK(g.edge_count() == 1);
    CHECK(g.topo_order() == std::vector<NodeId>{0, 1});
    CHECK(cyclomatic_bound(g) == 1);
}

TEST_CASE("build_dag accepts the splice graph example") {
    auto g = fixtures::figure1();
    CHECK(g.node_count() == 6);
    CHECK(g.edge_count() == 7);
    CHECK(cyclomatic_bound(g) == 3);
    CHECK(g.find_edge(3, 4) == 4);
    CHECK(g.find_edge(4, 3) == -1);
}

TEST_CASE("build_dag rejects malformed graphs") {
    CHECK_THROWS_AS(build_dag(3, {{0, 1}, {1, 0}, {1, 2}}), CycleError);
    CHECK_THROWS_AS(build_dag(3, {{0, 1}, {1, 1}, {1, 2}}), CycleError);
    CHECK_THROWS_AS(build_dag(3, {{0, 1}, {0, 1}, {1, 2}}), DuplicateEdgeError);
    CHECK_THROWS_AS(build_dag(3, {{0, 1}, {1, 3}}), StructureError);
    CHECK_THROWS_AS(build_dag(1, std::initializer_list<Edge>{}), StructureError);
    // Node 2 is a dead end.
    CHECK_THROWS_AS(build_dag(4, {{0, 1}, {1, 3}, {1, 2}}), StructureError);
    // Node 1 unreachable from the source.
    CHECK_THROWS_AS(build_dag(3, {{0, 2}, {1, 2}}), StructureError);
    // Sink with an out-edge (creates no cycle but breaks the convention).
    CHECK_THROWS_AS(build_dag(3, {{0, 2}, {2, 1}}), StructureError);
}

TEST_CASE("diamond bound") {
    auto g = build_dag(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(cyclomatic_bound(g) == 2);
}

TEST_CASE("is_flow") {
    auto g = fixtures::figure1();
    CHECK(is_flow(g, fixtures::figure1_flow(), 0.0));
    // Unit flow on every edge also conserves at a, b, c, d.
    CHECK(is_flow(g, std::vector<double>(7, 1.0), 0.0));
    auto bumped = fixtures::figure1_flow();
    bumped[2] += 1.0;
    CHECK_FALSE(is_flow(g, bumped, 0.0));
    CHECK(is_flow(g, bumped, 1.0));
    CHECK_THROWS_AS(is_flow(g, std::vector<double>(6, 0.0), 0.0), DimensionError);
}

TEST_CASE("random DAGs: topological order and path sums conserve flow") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = synthetic::random_dag(3 + trial % 10, trial % 7, 100 + static_cast<std::uint64_t>(trial));
        std::vector<std::size_t> pos(static_cast<std::size_t>(g.node_count()));
        auto order = g.topo_order();
        REQUIRE(order.size() == static_cast<std::size_t>(g.node_count()));
        for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = i;
        std::vector<NodeId> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) CHECK(sorted[i] == static_cast<NodeId>(i));
        for (const auto& e : g.edges()) {
            CHECK(pos[static_cast<std::size_t>(e.tail)] < pos[static_cast<std::size_t>(e.head)]);
        }
        CHECK(cyclomatic_bound(g) >= 1);

        auto paths = oracle::enumerate_paths(g);
        std::vector<double> x(g.edge_count(), 0.0);
        std::uniform_real_distribution<double> w(0.0, 5.0);
        for (const auto& p : paths) {
            const double wk = w(rng);
            for (EdgeId e : p.edges) x[static_cast<std::size_t>(e)] += wk;
        }
        CHECK(is_flow(g, x, 1e-9));
    }
}
