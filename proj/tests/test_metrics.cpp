#include "doctest.h"

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "flowfw/errors.hpp"
#include "flowfw/metrics.hpp"

using namespace flowfw;

namespace {

Decomposition two_paths(const FlowGraph& g) {
    return Decomposition::build({fixtures::path(g, {0, 1, 3, 4, 5}), fixtures::path(g, {0, 2, 3, 5})}, {1, 2},
                                g.edge_count());
}

GroundTruth three_paths(const FlowGraph& g) {
    return GroundTruth::build(
        {fixtures::path(g, {0, 1, 3, 5}), fixtures::path(g, {0, 2, 3, 5}), fixtures::path(g, {0, 2, 3, 4, 5})},
        {1, 1, 1}, g.edge_count());
}

}  // namespace

TEST_CASE("path and flow error on the two equivalent splice-graph decompositions") {
    auto g = fixtures::figure1();
    auto sol = two_paths(g);
    auto truth = three_paths(g);
    CHECK(truth.true_flow == fixtures::figure1_flow());
    CHECK(path_error(sol, truth) == 4);
    CHECK(path_error(sol, truth, PathErrorMode::OneSided) == 2);
    CHECK(flow_error(sol, truth) == 0.0);
    CHECK(relative_flow_error(sol, truth, g) == 0.0);
}

TEST_CASE("identical decompositions have zero error") {
    auto g = fixtures::figure1();
    auto truth = three_paths(g);
    auto sol = truth.as_decomposition();
    CHECK(path_error(sol, truth) == 0);
    CHECK(flow_error(sol, truth) == 0.0);

    auto changed = sol;
    changed.weights[1] = 1.5;
    CHECK(path_error(changed, truth) == 1);
    changed.weights[1] = 1.0 + 1e-7;  // within the weight tolerance
    CHECK(path_error(changed, truth) == 0);
}

TEST_CASE("flow error of a shifted reconstruction") {
    auto g = fixtures::figure1();
    auto truth = three_paths(g);
    auto sol = truth.as_decomposition();
    sol.reconstruction[0] += 1.0;
    sol.reconstruction[4] += 1.0;
    CHECK(flow_error(sol, truth) == doctest::Approx(std::sqrt(2.0)));
    CHECK(relative_flow_error(sol, truth, g) == doctest::Approx(std::sqrt(2.0) / 7.0));

    auto other = Decomposition::build({}, {}, 3);
    CHECK_THROWS_AS(flow_error(other, truth), GraphMismatchError);
    CHECK_THROWS_AS(path_error(other, truth), GraphMismatchError);
}

TEST_CASE("path error is symmetric") {
    auto g = fixtures::figure1();
    const std::vector<std::vector<NodeId>> all{{0, 1, 3, 4, 5}, {0, 1, 3, 5}, {0, 2, 3, 4, 5}, {0, 2, 3, 5}};
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<int> w(0, 2);
    for (int i = 0; i < 100; ++i) {
        std::vector<PathVertex> pa, pb;
        std::vector<double> wa, wb;
        for (const auto& nodes : all) {
            if (int x = w(rng)) { pa.push_back(fixtures::path(g, nodes)); wa.push_back(x); }
            if (int y = w(rng)) { pb.push_back(fixtures::path(g, nodes)); wb.push_back(y); }
        }
        auto a = Decomposition::build(pa, wa, 7);
        auto b = Decomposition::build(pb, wb, 7);
        auto ta = GroundTruth::build(pa, wa, 7);
        auto tb = GroundTruth::build(pb, wb, 7);
        CHECK(path_error(a, tb) == path_error(b, ta));
        if (path_error(a, tb) == 0) CHECK(flow_error(a, tb) == 0.0);
    }
}

TEST_CASE("shifted geometric mean") {
    const std::vector<double> zeros{0, 0, 0};
    CHECK(shifted_geomean(zeros) == 0.0);
    const std::vector<double> one{4.25};
    CHECK(shifted_geomean(one) == doctest::Approx(4.25).epsilon(1e-14));
    const std::vector<double> pair{1, 3};
    CHECK(std::abs(shifted_geomean(pair) - (std::sqrt(8.0) - 1.0)) <= 1e-12);
    CHECK_THROWS_AS(shifted_geomean(std::vector<double>{}), EmptyListError);

    std::mt19937_64 rng(53);
    for (int i = 0; i < 200; ++i) {
        auto v = fixtures::random_vector(rng, 5, 0.0, 100.0);
        const double s = shifted_geomean(v);
        CHECK(s >= *std::min_element(v.begin(), v.end()) - 1e-9);
        CHECK(s <= *std::max_element(v.begin(), v.end()) + 1e-9);
        auto bigger = v;
        bigger[2] += 1.0;
        CHECK(shifted_geomean(bigger) > s);
    }
    CHECK(arithmetic_mean(pair) == 2.0);
}
