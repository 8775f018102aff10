#pragma once

#include <span>
#include <string>
#include <vector>

#include "flowfw/decompose.hpp"
#include "flowfw/graph.hpp"

namespace flowfw {

// Reference decomposition shipped with an instance.
struct GroundTruth {
    std::vector<PathVertex> paths;
    std::vector<double> weights;
    std::vector<double> true_flow;

    static GroundTruth build(std::vector<PathVertex> paths, std::vector<double> weights,
                             std::size_t edge_count);
    Decomposition as_decomposition() const;
};

enum class PathErrorMode { Symmetric, OneSided };

inline constexpr double kWeightTolerance = 1e-6;

// Solution paths whose weight differs from the truth weight of the same node
// sequence (absent counts as different); the symmetric mode also counts truth
// paths missing from the solution.
std::size_t path_error(const Decomposition& solution, const GroundTruth& truth,
                       PathErrorMode mode = PathErrorMode::Symmetric);

// ||reconstruction - true_flow||_2
double flow_error(const Decomposition& solution, const GroundTruth& truth);

double relative_flow_error(const Decomposition& solution, const GroundTruth& truth, const FlowGraph& g);

// exp(mean(log(v + shift))) - shift
double shifted_geomean(std::span<const double> values, double shift = 1.0);

double arithmetic_mean(std::span<const double> values);

}  // namespace flowfw
