#pragma once

#include <span>
#include <vector>

#include "flowfw/active_set.hpp"
#include "flowfw/loss.hpp"

namespace flowfw {

// Paths with positive conic weights and their dense reconstruction.
struct Decomposition {
    std::vector<PathVertex> paths;
    std::vector<double> weights;
    std::vector<double> reconstruction;

    // Drops nonpositive weights, merges duplicate paths and computes the
    // reconstruction over `edge_count` edges.
    static Decomposition build(std::vector<PathVertex> paths, std::vector<double> weights,
                               std::size_t edge_count);

    std::size_t size() const noexcept { return paths.size(); }
    bool has_integer_weights() const;
};

// argmin_{alpha >= 0} ||alpha x - r||^2 = max(0, <x,r>/||x||^2).
double optimal_cone_scale(std::span<const double> x, std::span<const double> r);

// Rescales the active-set weights by the optimal cone scale of its iterate and
// rounds them half-to-even; paths rounding to zero are dropped.
Decomposition integral_decomposition(const ActiveSet& s, std::span<const double> r);

// Reconstruction equals r exactly when r is integral, within 1e-9 otherwise.
bool exact_match(const Decomposition& d, std::span<const double> r);

// Real-valued conic weights: alpha* lambda_k for least squares, scale *
// lambda_k for Poisson atoms (origin discarded). Weights below 1e-9 dropped.
Decomposition conic_decomposition(const ActiveSet& s, std::span<const double> r, LossKind kind);

}  // namespace flowfw
