#pragma once

#include <optional>
#include <span>
#include <vector>

#include "flowfw/decompose.hpp"
#include "flowfw/graph.hpp"
#include "flowfw/lmo.hpp"

// Brute-force references for small graphs. They enumerate paths explicitly and
// share no code with the solver beyond the graph and path types.
namespace flowfw::oracle {

inline constexpr std::size_t kDefaultPathCap = 10'000;
inline constexpr double kSearchBudget = 1e8;

// All s-t paths, lexicographic by node sequence. Throws PathExplosionError
// when more than `cap` paths exist.
std::vector<PathVertex> enumerate_paths(const FlowGraph& g, std::size_t cap = kDefaultPathCap);

struct ReferenceSolution {
    double value;  // least-squares objective at `weights`
    double gap;    // simplex Frank-Wolfe gap at `weights`, bounds value - f*
    std::vector<PathVertex> paths;
    std::vector<double> weights;  // convex weights over `paths`
};

// Minimizes the least-squares objective over the simplex of enumerated paths
// with accelerated projected gradient, until the simplex gap is <= 1e-13.
ReferenceSolution reference_ls_solution(const FlowGraph& g, std::span<const double> r,
                                        std::size_t cap = kDefaultPathCap);

inline double reference_ls_optimum(const FlowGraph& g, std::span<const double> r,
                                   std::size_t cap = kDefaultPathCap) {
    return reference_ls_solution(g, r, cap).value;
}

// Sparsest decomposition of an integral r with integer weights in
// [1, max_weight], or nullopt. Throws SearchSpaceError when the number of
// weight vectors over the candidate paths exceeds 1e8.
std::optional<Decomposition> brute_force_integral_decomposition(const FlowGraph& g, std::span<const double> r,
                                                                int max_weight,
                                                                std::size_t cap = kDefaultPathCap);

}  // namespace flowfw::oracle
