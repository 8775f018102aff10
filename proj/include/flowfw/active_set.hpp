#pragma once

#include <span>
#include <utility>
#include <vector>

#include "flowfw/lmo.hpp"

namespace flowfw {

// Convex combination of distinct atoms together with the cached iterate
// sum_k weights_k * atom_k.
class ActiveSet {
public:
    ActiveSet() = default;
    explicit ActiveSet(std::size_t edge_count) : iterate_(edge_count, 0.0) {}

    std::size_t size() const noexcept { return atoms_.size(); }
    bool empty() const noexcept { return atoms_.empty(); }
    std::size_t edge_count() const noexcept { return iterate_.size(); }

    const std::vector<ScaledVertex>& atoms() const noexcept { return atoms_; }
    const std::vector<double>& weights() const noexcept { return weights_; }
    const std::vector<double>& iterate() const noexcept { return iterate_; }
    const ScaledVertex& atom(std::size_t k) const { return atoms_[k]; }
    double weight(std::size_t k) const { return weights_[k]; }

    // Index of an atom equal to v, or -1.
    std::ptrdiff_t find(const ScaledVertex& v) const;

    // Adds w to v's weight (appending v if absent) and updates the iterate.
    void add(const ScaledVertex& v, double w);
    // Moves weight gamma from atom `from` to atom `to`; removes `from` when it
    // empties (drop step).
    void transfer(std::size_t from, std::size_t to, double gamma, bool drop);
    // Scales every weight by (1 - gamma) and adds gamma to v.
    void blend_toward(const ScaledVertex& v, double gamma);
    // S <- {v} with weight 1.
    void reset_to(const ScaledVertex& v);

    void remove(std::size_t k);
    void renormalize();
    // Recomputes the iterate from atoms and weights.
    void resync_iterate();

private:
    void accumulate(const ScaledVertex& v, double w);

    std::vector<ScaledVertex> atoms_;
    std::vector<double> weights_;
    std::vector<double> iterate_;
};

// Indices of the atoms with the largest (away) and smallest (local) inner
// product against the gradient, lowest index on ties.
struct ActiveExtremes {
    std::size_t away;
    std::size_t local;
};
ActiveExtremes active_set_extremes(const ActiveSet& s, std::span<const double> gradient);

}  // namespace flowfw
