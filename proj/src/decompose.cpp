#include "flowfw/decompose.hpp"

#include <cmath>

#include "flowfw/errors.hpp"
#include "flowfw/vec.hpp"

namespace flowfw {

namespace {

bool all_integral(std::span<const double> v) {
    for (double x : v) {
        if (x != std::nearbyint(x)) return false;
    }
    return true;
}

constexpr double kMinConicWeight = 1e-9;

}  // namespace

Decomposition Decomposition::build(std::vector<PathVertex> paths, std::vector<double> weights,
                                   std::size_t edge_count) {
    require_length(weights.size(), paths.size(), "Decomposition");
    Decomposition d;
    d.reconstruction.assign(edge_count, 0.0);
    for (std::size_t k = 0; k < paths.size(); ++k) {
        if (!(weights[k] > 0.0)) continue;
        for (EdgeId e : paths[k].edges) {
            if (e < 0 || static_cast<std::size_t>(e) >= edge_count) {
                throw DimensionError("Decomposition: path edge outside the graph");
            }
        }
        std::size_t j = 0;
        while (j < d.paths.size() && !(d.paths[j] == paths[k])) ++j;
        if (j == d.paths.size()) {
            d.paths.push_back(std::move(paths[k]));
            d.weights.push_back(weights[k]);
        } else {
            d.weights[j] += weights[k];
        }
    }
    for (std::size_t k = 0; k < d.paths.size(); ++k) {
        for (EdgeId e : d.paths[k].edges) d.reconstruction[static_cast<std::size_t>(e)] += d.weights[k];
    }
    return d;
}

bool Decomposition::has_integer_weights() const { return all_integral(weights); }

double optimal_cone_scale(std::span<const double> x, std::span<const double> r) {
    require_length(r.size(), x.size(), "optimal_cone_scale");
    const double xx = vec::norm_sq(x);
    if (!(xx > 0.0)) throw ZeroIterateError("optimal_cone_scale: iterate is zero");
    return std::max(0.0, vec::dot(x, r) / xx);
}

Decomposition integral_decomposition(const ActiveSet& s, std::span<const double> r) {
    if (s.empty()) throw EmptyActiveSetError("integral_decomposition: empty active set");
    const double alpha = optimal_cone_scale(s.iterate(), r);
    std::vector<PathVertex> paths;
    std::vector<double> weights;
    for (std::size_t k = 0; k < s.size(); ++k) {
        const ScaledVertex& a = s.atom(k);
        if (a.is_origin() || a.scale != 1.0) {
            throw InvalidArgument("integral_decomposition expects unit-scale path atoms");
        }
        const double mu = std::nearbyint(alpha * s.weight(k));  // half-to-even under the default mode
        if (mu > 0.0) {
            paths.push_back(*a.path);
            weights.push_back(mu);
        }
    }
    return Decomposition::build(std::move(paths), std::move(weights), s.edge_count());
}

bool exact_match(const Decomposition& d, std::span<const double> r) {
    require_length(r.size(), d.reconstruction.size(), "exact_match");
    const double tol = all_integral(r) ? 0.0 : 1e-9;
    for (std::size_t e = 0; e < r.size(); ++e) {
        if (!(std::abs(d.reconstruction[e] - r[e]) <= tol)) return false;
    }
    return true;
}

Decomposition conic_decomposition(const ActiveSet& s, std::span<const double> r, LossKind kind) {
    if (s.empty()) throw EmptyActiveSetError("conic_decomposition: empty active set");
    const double alpha = kind == LossKind::LeastSquares ? optimal_cone_scale(s.iterate(), r) : 1.0;
    std::vector<PathVertex> paths;
    std::vector<double> weights;
    for (std::size_t k = 0; k < s.size(); ++k) {
        const ScaledVertex& a = s.atom(k);
        if (a.is_origin()) continue;
        const double w = kind == LossKind::LeastSquares ? alpha * a.scale * s.weight(k) : a.scale * s.weight(k);
        if (w >= kMinConicWeight) {
            paths.push_back(*a.path);
            weights.push_back(w);
        }
    }
    return Decomposition::build(std::move(paths), std::move(weights), s.edge_count());
}

}  // namespace flowfw
