#include "flowfw/active_set.hpp"

#include "flowfw/errors.hpp"

namespace flowfw {

namespace {
constexpr double kDropWeight = 1e-15;
}

std::ptrdiff_t ActiveSet::find(const ScaledVertex& v) const {
    for (std::size_t k = 0; k < atoms_.size(); ++k) {
        if (atoms_[k] == v) return static_cast<std::ptrdiff_t>(k);
    }
    return -1;
}

void ActiveSet::accumulate(const ScaledVertex& v, double w) {
    if (v.is_origin()) return;
    for (EdgeId e : v.path->edges) iterate_[static_cast<std::size_t>(e)] += w * v.scale;
}

void ActiveSet::add(const ScaledVertex& v, double w) {
    const auto k = find(v);
    if (k >= 0) {
        weights_[static_cast<std::size_t>(k)] += w;
    } else {
        atoms_.push_back(v);
        weights_.push_back(w);
    }
    accumulate(v, w);
}

void ActiveSet::transfer(std::size_t from, std::size_t to, double gamma, bool drop) {
    if (drop) gamma = weights_[from];
    weights_[to] += gamma;
    weights_[from] -= gamma;
    accumulate(atoms_[to], gamma);
    accumulate(atoms_[from], -gamma);
    if (drop || weights_[from] <= kDropWeight) remove(from);
}

void ActiveSet::blend_toward(const ScaledVertex& v, double gamma) {
    for (double& w : weights_) w *= (1.0 - gamma);
    for (double& x : iterate_) x *= (1.0 - gamma);
    add(v, gamma);
    for (std::size_t k = weights_.size(); k-- > 0;) {
        if (weights_[k] <= kDropWeight) remove(k);
    }
}

void ActiveSet::reset_to(const ScaledVertex& v) {
    atoms_.assign(1, v);
    weights_.assign(1, 1.0);
    iterate_.assign(iterate_.size(), 0.0);
    accumulate(v, 1.0);
}

void ActiveSet::remove(std::size_t k) {
    atoms_.erase(atoms_.begin() + static_cast<std::ptrdiff_t>(k));
    weights_.erase(weights_.begin() + static_cast<std::ptrdiff_t>(k));
}

void ActiveSet::renormalize() {
    double total = 0.0;
    for (double w : weights_) total += w;
    if (total > 0.0) {
        for (double& w : weights_) w /= total;
    }
}

void ActiveSet::resync_iterate() {
    iterate_.assign(iterate_.size(), 0.0);
    for (std::size_t k = 0; k < atoms_.size(); ++k) accumulate(atoms_[k], weights_[k]);
}

ActiveExtremes active_set_extremes(const ActiveSet& s, std::span<const double> gradient) {
    if (s.empty()) throw EmptyActiveSetError("active set is empty");
    require_length(gradient.size(), s.edge_count(), "active_set_extremes");
    ActiveExtremes ex{0, 0};
    double hi = s.atom(0).inner(gradient);
    double lo = hi;
    for (std::size_t k = 1; k < s.size(); ++k) {
        const double v = s.atom(k).inner(gradient);
        if (v > hi) {
            hi = v;
            ex.away = k;
        }
        if (v < lo) {
            lo = v;
            ex.local = k;
        }
    }
    return ex;
}

}  // namespace flowfw
