#include "flowfw/loss.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "flowfw/errors.hpp"
#include "flowfw/vec.hpp"

namespace flowfw {

LeastSquaresLoss::LeastSquaresLoss(std::vector<double> reference)
    : r_(std::move(reference)), r_norm_sq_(vec::norm_sq(r_)) {
    for (double v : r_) {
        if (!(v >= 0.0) || !std::isfinite(v)) throw NegativeFlowError("reference flow must be finite and nonnegative");
    }
    if (!(r_norm_sq_ > 0.0)) throw InvalidArgument("reference flow is identically zero");
}

double LeastSquaresLoss::value(std::span<const double> x) const {
    require_length(x.size(), r_.size(), "ls_value");
    const double tau = vec::dot(x, r_) / r_norm_sq_;
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double res = x[i] - tau * r_[i];
        s += res * res;
    }
    return 0.5 * s;
}

std::vector<double> LeastSquaresLoss::gradient(std::span<const double> x) const {
    require_length(x.size(), r_.size(), "ls_gradient");
    const double tau = vec::dot(x, r_) / r_norm_sq_;
    std::vector<double> g(x.begin(), x.end());
    vec::axpy(-tau, r_, g);
    return g;
}

double LeastSquaresLoss::step_size(std::span<const double> x, std::span<const double> d,
                                   double gamma_max) const {
    require_length(x.size(), r_.size(), "ls_step_size");
    require_length(d.size(), r_.size(), "ls_step_size");
    const double xd = vec::dot(x, d);
    const double dr = vec::dot(d, r_);
    const double xr = vec::dot(x, r_);
    const double dd = vec::norm_sq(d);
    const double num = r_norm_sq_ * xd - dr * xr;
    const double den = dd * r_norm_sq_ - dr * dr;
    if (den <= 1e-14 * dd * r_norm_sq_) return gamma_max;
    return std::clamp(num / den, 0.0, gamma_max);
}

PoissonLoss::PoissonLoss(const FlowGraph& g, std::span<const double> reference, double domain_epsilon)
    : graph_(&g), targets_(static_cast<std::size_t>(g.node_count()), 0.0), eps_(domain_epsilon) {
    require_length(reference.size(), g.edge_count(), "PoissonLoss");
    if (!(eps_ > 0.0)) throw InvalidArgument("PoissonLoss: domain epsilon must be positive");
    heads_.reserve(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const double r = reference[e];
        if (!(r >= 0.0) || !std::isfinite(r)) throw NegativeFlowError("reference flow must be finite and nonnegative");
        const NodeId h = g.edges()[e].head;
        heads_.push_back(h);
        targets_[static_cast<std::size_t>(h)] += r;
    }
}

void PoissonLoss::check_point(std::span<const double> x) const {
    require_length(x.size(), heads_.size(), "poisson");
    for (double v : x) {
        if (v < 0.0) throw NegativeFlowError("Poisson loss evaluated at a negative flow");
    }
}

std::vector<double> PoissonLoss::node_sums(std::span<const double> x) const {
    require_length(x.size(), heads_.size(), "node_sums");
    std::vector<double> sums(targets_.size(), 0.0);
    for (std::size_t e = 0; e < x.size(); ++e) sums[static_cast<std::size_t>(heads_[e])] += x[e];
    return sums;
}

double PoissonLoss::value(std::span<const double> x) const {
    check_point(x);
    const auto sums = node_sums(x);
    double f = 0.0;
    // The source has no in-edges, so its term is identically zero.
    for (std::size_t u = 1; u < sums.size(); ++u) {
        f += sums[u];
        if (targets_[u] > 0.0) f -= targets_[u] * std::log(std::max(sums[u], eps_));
    }
    return f;
}

std::vector<double> PoissonLoss::gradient(std::span<const double> x) const {
    check_point(x);
    const auto sums = node_sums(x);
    std::vector<double> g(x.size(), 1.0);
    for (std::size_t e = 0; e < x.size(); ++e) {
        const auto h = static_cast<std::size_t>(heads_[e]);
        if (targets_[h] > 0.0) g[e] = 1.0 - targets_[h] / std::max(sums[h], eps_);
    }
    return g;
}

double PoissonLoss::step_size(std::span<const double> x, std::span<const double> d,
                              double gamma_max) const {
    check_point(x);
    require_length(d.size(), x.size(), "poisson_line_search");
    if (!(gamma_max > 0.0) || vec::max_abs(d) == 0.0) return 0.0;

    double gamma_safe = gamma_max;
    for (std::size_t e = 0; e < x.size(); ++e) {
        // Exact drop steps land on zero up to round-off; only shrink for real crossings.
        const double end = x[e] - gamma_max * d[e];
        if (d[e] > 0.0 && end < -kDropTolerance * (x[e] + gamma_max * d[e])) {
            gamma_safe = std::min(gamma_safe, kFeasibilityShrink * x[e] / d[e]);
        }
    }
    if (!(gamma_safe > 0.0)) return 0.0;

    std::vector<double> trial(x.size());
    auto phi = [&](double gamma) {
        for (std::size_t e = 0; e < x.size(); ++e) trial[e] = std::max(0.0, x[e] - gamma * d[e]);
        return value(trial);
    };

    constexpr double kInvPhi = 0.6180339887498949;
    double lo = 0.0;
    double hi = gamma_safe;
    double a = hi - kInvPhi * (hi - lo);
    double b = lo + kInvPhi * (hi - lo);
    double fa = phi(a);
    double fb = phi(b);
    for (int it = 0; it < kLineSearchIterations && hi - lo > 0.0; ++it) {
        if (fa <= fb) {
            hi = b;
            b = a;
            fb = fa;
            a = hi - kInvPhi * (hi - lo);
            fa = phi(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + kInvPhi * (hi - lo);
            fb = phi(b);
        }
    }
    double best = fa <= fb ? a : b;
    double fbest = std::min(fa, fb);
    // Endpoints: gamma_safe enables exact drop steps, 0 guarantees monotonicity.
    const double fend = phi(gamma_safe);
    if (fend <= fbest) {
        best = gamma_safe;
        fbest = fend;
    }
    if (!(fbest < phi(0.0))) return 0.0;
    return best;
}

}  // namespace flowfw
