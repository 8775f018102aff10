#pragma once

#include <span>
#include <vector>

#include "flowfw/graph.hpp"

namespace flowfw {

enum class LossKind { LeastSquares, Poisson };

// Smooth objective over edge vectors, with a line search along x - gamma * d.
class Objective {
public:
    virtual ~Objective() = default;
    virtual LossKind kind() const noexcept = 0;
    virtual double value(std::span<const double> x) const = 0;
    virtual std::vector<double> gradient(std::span<const double> x) const = 0;
    // argmin over gamma in [0, gamma_max] of value(x - gamma * d).
    virtual double step_size(std::span<const double> x, std::span<const double> d,
                             double gamma_max) const = 0;
};

// f(x) = 1/2 ||x - (<x,r>/||r||^2) r||^2: squared distance to the ray spanned
// by r, after eliminating the optimal scaling of r in closed form.
class LeastSquaresLoss final : public Objective {
public:
    explicit LeastSquaresLoss(std::vector<double> reference);

    LossKind kind() const noexcept override { return LossKind::LeastSquares; }
    const std::vector<double>& reference() const noexcept { return r_; }
    double reference_norm_sq() const noexcept { return r_norm_sq_; }

    double value(std::span<const double> x) const override;
    // x - (<x,r>/||r||^2) r
    std::vector<double> gradient(std::span<const double> x) const override;
    // Closed-form minimizer of the quadratic along d, clamped to [0, gamma_max].
    // Directions parallel to r leave f constant and yield gamma_max.
    double step_size(std::span<const double> x, std::span<const double> d,
                     double gamma_max) const override;

private:
    std::vector<double> r_;
    double r_norm_sq_;
};

// Poisson negative log-likelihood on node inflows:
//   f(x) = sum_{u != source} [ X_u - R_u log max(X_u, eps) ]
// with X_u, R_u the inflows of x and r at u. Nodes with R_u = 0 contribute X_u.
class PoissonLoss final : public Objective {
public:
    static constexpr double kDefaultEpsilon = 1e-12;
    static constexpr int kLineSearchIterations = 64;
    static constexpr double kFeasibilityShrink = 0.99;
    static constexpr double kDropTolerance = 1e-12;

    PoissonLoss(const FlowGraph& g, std::span<const double> reference,
                double domain_epsilon = kDefaultEpsilon);

    LossKind kind() const noexcept override { return LossKind::Poisson; }
    const std::vector<double>& node_targets() const noexcept { return targets_; }
    double domain_epsilon() const noexcept { return eps_; }

    std::vector<double> node_sums(std::span<const double> x) const;

    double value(std::span<const double> x) const override;
    std::vector<double> gradient(std::span<const double> x) const override;
    // Golden-section search on [0, gamma_safe], where gamma_safe <= gamma_max
    // keeps the trial point nonnegative. Never increases f.
    double step_size(std::span<const double> x, std::span<const double> d,
                     double gamma_max) const override;

    double line_search(std::span<const double> x, std::span<const double> d, double gamma_max) const {
        return step_size(x, d, gamma_max);
    }

private:
    void check_point(std::span<const double> x) const;

    const FlowGraph* graph_;
    std::vector<NodeId> heads_;
    std::vector<double> targets_;
    double eps_;
};

}  // namespace flowfw
