#include "doctest.h"

#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "fixtures.hpp"
#include "flowfw/errors.hpp"
#include "flowfw/loss.hpp"
#include "flowfw/synthetic.hpp"
#include "flowfw/vec.hpp"

using namespace flowfw;

namespace {

// Independent least-squares value: 1/2 x' P' P x with the projector
// P = I - r r' / ||r||^2 materialized as a dense matrix.
double projector_value(const std::vector<double>& r, const std::vector<double>& x) {
    const std::size_t n = r.size();
    double rr = 0.0;
    for (double v : r) rr += v * v;
    std::vector<double> px(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double pij = (i == j ? 1.0 : 0.0) - r[i] * r[j] / rr;
            px[i] += pij * x[j];
        }
    }
    double s = 0.0;
    for (double v : px) s += v * v;
    return 0.5 * s;
}

double golden_min(const std::function<double(double)>& f, double lo, double hi, int iters) {
    const double k = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = hi - k * (hi - lo);
    double b = lo + k * (hi - lo);
    double fa = f(a);
    double fb = f(b);
    for (int i = 0; i < iters; ++i) {
        if (fa < fb) {
            hi = b; b = a; fb = fa; a = hi - k * (hi - lo); fa = f(a);
        } else {
            lo = a; a = b; fa = fb; b = lo + k * (hi - lo); fb = f(b);
        }
    }
    return 0.5 * (lo + hi);
}

double fd_rel_error(const Objective& f, std::vector<double> x, double h) {
    const auto grad = f.gradient(x);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double xi = x[i];
        x[i] = xi + h;
        const double fp = f.value(x);
        x[i] = xi - h;
        const double fm = f.value(x);
        x[i] = xi;
        const double fd = (fp - fm) / (2.0 * h);
        num += (fd - grad[i]) * (fd - grad[i]);
        den += grad[i] * grad[i];
    }
    return std::sqrt(num) / std::max(std::sqrt(den), 1e-300);
}

std::vector<double> moved(const std::vector<double>& x, const std::vector<double>& d, double gamma) {
    auto y = x;
    vec::axpy(-gamma, d, y);
    return y;
}

}  // namespace

TEST_CASE("least-squares value") {
    const auto r = fixtures::figure1_flow();
    LeastSquaresLoss f(r);
    CHECK(f.value(vec::scaled(r, 0.25)) <= 1e-15);
    CHECK(f.value(vec::scaled(r, 0.0)) == 0.0);

    const std::vector<double> ortho{2, -1, 0, 0, 0, 0, 0};  // <ortho, r> = 0
    CHECK(f.value(ortho) == doctest::Approx(0.5 * vec::norm_sq(ortho)));

    auto g = fixtures::figure1();
    const auto x = fixtures::path(g, {0, 1, 3, 4, 5}).incidence(7);
    CHECK(f.value(x) == doctest::Approx(projector_value(r, x)).epsilon(1e-14));
    CHECK_THROWS_AS(f.value(std::vector<double>(3, 0.0)), DimensionError);
    CHECK_THROWS_AS(LeastSquaresLoss(std::vector<double>(4, 0.0)), InvalidArgument);
}

TEST_CASE("least-squares gradient") {
    const auto r = fixtures::figure1_flow();
    LeastSquaresLoss f(r);
    for (double v : f.gradient(vec::scaled(r, 0.5))) CHECK(std::abs(v) < 1e-15);
    const std::vector<double> ortho{2, -1, 0, 0, 0, 0, 0};
    CHECK(f.gradient(ortho) == ortho);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        auto x = fixtures::random_vector(rng, 7, 0.0, 1.0);
        CHECK(fd_rel_error(f, x, 1e-6) <= 1e-6);
    }
}

TEST_CASE("least-squares step size") {
    const auto r = fixtures::figure1_flow();
    LeastSquaresLoss f(r);
    std::mt19937_64 rng(5);

    SUBCASE("already optimal") {
        auto d = fixtures::random_vector(rng, 7, -1.0, 1.0);
        CHECK(f.step_size(r, d, 1.0) == doctest::Approx(0.0).scale(1e-12));
    }
    SUBCASE("gradient direction reaches the ray") {
        auto x = fixtures::random_vector(rng, 7, 0.0, 1.0);
        auto d = f.gradient(x);
        const double inf = std::numeric_limits<double>::infinity();
        const double gamma = f.step_size(x, d, inf);
        CHECK(gamma == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(f.value(moved(x, d, gamma)) < 1e-20);
        const double numeric = golden_min([&](double t) { return f.value(moved(x, d, t)); }, 0.0, 4.0, 200);
        CHECK(numeric == doctest::Approx(1.0).epsilon(1e-6));
    }
    SUBCASE("parallel direction is flat and takes the full step") {
        auto x = fixtures::random_vector(rng, 7, 0.0, 1.0);
        CHECK(f.step_size(x, vec::scaled(r, 0.3), 0.7) == 0.7);
        CHECK(f.step_size(x, std::vector<double>(7, 0.0), 0.4) == 0.4);
    }
    SUBCASE("matches golden-section search and is the exact argmin") {
        for (int i = 0; i < 300; ++i) {
            auto x = fixtures::random_vector(rng, 7, 0.0, 1.0);
            auto d = fixtures::random_vector(rng, 7, -1.0, 1.0);
            const double gmax = std::uniform_real_distribution<double>(0.0, 2.0)(rng);
            const double gamma = f.step_size(x, d, gmax);
            auto phi = [&](double t) { return f.value(moved(x, d, t)); };
            const double ref = golden_min(phi, 0.0, gmax, 64);
            CHECK(phi(gamma) <= phi(ref) + 1e-8);
            for (int k = 0; k <= 20; ++k) CHECK(phi(gamma) <= phi(gmax * k / 20.0) + 1e-12);
        }
    }
}

TEST_CASE("least-squares invariants on random references") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> c(0.1, 10.0);
    for (int i = 0; i < 1000; ++i) {
        auto r = fixtures::random_vector(rng, 9, 0.0, 5.0);
        auto x = fixtures::random_vector(rng, 9, 0.0, 1.0);
        LeastSquaresLoss f(r);
        // Half squared distance to the ray through r, by explicit projection.
        double rx = 0.0, rr = 0.0;
        for (std::size_t k = 0; k < r.size(); ++k) { rx += r[k] * x[k]; rr += r[k] * r[k]; }
        double dist_sq = 0.0;
        for (std::size_t k = 0; k < r.size(); ++k) {
            const double diff = x[k] - rx / rr * r[k];
            dist_sq += diff * diff;
        }
        CHECK(std::abs(f.value(x) - 0.5 * dist_sq) <= 1e-12);
        LeastSquaresLoss scaled(vec::scaled(r, c(rng)));
        CHECK(std::abs(f.value(x) - scaled.value(x)) <= 1e-12);
    }
}

TEST_CASE("Poisson value and gradient") {
    auto g = fixtures::figure1();
    const auto r = fixtures::figure1_flow();
    PoissonLoss f(g, r);
    CHECK(f.node_targets() == std::vector<double>{0, 1, 2, 3, 1, 3});

    // Inflows at x = r: a 1, b 2, c 3, d 1, t 3; they sum to the 10 units on all edges.
    const double expected = 10.0 - 2.0 * std::log(2.0) - 6.0 * std::log(3.0);
    CHECK(f.value(r) == doctest::Approx(expected).epsilon(1e-14));
    for (double v : f.gradient(r)) CHECK(v == doctest::Approx(0.0).scale(1e-15));

    for (double v : f.gradient(vec::scaled(r, 2.0))) CHECK(v == doctest::Approx(0.5));

    const double eps = f.domain_epsilon();
    const double at_zero = -(1 + 2 + 3 + 1 + 3) * std::log(eps);
    CHECK(f.value(std::vector<double>(7, 0.0)) == doctest::Approx(at_zero));
    CHECK(std::isfinite(f.value(std::vector<double>(7, 0.0))));

    auto neg = r;
    neg[3] = -0.5;
    CHECK_THROWS_AS(f.value(neg), NegativeFlowError);
    CHECK_THROWS_AS(f.gradient(std::vector<double>(2, 1.0)), DimensionError);
}

TEST_CASE("Poisson zero-target nodes carry no log term") {
    auto g = fixtures::figure1();
    std::vector<double> r{1, 0, 1, 0, 1, 0, 1};  // b and its edges empty
    PoissonLoss f(g, r);
    std::vector<double> x{1, 0.5, 1, 0.5, 1, 0.5, 1};
    auto grad = f.gradient(x);
    CHECK(grad[1] == 1.0);  // edge into b
    CHECK(std::isfinite(f.value(std::vector<double>(7, 0.0))));
}

TEST_CASE("Poisson gradient matches finite differences") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 20; ++i) {
        auto inst = synthetic::random_instance({8, 5, 3, 20}, 40 + static_cast<std::uint64_t>(i));
        PoissonLoss f(inst.graph, inst.truth.true_flow);
        for (int k = 0; k < 10; ++k) {
            auto x = fixtures::random_vector(rng, inst.graph.edge_count(), 0.5, 5.0);
            CHECK(fd_rel_error(f, x, 1e-6) <= 1e-6);
        }
    }
}

TEST_CASE("Poisson line search") {
    auto g = fixtures::figure1();
    const auto r = fixtures::figure1_flow();
    PoissonLoss f(g, r);
    std::mt19937_64 rng(29);

    CHECK(f.line_search(r, std::vector<double>(7, 0.0), 1.0) == 0.0);
    auto d = fixtures::random_vector(rng, 7, -0.1, 0.1);
    // Flat minimum at the target: only resolvable to about sqrt(machine epsilon).
    const double g0 = f.line_search(r, d, 1.0);
    CHECK(g0 <= 1e-5);
    CHECK(f.value(vec::sub(r, vec::scaled(d, g0))) <= f.value(r));

    for (int i = 0; i < 200; ++i) {
        auto x = fixtures::random_vector(rng, 7, 0.1, 4.0);
        auto dir = fixtures::random_vector(rng, 7, -2.0, 2.0);
        const double gmax = 1.0;
        double gsafe = gmax;
        for (std::size_t e = 0; e < 7; ++e) {
            if (dir[e] > 0.0 && x[e] - gmax * dir[e] < 0.0) gsafe = std::min(gsafe, 0.99 * x[e] / dir[e]);
        }
        const double gamma = f.line_search(x, dir, gmax);
        CHECK(gamma >= 0.0);
        CHECK(gamma <= gsafe);
        auto trial = moved(x, dir, gamma);
        for (double v : trial) CHECK(v >= -1e-15);
        for (double& v : trial) v = std::max(v, 0.0);
        CHECK(f.value(trial) <= f.value(x));
        auto phi = [&](double t) {
            auto y = moved(x, dir, t);
            for (double& v : y) v = std::max(v, 0.0);
            return f.value(y);
        };
        const double ref = golden_min(phi, 0.0, gsafe, 200);
        CHECK(std::abs(gamma - ref) <= 1e-6);
    }
}

TEST_CASE("Poisson objective is convex along segments") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
        auto inst = synthetic::random_instance({9, 6, 3, 30}, 70 + static_cast<std::uint64_t>(i));
        PoissonLoss f(inst.graph, inst.truth.true_flow);
        const std::size_t m = inst.graph.edge_count();
        auto x = fixtures::random_vector(rng, m, 0.0, 10.0);
        auto y = fixtures::random_vector(rng, m, 0.0, 10.0);
        for (int k = 1; k <= 10; ++k) {
            const double lambda = k / 11.0;
            std::vector<double> z(m);
            for (std::size_t e = 0; e < m; ++e) z[e] = lambda * x[e] + (1 - lambda) * y[e];
            CHECK(f.value(z) <= lambda * f.value(x) + (1 - lambda) * f.value(y) + 1e-9);
        }
    }
}
