#include "flowfw/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "flowfw/errors.hpp"

namespace flowfw::oracle {

std::vector<PathVertex> enumerate_paths(const FlowGraph& g, std::size_t cap) {
    if (cap < 1) throw InvalidArgument("enumerate_paths: cap must be >= 1");
    // Out-neighbours sorted by head id so DFS emits node sequences in order.
    std::vector<std::vector<EdgeId>> out(static_cast<std::size_t>(g.node_count()));
    for (NodeId u = 0; u < g.node_count(); ++u) {
        auto es = g.out_edges(u);
        auto& v = out[static_cast<std::size_t>(u)];
        v.assign(es.begin(), es.end());
        std::sort(v.begin(), v.end(), [&](EdgeId a, EdgeId b) { return g.edge(a).head < g.edge(b).head; });
    }
    std::vector<PathVertex> paths;
    std::vector<NodeId> nodes{g.source()};
    std::vector<EdgeId> edges;
    auto dfs = [&](auto&& self, NodeId u) -> void {
        if (u == g.sink()) {
            if (paths.size() >= cap) throw PathExplosionError("more than " + std::to_string(cap) + " s-t paths");
            PathVertex p{nodes, edges};
            std::sort(p.edges.begin(), p.edges.end());
            paths.push_back(std::move(p));
            return;
        }
        for (EdgeId e : out[static_cast<std::size_t>(u)]) {
            nodes.push_back(g.edge(e).head);
            edges.push_back(e);
            self(self, g.edge(e).head);
            nodes.pop_back();
            edges.pop_back();
        }
    };
    dfs(dfs, g.source());
    return paths;
}

namespace {

// Euclidean projection onto the probability simplex (sort-based).
void project_simplex(std::vector<double>& w) {
    std::vector<double> u = w;
    std::sort(u.begin(), u.end(), std::greater<>());
    double cumsum = 0.0;
    double theta = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        cumsum += u[j];
        const double t = (cumsum - 1.0) / static_cast<double>(j + 1);
        if (u[j] - t > 0.0) theta = t;
    }
    for (double& x : w) x = std::max(0.0, x - theta);
}

}  // namespace

ReferenceSolution reference_ls_solution(const FlowGraph& g, std::span<const double> r, std::size_t cap) {
    require_length(r.size(), g.edge_count(), "reference_ls_optimum");
    auto paths = enumerate_paths(g, cap);
    const std::size_t p = paths.size();
    const std::size_t m = g.edge_count();
    double rr = 0.0;
    for (double v : r) rr += v * v;
    if (!(rr > 0.0)) throw InvalidArgument("reference_ls_optimum: r is identically zero");

    // Quadratic form over path weights: f(w) = 1/2 (w'Gw - (b'w)^2 / ||r||^2).
    std::vector<std::vector<double>> overlap(p, std::vector<double>(p, 0.0));
    std::vector<double> b(p, 0.0);
    std::vector<std::vector<char>> member(p, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < p; ++i) {
        for (EdgeId e : paths[i].edges) {
            member[i][static_cast<std::size_t>(e)] = 1;
            b[i] += r[static_cast<std::size_t>(e)];
        }
    }
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = i; j < p; ++j) {
            double c = 0.0;
            for (std::size_t e = 0; e < m; ++e) c += member[i][e] && member[j][e] ? 1.0 : 0.0;
            overlap[i][j] = overlap[j][i] = c;
        }
    }
    double lipschitz = 0.0;  // Gershgorin bound on the Hessian of the quadratic
    for (const auto& row : overlap) lipschitz = std::max(lipschitz, std::accumulate(row.begin(), row.end(), 0.0));

    auto grad_at = [&](const std::vector<double>& w) {
        double bw = 0.0;
        for (std::size_t i = 0; i < p; ++i) bw += b[i] * w[i];
        std::vector<double> grad(p);
        for (std::size_t i = 0; i < p; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < p; ++j) s += overlap[i][j] * w[j];
            grad[i] = s - bw / rr * b[i];
        }
        return grad;
    };
    auto quad_value = [&](const std::vector<double>& w) {
        double wgw = 0.0;
        double bw = 0.0;
        for (std::size_t i = 0; i < p; ++i) {
            bw += b[i] * w[i];
            for (std::size_t j = 0; j < p; ++j) wgw += w[i] * overlap[i][j] * w[j];
        }
        return 0.5 * (wgw - bw * bw / rr);
    };
    auto simplex_gap = [&](const std::vector<double>& w, const std::vector<double>& grad) {
        double gw = 0.0;
        for (std::size_t i = 0; i < p; ++i) gw += grad[i] * w[i];
        return gw - *std::min_element(grad.begin(), grad.end());
    };

    std::vector<double> w(p, 1.0 / static_cast<double>(p));
    std::vector<double> y = w;
    double momentum = 1.0;
    double fw = quad_value(w);
    double gap = simplex_gap(w, grad_at(w));
    constexpr double kGapTarget = 1e-13;
    constexpr int kMaxIterations = 500'000;
    for (int it = 0; it < kMaxIterations && gap > kGapTarget; ++it) {
        auto grad = grad_at(y);
        std::vector<double> next(p);
        for (std::size_t i = 0; i < p; ++i) next[i] = y[i] - grad[i] / lipschitz;
        project_simplex(next);
        const double fnext = quad_value(next);
        if (fnext > fw + 1e-15 * (1.0 + std::abs(fw))) {
            // Adaptive restart: drop momentum and retry from w.
            momentum = 1.0;
            y = w;
            continue;
        }
        const double m_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * momentum * momentum));
        for (std::size_t i = 0; i < p; ++i) y[i] = next[i] + (momentum - 1.0) / m_next * (next[i] - w[i]);
        momentum = m_next;
        w = std::move(next);
        fw = fnext;
        if (it % 16 == 0) gap = simplex_gap(w, grad_at(w));
    }
    gap = simplex_gap(w, grad_at(w));

    // Evaluate the objective directly on the dense point (no cancellation).
    std::vector<double> x(m, 0.0);
    for (std::size_t i = 0; i < p; ++i) {
        for (EdgeId e : paths[i].edges) x[static_cast<std::size_t>(e)] += w[i];
    }
    double xr = 0.0;
    for (std::size_t e = 0; e < m; ++e) xr += x[e] * r[e];
    double value = 0.0;
    for (std::size_t e = 0; e < m; ++e) {
        const double res = x[e] - xr / rr * r[e];
        value += res * res;
    }
    return ReferenceSolution{0.5 * value, gap, std::move(paths), std::move(w)};
}

std::optional<Decomposition> brute_force_integral_decomposition(const FlowGraph& g, std::span<const double> r,
                                                                int max_weight, std::size_t cap) {
    require_length(r.size(), g.edge_count(), "brute_force_integral_decomposition");
    if (max_weight < 1) throw InvalidArgument("max_weight must be >= 1");
    std::vector<long long> target(r.size());
    for (std::size_t e = 0; e < r.size(); ++e) {
        if (r[e] < 0.0 || r[e] != std::nearbyint(r[e])) {
            throw InvalidArgument("brute_force_integral_decomposition expects a nonnegative integral flow");
        }
        target[e] = static_cast<long long>(r[e]);
    }
    auto all = enumerate_paths(g, cap);
    const std::size_t m = g.edge_count();

    // A path over an edge with zero flow cannot carry positive weight.
    std::vector<PathVertex> paths;
    for (auto& p : all) {
        bool ok = true;
        for (EdgeId e : p.edges) ok = ok && target[static_cast<std::size_t>(e)] > 0;
        if (ok) paths.push_back(std::move(p));
    }
    const std::size_t n = paths.size();
    if (std::pow(static_cast<double>(max_weight) + 1.0, static_cast<double>(n)) > kSearchBudget) {
        throw SearchSpaceError("weight search space exceeds 1e8 combinations");
    }

    std::vector<long long> sum(m);
    for (std::size_t k = 0; k <= n; ++k) {
        // Subsets of size k in lexicographic order.
        std::vector<std::size_t> pick(k);
        std::iota(pick.begin(), pick.end(), 0);
        for (;;) {
            std::vector<int> weights(k, 1);
            for (;;) {
                std::fill(sum.begin(), sum.end(), 0);
                for (std::size_t i = 0; i < k; ++i) {
                    for (EdgeId e : paths[pick[i]].edges) sum[static_cast<std::size_t>(e)] += weights[i];
                }
                if (sum == target) {
                    std::vector<PathVertex> chosen;
                    std::vector<double> w;
                    for (std::size_t i = 0; i < k; ++i) {
                        chosen.push_back(paths[pick[i]]);
                        w.push_back(weights[i]);
                    }
                    return Decomposition::build(std::move(chosen), std::move(w), m);
                }
                std::size_t i = k;
                while (i > 0 && weights[i - 1] == max_weight) weights[--i] = 1;
                if (i == 0) break;
                ++weights[i - 1];
            }
            // Next combination.
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace flowfw::oracle
