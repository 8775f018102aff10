#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

// Dense vector helpers shared by the losses and the solver. Edge-indexed
// vectors are plain std::vector<double>.
namespace flowfw::vec {

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm_sq(std::span<const double> a) { return dot(a, a); }

inline double norm(std::span<const double> a) { return std::sqrt(norm_sq(a)); }

inline double max_abs(std::span<const double> a) {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::abs(v));
    return m;
}

// y += alpha * x
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline std::vector<double> sub(std::span<const double> a, std::span<const double> b) {
    std::vector<double> out(a.begin(), a.end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

inline std::vector<double> scaled(std::span<const double> a, double alpha) {
    std::vector<double> out(a.begin(), a.end());
    for (double& v : out) v *= alpha;
    return out;
}

}  // namespace flowfw::vec
