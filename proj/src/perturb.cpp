#include "flowfw/perturb.hpp"

#include <bit>
#include <cmath>

#include "flowfw/errors.hpp"

namespace flowfw {

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::mt19937_64 edge_stream(std::uint64_t seed, std::size_t edge) {
    return std::mt19937_64(mix64(seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(edge) + 1)));
}

std::uint64_t instance_seed(std::uint64_t seed, std::string_view instance_id) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : instance_id) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return mix64(seed ^ h);
}

double uniform01(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t sample_poisson(std::mt19937_64& rng, double lambda) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw InvalidArgument("Poisson rate must be finite and >= 0");
    if (lambda == 0.0) return 0;
    if (lambda < 30.0) {
        const double u = uniform01(rng);
        double p = std::exp(-lambda);
        double cdf = p;
        std::uint64_t k = 0;
        // The tail beyond 1000 has negligible mass for lambda < 30.
        while (u > cdf && k < 1000) {
            ++k;
            p *= lambda / static_cast<double>(k);
            cdf += p;
        }
        return k;
    }
    // Hörmann's PTRS.
    const double slam = std::sqrt(lambda);
    const double loglam = std::log(lambda);
    const double b = 0.931 + 2.53 * slam;
    const double a = -0.059 + 0.02483 * b;
    const double invalpha = 1.1239 + 1.1328 / (b - 3.4);
    const double vr = 0.9277 - 3.6224 / (b - 2.0);
    for (;;) {
        const double u = uniform01(rng) - 0.5;
        const double v = uniform01(rng);
        const double us = 0.5 - std::abs(u);
        const double k = std::floor((2.0 * a / us + b) * u + lambda + 0.43);
        if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(k);
        if (k < 0.0 || (us < 0.013 && v > us)) continue;
        if (std::log(v) + std::log(invalpha) - std::log(a / (us * us) + b) <=
            -lambda + k * loglam - std::lgamma(k + 1.0)) {
            return static_cast<std::uint64_t>(k);
        }
    }
}

std::uint64_t sample_binomial_half(std::mt19937_64& rng, std::uint64_t n) {
    std::uint64_t count = 0;
    for (; n >= 64; n -= 64) count += static_cast<std::uint64_t>(std::popcount(rng()));
    if (n > 0) count += static_cast<std::uint64_t>(std::popcount(rng() & ((1ULL << n) - 1)));
    return count;
}

namespace {

void check_reference(std::span<const double> r) {
    for (double v : r) {
        if (!(v >= 0.0) || !std::isfinite(v)) throw NegativeFlowError("perturb: flow must be finite and >= 0");
    }
}

}  // namespace

std::vector<double> perturb_poisson(std::span<const double> r, std::uint64_t seed) {
    check_reference(r);
    std::vector<double> out(r.size());
    for (std::size_t e = 0; e < r.size(); ++e) {
        auto rng = edge_stream(seed, e);
        out[e] = static_cast<double>(sample_poisson(rng, r[e]));
    }
    return out;
}

std::vector<double> perturb_binomial(std::span<const double> r, std::uint64_t seed) {
    check_reference(r);
    std::vector<double> out(r.size());
    for (std::size_t e = 0; e < r.size(); ++e) {
        auto rng = edge_stream(seed, e);
        const auto n = static_cast<std::uint64_t>(2.0 * std::nearbyint(r[e]));
        out[e] = static_cast<double>(sample_binomial_half(rng, n));
    }
    return out;
}

}  // namespace flowfw
