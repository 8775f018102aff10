#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace flowfw {

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z);

// Independent stream per edge: std::mt19937_64 seeded with
//   mix64(seed + 0x9E3779B97F4A7C15 * (edge + 1)).
std::mt19937_64 edge_stream(std::uint64_t seed, std::size_t edge);

// Stable 64-bit seed for a named instance (FNV-1a of the name mixed with seed),
// so corpora perturb identically regardless of section order.
std::uint64_t instance_seed(std::uint64_t seed, std::string_view instance_id);

// Uniform in the open interval (0, 1) with 53 random bits.
double uniform01(std::mt19937_64& rng);

// Poisson(lambda): inversion below 30, transformed rejection (PTRS) above.
std::uint64_t sample_poisson(std::mt19937_64& rng, double lambda);

// Binomial(n, 1/2) as the popcount of n fair bits.
std::uint64_t sample_binomial_half(std::mt19937_64& rng, std::uint64_t n);

// Each edge independently ~ Poisson(r_e).
std::vector<double> perturb_poisson(std::span<const double> r, std::uint64_t seed);

// Each edge independently ~ Binomial(2 round(r_e), 1/2).
std::vector<double> perturb_binomial(std::span<const double> r, std::uint64_t seed);

}  // namespace flowfw
