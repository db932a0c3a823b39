// Seeded Monte-Carlo draws of joint measurement outcomes.
//
// Generator: std::mt19937_64 seeded with splitmix64(seed). Each draw takes
// one 64-bit output x and forms u = ((x >> 11) + 1) * 2^-53 in (0, 1]; the
// outcome is the first cell i (in order 00, 01, 10, 11) with u <= c_i, where
// c_i are the running sums of the probabilities. Zero-probability cells are
// never selected. Given the same (distribution, n, seed) the counts are
// identical on every platform.

#pragma once

#include "crosstalk/bipartite.hpp"
#include "crosstalk/information.hpp"

#include <array>
#include <cstdint>

namespace crosstalk {

struct SampleCounts {
  std::uint64_t n = 0;
  std::array<std::uint64_t, 4> counts{};
  std::uint64_t seed = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

SampleCounts sample(const JointDistribution<double>& dist, std::uint64_t n, std::uint64_t seed);

/// counts / n as a distribution.
JointDistribution<double> empirical_distribution(const SampleCounts& counts);

CrosstalkReport empirical_report(const SampleCounts& counts, double tol = kThetaTolerance);

/// (count - n p) / sqrt(n p (1 - p)) per cell; 0 where p(1-p) = 0 and the count
/// matches exactly, infinity where it does not.
std::array<double, 4> z_scores(const SampleCounts& counts, const JointDistribution<double>& dist);

}  // namespace crosstalk
