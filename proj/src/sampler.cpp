#include "crosstalk/sampler.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace crosstalk {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

SampleCounts sample(const JointDistribution<double>& dist, std::uint64_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample: n must be at least 1");

  const auto& p = dist.values();
  std::array<double, 4> cumulative{};
  double running = 0;
  int last_positive = 0;
  for (int i = 0; i < 4; ++i) {
    running += p[i];
    cumulative[i] = running;
    if (p[i] > 0) last_positive = i;
  }

  std::mt19937_64 engine(splitmix64(seed));
  constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53

  SampleCounts out;
  out.n = n;
  out.seed = seed;
  for (std::uint64_t draw = 0; draw < n; ++draw) {
    const double u = double((engine() >> 11) + 1) * kScale;
    int cell = last_positive;
    for (int i = 0; i < 4; ++i) {
      if (p[i] > 0 && u <= cumulative[i]) {
        cell = i;
        break;
      }
    }
    ++out.counts[cell];
  }
  return out;
}

JointDistribution<double> empirical_distribution(const SampleCounts& counts) {
  if (counts.n == 0) throw std::invalid_argument("empirical_distribution: n must be at least 1");
  std::uint64_t total = 0;
  std::array<double, 4> p{};
  for (int i = 0; i < 4; ++i) {
    total += counts.counts[i];
    p[i] = double(counts.counts[i]) / double(counts.n);
  }
  if (total != counts.n) throw std::invalid_argument("empirical_distribution: counts do not sum to n");
  return JointDistribution<double>(p);
}

CrosstalkReport empirical_report(const SampleCounts& counts, double tol) {
  return report_from_distribution(empirical_distribution(counts), tol);
}

std::array<double, 4> z_scores(const SampleCounts& counts, const JointDistribution<double>& dist) {
  std::array<double, 4> z{};
  const double n = double(counts.n);
  for (int i = 0; i < 4; ++i) {
    const double p = dist.values()[i];
    const double expected = n * p;
    const double sd = std::sqrt(n * p * (1 - p));
    const double diff = double(counts.counts[i]) - expected;
    if (sd > 0) {
      z[i] = diff / sd;
    } else {
      z[i] = std::abs(diff) < 0.5 ? 0.0 : std::numeric_limits<double>::infinity();
    }
  }
  return z;
}

}  // namespace crosstalk
