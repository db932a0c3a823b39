// Entropy, mutual information (crosstalk) and degree of dependence for the
// joint experiment of the two binary measurements. All logarithms are
// natural (nats) and 0 ln 0 = 0.
//
// For a Bell-state distribution (theta, 1/2 - theta, 1/2 - theta, theta)
// both marginals are uniform, so
//
//   I = 2 ln 2 - E(theta),   E(theta) = -2 theta ln theta - 2 (1/2 - theta) ln(1/2 - theta)
//
// and the measurements are informationally independent iff theta = 1/4.

#pragma once

#include "crosstalk/bipartite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace crosstalk {

inline constexpr double kThetaTolerance = 1e-9;

template <typename Scalar>
Scalar xlogx(Scalar x) {
  return x > Scalar(0) ? x * std::log(x) : Scalar(0);
}

/// E(theta). Throws std::domain_error outside [0, 1/2] (with kProbabilitySlack).
template <typename Scalar>
Scalar entropy_theta(Scalar theta) {
  if (!(theta >= -Scalar(kProbabilitySlack) && theta <= Scalar(0.5) + Scalar(kProbabilitySlack))) {
    throw std::domain_error("entropy_theta: theta outside [0, 1/2]");
  }
  const Scalar th = std::clamp(theta, Scalar(0), Scalar(0.5));
  return -2 * xlogx(th) - 2 * xlogx(Scalar(0.5) - th);
}

/// Shannon entropy of the four joint cells.
template <typename Scalar>
Scalar joint_entropy(const JointDistribution<Scalar>& dist) {
  Scalar h = 0;
  for (Scalar p : dist.values()) h -= xlogx(p);
  return h;
}

/// sum p_{k,l} ln(p_{k,l} / (pA_k pB_l)); never negative.
template <typename Scalar>
Scalar mutual_information(const JointDistribution<Scalar>& dist) {
  const Marginals<Scalar> m = marginals(dist);
  Scalar info = 0;
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      const Scalar p = dist(k, l);
      if (p > Scalar(0)) info += p * std::log(p / (m.first[k] * m.second[l]));
    }
  }
  // Rounding can leave a product distribution at -1e-17.
  return std::max(info, Scalar(0));
}

/// I / ln 2 clamped to [0, 1]: 0 at independence, 1 at perfect (anti)correlation.
template <typename Scalar>
Scalar degree_of_dependence(const JointDistribution<Scalar>& dist) {
  return std::clamp(mutual_information(dist) / std::numbers::ln2_v<Scalar>, Scalar(0), Scalar(1));
}

/// |p00 - 1/4| <= tol.
template <typename Scalar>
bool is_informationally_independent(const JointDistribution<Scalar>& dist,
                                    double tol = kThetaTolerance) {
  if (!(tol > 0)) throw std::invalid_argument("independence tolerance must be positive");
  return std::abs(double(dist.theta()) - 0.25) <= tol;
}

struct CrosstalkReport {
  double theta = 0;
  double entropy = 0;      // nats
  double mutual_info = 0;  // nats
  double degree = 0;       // in [0, 1]
  bool independent = false;
  double tolerance = kThetaTolerance;
};

template <typename Scalar>
CrosstalkReport report_from_distribution(const JointDistribution<Scalar>& dist,
                                         double tol = kThetaTolerance) {
  CrosstalkReport r;
  r.theta = double(dist.theta());
  r.entropy = double(joint_entropy(dist));
  r.mutual_info = double(mutual_information(dist));
  r.degree = double(degree_of_dependence(dist));
  r.independent = is_informationally_independent(dist, tol);
  r.tolerance = tol;
  return r;
}

/// Report for the closed-form Bell-state distribution of the pair.
template <typename Scalar>
CrosstalkReport crosstalk_report(const ObservablePair<Scalar>& pair, BellLabel label,
                                 double tol = kThetaTolerance) {
  return report_from_distribution(joint_distribution_closed(pair, label), tol);
}

}  // namespace crosstalk
