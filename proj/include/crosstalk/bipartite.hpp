// Two commuting observables A (x) I and I (x) B on the two-qubit space, the
// Bell states, and the joint outcome distribution p_{k,l} computed three ways:
//
//   bruteforce  Born rule against the product eigenframe; any unit state.
//   amplitude   four-term Kronecker-delta amplitude, Bell states only.
//   closed      sums mu +/- nu and eta +/- zeta, Bell states only.
//
// Cells are always ordered (0,0), (0,1), (1,0), (1,1), i.e. index 2k + l.

#pragma once

#include "crosstalk/observables.hpp"
#include "crosstalk/qmath.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace crosstalk {

/// Slack admitted on each raw probability before clamping to [0, 1], and on
/// the total.
inline constexpr double kProbabilitySlack = 1e-12;
/// Accepted deviation of ||psi|| from 1 for the Born-rule route.
inline constexpr double kStateNormSlack = 1e-10;
/// Maximum disagreement between the two closed-form variants.
inline constexpr double kClosedFormAgreement = 1e-10;

class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Label (s, t) of the Bell state (|0t> + (-1)^s |1(t+1)>) / sqrt(2).
class BellLabel {
 public:
  constexpr BellLabel() = default;
  BellLabel(int s, int t) : s_(s), t_(t) {
    if ((s != 0 && s != 1) || (t != 0 && t != 1)) {
      throw std::invalid_argument("BellLabel: s and t must be bits");
    }
  }

  int s() const { return s_; }
  int t() const { return t_; }

  friend bool operator==(const BellLabel&, const BellLabel&) = default;

 private:
  int s_ = 0;
  int t_ = 0;
};

inline std::array<BellLabel, 4> all_bell_labels() {
  return {BellLabel{0, 0}, BellLabel{0, 1}, BellLabel{1, 0}, BellLabel{1, 1}};
}

template <typename Scalar = double>
struct ObservablePair {
  Observable<Scalar> first;
  Observable<Scalar> second;
};

template <typename Scalar>
using OutcomeFrame = std::array<Vec4<Scalar>, 4>;

template <typename Scalar = double>
class JointDistribution {
 public:
  /// Validates each cell against [-slack, 1 + slack] and the total against
  /// 1 +/- slack, then clamps cells into [0, 1].
  explicit JointDistribution(const std::array<Scalar, 4>& raw) {
    Scalar total = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      const Scalar p = raw[i];
      if (!std::isfinite(p) || p < -Scalar(kProbabilitySlack) ||
          p > Scalar(1) + Scalar(kProbabilitySlack)) {
        throw std::invalid_argument("JointDistribution: cell " + std::to_string(i) +
                                    " out of range: " + std::to_string(double(p)));
      }
      p_[i] = std::clamp(p, Scalar(0), Scalar(1));
      total += p;
    }
    if (std::abs(total - Scalar(1)) > Scalar(kProbabilitySlack)) {
      throw std::invalid_argument("JointDistribution: cells sum to " +
                                  std::to_string(double(total)));
    }
  }

  static constexpr std::size_t index(int k, int l) { return std::size_t(2 * k + l); }

  Scalar operator()(int k, int l) const {
    if ((k != 0 && k != 1) || (l != 0 && l != 1)) {
      throw std::out_of_range("JointDistribution: outcome indices must be bits");
    }
    return p_[index(k, l)];
  }

  /// p_{0,0}; for Bell states this equals p_{1,1}.
  Scalar theta() const { return p_[0]; }

  const std::array<Scalar, 4>& values() const { return p_; }

 private:
  std::array<Scalar, 4> p_{};
};

template <typename Scalar>
Vec4<Scalar> bell_state(BellLabel label) {
  const Scalar r = Scalar(1) / std::sqrt(Scalar(2));
  const int t = label.t();
  const int t_flip = (t + 1) % 2;
  Vec4<Scalar> psi = Vec4<Scalar>::Zero();
  psi(0 * 2 + t) = r;
  psi(1 * 2 + t_flip) = label.s() == 0 ? r : -r;
  return psi;
}

inline Vec4d bell_state(BellLabel label) { return bell_state<double>(label); }

/// A (x) I.
template <typename Scalar>
Mat4<Scalar> lift_first(const Mat2<Scalar>& a) {
  return tensor_mat(a, identity2<Scalar>());
}

/// I (x) B.
template <typename Scalar>
Mat4<Scalar> lift_second(const Mat2<Scalar>& b) {
  return tensor_mat(identity2<Scalar>(), b);
}

/// The common eigenframe |u^(k) u^(l)> of both lifted operators, in cell order.
template <typename Scalar>
OutcomeFrame<Scalar> outcome_frame(const ObservablePair<Scalar>& pair) {
  OutcomeFrame<Scalar> frame;
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      frame[JointDistribution<Scalar>::index(k, l)] =
          tensor_vec(eigenvector(pair.first, k), eigenvector(pair.second, l));
    }
  }
  return frame;
}

/// Born rule p_{k,l} = |<u^(k) u^(l) | psi>|^2 for any unit psi.
template <typename Scalar>
JointDistribution<Scalar> joint_distribution_bruteforce(const ObservablePair<Scalar>& pair,
                                                        const Vec4<Scalar>& psi) {
  if (!all_finite(psi)) {
    throw std::invalid_argument("joint_distribution_bruteforce: state is not finite");
  }
  const Scalar norm2 = psi.squaredNorm();
  if (std::abs(std::sqrt(norm2) - Scalar(1)) > Scalar(kStateNormSlack)) {
    throw std::invalid_argument("joint_distribution_bruteforce: state is not normalized");
  }
  const OutcomeFrame<Scalar> frame = outcome_frame(pair);
  std::array<Scalar, 4> p{};
  for (std::size_t i = 0; i < 4; ++i) {
    p[i] = std::norm(inner(frame[i], psi)) / norm2;
  }
  return JointDistribution<Scalar>(p);
}

/// Bell-state amplitudes written as four Kronecker-delta-gated terms:
///
///   p_{k,l} = 1/2 | (-1)^{k+l} e^{-i(eta+zeta)} tr_k(mu/2) tr_l(nu/2) [t=0]
///                 + (-1)^k     e^{-i eta}       tr_k(mu/2) tr_{l+1}(nu/2) [t=1]
///                 + (-1)^{s+l} e^{-i zeta}      tr_{k+1}(mu/2) tr_l(nu/2) [t=1]
///                 + (-1)^s                      tr_{k+1}(mu/2) tr_{l+1}(nu/2) [t=0] |^2
template <typename Scalar>
JointDistribution<Scalar> joint_distribution_amplitude(const ObservablePair<Scalar>& pair,
                                                       BellLabel label) {
  const Scalar half_mu = pair.first.polar() / 2;
  const Scalar half_nu = pair.second.polar() / 2;
  const Scalar eta = pair.first.azimuth();
  const Scalar zeta = pair.second.azimuth();
  const int s = label.s();
  const int t = label.t();
  const auto sign = [](int power) { return (power & 1) == 0 ? Scalar(1) : Scalar(-1); };
  const auto delta = [](int a, int b) { return ((a - b) & 1) == 0 ? Scalar(1) : Scalar(0); };

  std::array<Scalar, 4> p{};
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      const Complex<Scalar> amp =
          sign(k + l) * std::polar(Scalar(1), -(eta + zeta)) * cos_or_sin(k, half_mu) *
              cos_or_sin(l, half_nu) * delta(0, t) +
          sign(k) * std::polar(Scalar(1), -eta) * cos_or_sin(k, half_mu) *
              cos_or_sin(l + 1, half_nu) * delta(1, t) +
          sign(s + l) * std::polar(Scalar(1), -zeta) * cos_or_sin(k + 1, half_mu) *
              cos_or_sin(l, half_nu) * delta(0, t + 1) +
          sign(s) * cos_or_sin(k + 1, half_mu) * cos_or_sin(l + 1, half_nu) * delta(1, t + 1);
      p[JointDistribution<Scalar>::index(k, l)] = std::norm(amp) / 2;
    }
  }
  return JointDistribution<Scalar>(p);
}

/// cos(a) cos(b) sin(a) sin(b).
template <typename Scalar>
Scalar trig_product(Scalar a, Scalar b) {
  return std::cos(a) * std::cos(b) * std::sin(a) * std::sin(b);
}

/// Both closed-form expressions for the diagonal (p00 = p11) and off-diagonal
/// (p01 = p10) cells of a Bell-state distribution. The primary forms use
/// mu + (-1)^s nu; the alternates use mu + (-1)^{s+1} nu.
template <typename Scalar>
struct ClosedFormTerms {
  Scalar diagonal;
  Scalar off_diagonal;
  Scalar diagonal_alt;
  Scalar off_diagonal_alt;
};

template <typename Scalar>
ClosedFormTerms<Scalar> closed_form_terms(const ObservablePair<Scalar>& pair, BellLabel label) {
  const Scalar mu = pair.first.polar();
  const Scalar nu = pair.second.polar();
  const Scalar eta = pair.first.azimuth();
  const Scalar zeta = pair.second.azimuth();
  const int s = label.s();
  const int t = label.t();
  const auto sign = [](int power) { return (power & 1) == 0 ? Scalar(1) : Scalar(-1); };
  const auto sq = [](Scalar x) { return x * x; };

  const Scalar polar_sum = (mu + sign(s) * nu) / 2;
  const Scalar polar_alt = (mu + sign(s + 1) * nu) / 2;
  const Scalar azimuth_sum = (eta + sign(t) * zeta) / 2;
  const Scalar cross = trig_product(mu / 2, nu / 2);

  ClosedFormTerms<Scalar> out{};
  out.diagonal = sq(cos_or_sin(t, polar_sum)) / 2 +
                 2 * sign(s + t) * sq(cos_or_sin(t, azimuth_sum)) * cross;
  out.diagonal_alt = sq(cos_or_sin(t, polar_alt)) / 2 +
                     2 * sign(s + t + 1) * sq(cos_or_sin(t + 1, azimuth_sum)) * cross;
  out.off_diagonal = sq(cos_or_sin(t + 1, polar_sum)) / 2 +
                     2 * sign(s + t + 1) * sq(cos_or_sin(t, azimuth_sum)) * cross;
  out.off_diagonal_alt = sq(cos_or_sin(t + 1, polar_alt)) / 2 +
                         2 * sign(s + t) * sq(cos_or_sin(t + 1, azimuth_sum)) * cross;
  return out;
}

/// Closed-form Bell-state distribution. Throws ConsistencyError if the two
/// closed-form variants disagree by more than kClosedFormAgreement.
template <typename Scalar>
JointDistribution<Scalar> joint_distribution_closed(const ObservablePair<Scalar>& pair,
                                                    BellLabel label) {
  const ClosedFormTerms<Scalar> c = closed_form_terms(pair, label);
  const Scalar gap =
      std::max(std::abs(c.diagonal - c.diagonal_alt), std::abs(c.off_diagonal - c.off_diagonal_alt));
  if (!(gap <= Scalar(kClosedFormAgreement))) {
    throw ConsistencyError("closed-form variants disagree by " + std::to_string(double(gap)));
  }
  return JointDistribution<Scalar>({c.diagonal, c.off_diagonal, c.off_diagonal, c.diagonal});
}

template <typename Scalar>
struct Marginals {
  std::array<Scalar, 2> first;   // Pr(A = lambda_k) = p_{k,0} + p_{k,1}
  std::array<Scalar, 2> second;  // Pr(B = lambda_l) = p_{0,l} + p_{1,l}
};

template <typename Scalar>
Marginals<Scalar> marginals(const JointDistribution<Scalar>& dist) {
  const auto& p = dist.values();
  return {{p[0] + p[1], p[2] + p[3]}, {p[0] + p[2], p[1] + p[3]}};
}

/// p00 = p11 and p01 = p10.
template <typename Scalar>
bool has_klein_symmetry(const JointDistribution<Scalar>& dist, Scalar tol) {
  const auto& p = dist.values();
  return std::abs(p[0] - p[3]) <= tol && std::abs(p[1] - p[2]) <= tol;
}

/// Pr(A = lambda_k) = Pr(B = lambda_l) for every k, l.
template <typename Scalar>
bool has_equal_marginals(const JointDistribution<Scalar>& dist, Scalar tol) {
  const Marginals<Scalar> m = marginals(dist);
  for (Scalar a : m.first) {
    for (Scalar b : m.second) {
      if (std::abs(a - b) > tol) return false;
    }
  }
  return true;
}

/// Frobenius norm of [A (x) I, I (x) B].
template <typename Scalar>
Scalar commutator_norm(const ObservablePair<Scalar>& pair) {
  return frobenius_norm(
      commutator(lift_first(matrix(pair.first)), lift_second(matrix(pair.second))));
}

}  // namespace crosstalk
