// Single-qubit observables with spectrum {1, -1}, parameterized by a point
// (polar, azimuth) on the Bloch sphere:
//
//   A = [[cos mu,            e^{-i eta} sin mu],
//        [e^{i eta} sin mu,  -cos mu          ]]
//
// with mu in [0, pi] and eta in [0, 2 pi).

#pragma once

#include "crosstalk/qmath.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace crosstalk {

/// Slack for the polar-angle domain check; values this close to the
/// interval are clamped onto it rather than rejected.
inline constexpr double kPolarSlack = 1e-12;

/// Default tolerance for coordinate-plane classification.
inline constexpr double kPlaneTolerance = 1e-9;

template <typename Scalar = double>
class Observable {
 public:
  /// Throws std::domain_error if polar is outside [0, pi] or either angle is
  /// not finite. The azimuth is reduced modulo 2 pi.
  Observable(Scalar polar, Scalar azimuth) {
    const Scalar pi = std::numbers::pi_v<Scalar>;
    if (!std::isfinite(polar) || !std::isfinite(azimuth)) {
      throw std::domain_error("Observable: angles must be finite");
    }
    if (polar < -Scalar(kPolarSlack) || polar > pi + Scalar(kPolarSlack)) {
      throw std::domain_error("Observable: polar angle " + std::to_string(double(polar)) +
                              " outside [0, pi]");
    }
    polar_ = polar < Scalar(0) ? Scalar(0) : (polar > pi ? pi : polar);
    azimuth_ = normalize_azimuth(azimuth);
  }

  Scalar polar() const { return polar_; }
  Scalar azimuth() const { return azimuth_; }

  static Scalar normalize_azimuth(Scalar azimuth) {
    const Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
    Scalar r = std::fmod(azimuth, two_pi);
    if (r < 0) r += two_pi;
    if (r >= two_pi) r = 0;  // -tiny + 2 pi rounds up to 2 pi
    return r;
  }

  friend bool operator==(const Observable&, const Observable&) = default;

 private:
  Scalar polar_{};
  Scalar azimuth_{};
};

using Observabled = Observable<double>;

template <typename Scalar>
Mat2<Scalar> matrix(const Observable<Scalar>& obs) {
  const Scalar mu = obs.polar();
  const Complex<Scalar> phase = std::polar(Scalar(1), -obs.azimuth());
  Mat2<Scalar> m;
  m << Complex<Scalar>(std::cos(mu)), phase * std::sin(mu), std::conj(phase) * std::sin(mu),
      Complex<Scalar>(-std::cos(mu));
  return m;
}

/// lambda_0 = 1, lambda_1 = -1.
inline double eigenvalue(int k) {
  if (k != 0 && k != 1) throw std::invalid_argument("eigenvalue: k must be 0 or 1");
  return k == 0 ? 1.0 : -1.0;
}

/// Unit eigenvector for eigenvalue lambda_k:
///   (-1)^k e^{-i eta} tr_k(mu/2) |0> + tr_{k+1}(mu/2) |1>
/// where tr_0 = cos and tr_1 = sin. At mu = 0 or pi the azimuth survives only
/// as a global phase.
template <typename Scalar>
Vec2<Scalar> eigenvector(const Observable<Scalar>& obs, int k) {
  if (k != 0 && k != 1) throw std::invalid_argument("eigenvector: k must be 0 or 1");
  const Scalar half = obs.polar() / 2;
  const Scalar sign = k == 0 ? Scalar(1) : Scalar(-1);
  Vec2<Scalar> u;
  u(0) = sign * std::polar(Scalar(1), -obs.azimuth()) * cos_or_sin(k, half);
  u(1) = Complex<Scalar>(cos_or_sin(k + 1, half));
  return u;
}

struct BlochDirection {
  double x = 0;
  double y = 0;
  double z = 0;
};

template <typename Scalar>
BlochDirection direction(const Observable<Scalar>& obs) {
  const double mu = double(obs.polar());
  const double eta = double(obs.azimuth());
  return {std::sin(mu) * std::cos(eta), std::sin(mu) * std::sin(eta), std::cos(mu)};
}

/// Which coordinate planes of the Bloch sphere a direction lies in. More
/// than one flag can be set (sigma3 lies in both x=0 and y=0).
struct PlaneClass {
  bool x_zero = false;
  bool y_zero = false;
  bool z_zero = false;
  double tolerance = kPlaneTolerance;

  bool generic() const { return !x_zero && !y_zero && !z_zero; }
};

template <typename Scalar>
PlaneClass classify_plane(const Observable<Scalar>& obs, double tol = kPlaneTolerance) {
  if (!(tol > 0)) throw std::invalid_argument("classify_plane: tolerance must be positive");
  const BlochDirection d = direction(obs);
  return {std::abs(d.x) <= tol, std::abs(d.y) <= tol, std::abs(d.z) <= tol, tol};
}

enum class NamedGate { Sigma1, Sigma2, Sigma3, Hadamard };

template <typename Scalar = double>
Observable<Scalar> named_gate(NamedGate gate) {
  const Scalar pi = std::numbers::pi_v<Scalar>;
  switch (gate) {
    case NamedGate::Sigma1:
      return {pi / 2, 0};
    case NamedGate::Sigma2:
      return {pi / 2, pi / 2};
    case NamedGate::Sigma3:
      return {0, 0};
    case NamedGate::Hadamard:
      return {pi / 4, 0};
  }
  throw std::invalid_argument("named_gate: unknown gate");
}

}  // namespace crosstalk
