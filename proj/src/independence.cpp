#include "crosstalk/independence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace crosstalk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * std::numbers::pi;

void require_bit(int b, const char* name) {
  if (b != 0 && b != 1) throw std::invalid_argument(std::string(name) + " must be 0 or 1");
}

void require_polar(double angle, const char* name) {
  if (!std::isfinite(angle) || angle < -kPolarSlack || angle > kPi + kPolarSlack) {
    throw std::domain_error(std::string(name) + " outside [0, pi]");
  }
}

double require_azimuth(double angle, const char* name) {
  if (!std::isfinite(angle)) throw std::domain_error(std::string(name) + " is not finite");
  return Observabled::normalize_azimuth(angle);
}

bool hits_target(double value, const std::vector<double>& targets, double tol) {
  return std::any_of(targets.begin(), targets.end(),
                     [&](double target) { return std::abs(value - target) <= tol; });
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

double theta_minus_quarter(const PairFamily& family, BellLabel label, double x) {
  return joint_distribution_closed(family.pair_at(x), label).theta() - 0.25;
}

}  // namespace

std::string to_string(CoordinatePlane plane) {
  switch (plane) {
    case CoordinatePlane::X:
      return "x0";
    case CoordinatePlane::Y:
      return "y0";
    case CoordinatePlane::Z:
      return "z0";
  }
  return "?";
}

PlaneCondition plane_condition(CoordinatePlane plane, BellLabel label) {
  const std::vector<double> sums{kPi / 2, 3 * kPi / 2};
  switch (plane) {
    case CoordinatePlane::X:
      if (label.s() == 0) return {plane, label, ConditionKind::Sum, sums};
      return {plane, label, ConditionKind::AbsDiff, {kPi / 2}};
    case CoordinatePlane::Y:
      if (label.t() != label.s()) return {plane, label, ConditionKind::Sum, sums};
      return {plane, label, ConditionKind::AbsDiff, {kPi / 2}};
    case CoordinatePlane::Z:
      if (label.t() == 0) {
        return {plane, label, ConditionKind::Sum,
                {kPi / 2, 3 * kPi / 2, 5 * kPi / 2, 7 * kPi / 2}};
      }
      return {plane, label, ConditionKind::AbsDiff, {kPi / 2, 3 * kPi / 2}};
  }
  throw std::invalid_argument("plane_condition: unknown plane");
}

bool satisfies(const PlaneCondition& condition, double first, double second, double angle_tol) {
  if (!(angle_tol > 0)) throw std::invalid_argument("angle tolerance must be positive");
  if (condition.plane == CoordinatePlane::Z) {
    first = require_azimuth(first, "eta");
    second = require_azimuth(second, "zeta");
  } else {
    require_polar(first, "mu");
    require_polar(second, "nu");
  }
  const double value =
      condition.kind == ConditionKind::Sum ? first + second : std::abs(first - second);
  return hits_target(value, condition.targets, angle_tol);
}

bool condition_x_plane(double mu, double nu, int s, double angle_tol) {
  require_bit(s, "s");
  return satisfies(plane_condition(CoordinatePlane::X, BellLabel{s, 0}), mu, nu, angle_tol);
}

bool condition_y_plane(double mu, double nu, int s, int t, double angle_tol) {
  require_bit(s, "s");
  require_bit(t, "t");
  return satisfies(plane_condition(CoordinatePlane::Y, BellLabel{s, t}), mu, nu, angle_tol);
}

bool condition_z_plane(double eta, double zeta, int t, double angle_tol) {
  require_bit(t, "t");
  return satisfies(plane_condition(CoordinatePlane::Z, BellLabel{0, t}), eta, zeta, angle_tol);
}

bool in_plane_family(CoordinatePlane plane, const Observabled& obs, double tol) {
  const PlaneClass cls = classify_plane(obs, tol);
  const double mu = obs.polar();
  const double eta = obs.azimuth();
  const bool at_pole = near(mu, 0, tol) || near(mu, kPi, tol);
  switch (plane) {
    case CoordinatePlane::X:
      return cls.x_zero && (at_pole || near(eta, kPi / 2, tol));
    case CoordinatePlane::Y:
      return cls.y_zero && (at_pole || near(eta, 0, tol) || near(eta, kTwoPi, tol));
    case CoordinatePlane::Z:
      return cls.z_zero && near(mu, kPi / 2, tol);
  }
  return false;
}

bool plane_predicate(CoordinatePlane plane, const ObservablePair<double>& pair, BellLabel label,
                     double angle_tol) {
  if (!in_plane_family(plane, pair.first) || !in_plane_family(plane, pair.second)) {
    throw std::invalid_argument("observable pair is not in the " + to_string(plane) +
                                " plane family");
  }
  const PlaneCondition condition = plane_condition(plane, label);
  if (plane == CoordinatePlane::Z) {
    return satisfies(condition, pair.first.azimuth(), pair.second.azimuth(), angle_tol);
  }
  return satisfies(condition, pair.first.polar(), pair.second.polar(), angle_tol);
}

bool check_consistency(bool predicate_result, CoordinatePlane plane,
                       const ObservablePair<double>& pair, BellLabel label, double theta_tol) {
  if (!in_plane_family(plane, pair.first) || !in_plane_family(plane, pair.second)) {
    throw std::invalid_argument("observable pair is not in the " + to_string(plane) +
                                " plane family");
  }
  return predicate_result ==
         is_informationally_independent(joint_distribution_closed(pair, label), theta_tol);
}

ConsistencyCheck check_consistency(CoordinatePlane plane, const ObservablePair<double>& pair,
                                   BellLabel label, double theta_tol, double angle_tol) {
  ConsistencyCheck out;
  out.predicate = plane_predicate(plane, pair, label, angle_tol);
  out.criterion =
      is_informationally_independent(joint_distribution_closed(pair, label), theta_tol);
  return out;
}

std::vector<double> partner_solutions(const PlaneCondition& condition, double anchor,
                                      double angle_tol) {
  const bool azimuthal = condition.plane == CoordinatePlane::Z;
  if (azimuthal) {
    anchor = require_azimuth(anchor, "eta");
  } else {
    require_polar(anchor, "mu");
  }
  const double hi = azimuthal ? kTwoPi : kPi;

  std::vector<double> candidates;
  for (double target : condition.targets) {
    if (condition.kind == ConditionKind::Sum) {
      candidates.push_back(target - anchor);
    } else {
      candidates.push_back(anchor - target);
      candidates.push_back(anchor + target);
    }
  }

  std::vector<double> out;
  for (double c : candidates) {
    if (azimuthal && near(c, hi, angle_tol)) c = 0;  // 2 pi is azimuth 0
    if (c < -angle_tol || c > hi + angle_tol) continue;
    if (azimuthal && c >= hi) continue;
    c = std::clamp(c, 0.0, hi);
    if (std::none_of(out.begin(), out.end(), [&](double v) { return near(v, c, angle_tol); })) {
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IndependenceRoot> solve_independence(const PairFamily& family, BellLabel label,
                                                 int grid) {
  if (grid < 2) throw std::invalid_argument("solve_independence: grid must be at least 2");
  if (!family.pair_at) throw std::invalid_argument("solve_independence: empty family");

  const auto point = [&](int i) {
    if (i == grid - 1) return family.stop;
    return family.start + (family.stop - family.start) * double(i) / double(grid - 1);
  };

  std::vector<double> xs(grid);
  std::vector<double> fs(grid);
  for (int i = 0; i < grid; ++i) {
    xs[i] = point(i);
    fs[i] = theta_minus_quarter(family, label, xs[i]);
  }

  std::vector<IndependenceRoot> roots;
  for (int i = 0; i < grid; ++i) {
    if (std::abs(fs[i]) <= kRootTolerance) {
      roots.push_back({xs[i], fs[i] + 0.25, 0.0});
      continue;
    }
    if (i + 1 >= grid || std::abs(fs[i + 1]) <= kRootTolerance) continue;
    if ((fs[i] < 0) == (fs[i + 1] < 0)) continue;

    double lo = xs[i];
    double hi = xs[i + 1];
    double f_lo = fs[i];
    double mid = 0.5 * (lo + hi);
    double f_mid = theta_minus_quarter(family, label, mid);
    for (int iter = 0; iter < 200 && f_mid != 0; ++iter) {
      if ((f_mid < 0) == (f_lo < 0)) {
        lo = mid;
        f_lo = f_mid;
      } else {
        hi = mid;
      }
      const double next = 0.5 * (lo + hi);
      if (next == lo || next == hi) break;
      mid = next;
      f_mid = theta_minus_quarter(family, label, mid);
    }
    if (std::abs(f_mid) <= kRootTolerance) {
      roots.push_back({mid, f_mid + 0.25, hi - lo});
    }
  }

  std::sort(roots.begin(), roots.end(), [](const IndependenceRoot& a, const IndependenceRoot& b) {
    return a.sweep_parameter < b.sweep_parameter;
  });
  return roots;
}

}  // namespace crosstalk
