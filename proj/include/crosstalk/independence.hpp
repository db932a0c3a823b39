// Informational independence of two observables on a Bell state.
//
// When both Bloch directions lie in one coordinate plane the condition
// theta = 1/4 reduces to an angle sum or difference hitting a finite set:
//
//   x = 0 (eta = zeta = pi/2):  s = 0: mu + nu in {pi/2, 3pi/2};   s = 1: |mu - nu| = pi/2
//   y = 0 (eta = zeta = 0):     t != s: mu + nu in {pi/2, 3pi/2};  t = s: |mu - nu| = pi/2
//   z = 0 (mu = nu = pi/2):     t = 0: eta + zeta in {pi/2, 3pi/2, 5pi/2, 7pi/2}
//                               t = 1: |eta - zeta| in {pi/2, 3pi/2}
//
// Off the coordinate planes the locus is found numerically by bisection along
// a one-parameter family of pairs.

#pragma once

#include "crosstalk/bipartite.hpp"
#include "crosstalk/information.hpp"

#include <functional>
#include <string>
#include <vector>

namespace crosstalk {

inline constexpr double kAngleTolerance = 1e-9;
/// Required accuracy |theta - 1/4| of a reported root.
inline constexpr double kRootTolerance = 1e-10;

enum class CoordinatePlane { X, Y, Z };

enum class ConditionKind { Sum, AbsDiff };

/// The closed-form independence condition for one plane and Bell label. For
/// X and Y the angles are the polar angles (mu, nu); for Z the azimuths.
struct PlaneCondition {
  CoordinatePlane plane;
  BellLabel label;
  ConditionKind kind;
  std::vector<double> targets;
};

PlaneCondition plane_condition(CoordinatePlane plane, BellLabel label);

/// Whether (first, second) satisfies the condition within angle_tol. Polar
/// angles must be in [0, pi]; azimuths are reduced modulo 2 pi.
bool satisfies(const PlaneCondition& condition, double first, double second,
               double angle_tol = kAngleTolerance);

bool condition_x_plane(double mu, double nu, int s, double angle_tol = kAngleTolerance);
bool condition_y_plane(double mu, double nu, int s, int t, double angle_tol = kAngleTolerance);
bool condition_z_plane(double eta, double zeta, int t, double angle_tol = kAngleTolerance);

/// Whether obs lies in the plane and in the chart the plane predicate is
/// written for (eta = pi/2 for X, eta = 0 for Y, mu = pi/2 for Z; at mu = 0
/// or pi the azimuth is immaterial for X and Y).
bool in_plane_family(CoordinatePlane plane, const Observabled& obs,
                     double tol = kPlaneTolerance);

/// Evaluates the plane predicate for the pair. Throws std::invalid_argument if
/// either observable is outside the plane family.
bool plane_predicate(CoordinatePlane plane, const ObservablePair<double>& pair, BellLabel label,
                     double angle_tol = kAngleTolerance);

struct ConsistencyCheck {
  bool predicate = false;
  bool criterion = false;  // |theta - 1/4| <= theta_tol on the closed form
  bool agree() const { return predicate == criterion; }
};

/// Compares a plane predicate result against the theta criterion.
bool check_consistency(bool predicate_result, CoordinatePlane plane,
                       const ObservablePair<double>& pair, BellLabel label,
                       double theta_tol = kThetaTolerance);

/// Evaluates both sides for the pair.
ConsistencyCheck check_consistency(CoordinatePlane plane, const ObservablePair<double>& pair,
                                   BellLabel label, double theta_tol = kThetaTolerance,
                                   double angle_tol = kAngleTolerance);

/// Solutions in the partner angle's domain for a fixed anchor angle: nu in
/// [0, pi] given mu (X, Y), or zeta in [0, 2 pi) given eta (Z). Sorted.
std::vector<double> partner_solutions(const PlaneCondition& condition, double anchor,
                                      double angle_tol = kAngleTolerance);

/// A one-parameter family of observable pairs over [start, stop].
struct PairFamily {
  std::function<ObservablePair<double>(double)> pair_at;
  double start = 0;
  double stop = 1;
};

struct IndependenceRoot {
  double sweep_parameter = 0;
  double theta_at_root = 0;
  double bracket_width = 0;
};

/// Brackets every sign change of theta - 1/4 over `grid` equally spaced
/// points and bisects each one. A zero that touches 1/4 without crossing is
/// only found if some grid point is within kRootTolerance of it. Roots come
/// back in ascending parameter order.
std::vector<IndependenceRoot> solve_independence(const PairFamily& family, BellLabel label,
                                                 int grid);

std::string to_string(CoordinatePlane plane);

}  // namespace crosstalk
