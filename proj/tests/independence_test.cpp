#include "crosstalk/independence.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace crosstalk {
namespace {

using testing::Generator;
using testing::kPi;

constexpr double kDeg = kPi / 180;

TEST(XPlane, Predicate) {
  EXPECT_TRUE(condition_x_plane(kPi / 4, kPi / 4, 0));
  EXPECT_TRUE(condition_x_plane(kPi, kPi / 2, 0));
  EXPECT_FALSE(condition_x_plane(kPi / 2, kPi / 2, 1));
  EXPECT_TRUE(condition_x_plane(0, kPi / 2, 1));
  EXPECT_THROW(condition_x_plane(-1, 0, 0), std::domain_error);
  EXPECT_THROW(condition_x_plane(0, 0, 2), std::invalid_argument);
}

TEST(YPlane, Predicate) {
  EXPECT_TRUE(condition_y_plane(kPi / 4, kPi / 4, 0, 1));   // H, H: sum pi/2
  EXPECT_TRUE(condition_y_plane(kPi / 2, 0, 1, 1));         // sigma1, sigma3: |diff| pi/2
  EXPECT_FALSE(condition_y_plane(kPi / 4, kPi / 4, 0, 0));  // diff 0
  EXPECT_THROW(condition_y_plane(0, 4, 0, 0), std::domain_error);
}

TEST(ZPlane, Predicate) {
  EXPECT_TRUE(condition_z_plane(0, kPi / 2, 0));          // sigma1, sigma2
  EXPECT_TRUE(condition_z_plane(3 * kPi / 2, 0, 1));      // diff 3pi/2
  EXPECT_FALSE(condition_z_plane(kPi, kPi, 0));           // sum 2pi
  EXPECT_TRUE(condition_z_plane(2 * kPi, kPi / 2, 0));    // 2pi is azimuth 0
  EXPECT_THROW(condition_z_plane(NAN, 0, 0), std::domain_error);
}

TEST(Predicates, SymmetricUnderSwap) {
  Generator gen(51);
  for (int i = 0; i < 2000; ++i) {
    // Snap to a 1-degree grid so both truth values occur.
    const double a = std::round(gen.uniform(0, 180)) * kDeg;
    const double b = std::round(gen.uniform(0, 180)) * kDeg;
    const double e = std::round(gen.uniform(0, 359)) * kDeg;
    const double f = std::round(gen.uniform(0, 359)) * kDeg;
    const int s = gen.bit();
    const int t = gen.bit();
    ASSERT_EQ(condition_x_plane(a, b, s), condition_x_plane(b, a, s));
    ASSERT_EQ(condition_y_plane(a, b, s, t), condition_y_plane(b, a, s, t));
    ASSERT_EQ(condition_z_plane(e, f, t), condition_z_plane(f, e, t));
  }
}

TEST(PlaneFamily, Membership) {
  EXPECT_TRUE(in_plane_family(CoordinatePlane::X, Observabled(1.0, kPi / 2)));
  EXPECT_FALSE(in_plane_family(CoordinatePlane::X, Observabled(1.0, 3 * kPi / 2)));
  EXPECT_TRUE(in_plane_family(CoordinatePlane::X, Observabled(0, 0)));  // pole
  EXPECT_TRUE(in_plane_family(CoordinatePlane::Y, Observabled(1.0, 0)));
  EXPECT_FALSE(in_plane_family(CoordinatePlane::Y, Observabled(1.0, kPi)));
  EXPECT_TRUE(in_plane_family(CoordinatePlane::Z, Observabled(kPi / 2, 4.0)));
  EXPECT_FALSE(in_plane_family(CoordinatePlane::Z, Observabled(1.0, 4.0)));
}

TEST(CheckConsistency, Examples) {
  // y = 0, s = t = 1, sigma1 / sigma3.
  const ObservablePair<double> s1s3{Observabled(kPi / 2, 0), Observabled(0, 0)};
  const ConsistencyCheck y = check_consistency(CoordinatePlane::Y, s1s3, {1, 1});
  EXPECT_TRUE(y.predicate);
  EXPECT_TRUE(y.criterion);

  // z = 0, eta = zeta = pi/4, t = 0.
  const ObservablePair<double> z{Observabled(kPi / 2, kPi / 4), Observabled(kPi / 2, kPi / 4)};
  const ConsistencyCheck zc = check_consistency(CoordinatePlane::Z, z, {0, 0});
  EXPECT_TRUE(zc.predicate);
  EXPECT_TRUE(zc.criterion);
  EXPECT_TRUE(check_consistency(true, CoordinatePlane::Z, z, {0, 0}));
  EXPECT_FALSE(check_consistency(false, CoordinatePlane::Z, z, {0, 0}));

  // Outside the plane family is a usage error.
  EXPECT_THROW(check_consistency(CoordinatePlane::Z, s1s3, {0, 0}), std::invalid_argument);
  EXPECT_THROW(check_consistency(true, CoordinatePlane::Z, s1s3, {0, 0}), std::invalid_argument);
}

TEST(CheckConsistency, XPlaneGridSZeroTZero) {
  int disagreements = 0;
  int independent = 0;
  for (int i = 0; i <= 180; ++i) {
    for (int j = 0; j <= 180; ++j) {
      const ObservablePair<double> pair{Observabled(i * kDeg, kPi / 2),
                                        Observabled(j * kDeg, kPi / 2)};
      const ConsistencyCheck c = check_consistency(CoordinatePlane::X, pair, {0, 0});
      disagreements += c.agree() ? 0 : 1;
      independent += c.criterion ? 1 : 0;
    }
  }
  EXPECT_EQ(disagreements, 0);
  // mu + nu = 90 deg: 91 points; mu + nu = 270 deg: 91 points.
  EXPECT_EQ(independent, 182);
}

TEST(PlaneCondition, Targets) {
  const PlaneCondition z1 = plane_condition(CoordinatePlane::Z, {1, 1});
  EXPECT_EQ(z1.kind, ConditionKind::AbsDiff);
  EXPECT_EQ(z1.targets.size(), 2u);
  const PlaneCondition z0 = plane_condition(CoordinatePlane::Z, {0, 0});
  EXPECT_EQ(z0.kind, ConditionKind::Sum);
  EXPECT_EQ(z0.targets.size(), 4u);
  EXPECT_EQ(plane_condition(CoordinatePlane::Y, {0, 1}).kind, ConditionKind::Sum);
  EXPECT_EQ(plane_condition(CoordinatePlane::Y, {1, 1}).kind, ConditionKind::AbsDiff);
  EXPECT_EQ(plane_condition(CoordinatePlane::X, {1, 0}).kind, ConditionKind::AbsDiff);
}

TEST(PartnerSolutions, Examples) {
  const auto y = partner_solutions(plane_condition(CoordinatePlane::Y, {1, 1}), kPi / 2);
  ASSERT_EQ(y.size(), 2u);
  EXPECT_NEAR(y[0], 0, 1e-15);
  EXPECT_NEAR(y[1], kPi, 1e-15);

  const auto x = partner_solutions(plane_condition(CoordinatePlane::X, {0, 0}), kPi / 4);
  ASSERT_EQ(x.size(), 1u);
  EXPECT_NEAR(x[0], kPi / 4, 1e-15);

  // z = 0, t = 1, eta = pi/4: zeta in {3pi/4, 7pi/4} (eta - 3pi/2 < 0 wraps out).
  const auto z = partner_solutions(plane_condition(CoordinatePlane::Z, {0, 1}), kPi / 4);
  ASSERT_EQ(z.size(), 2u);
  EXPECT_NEAR(z[0], 3 * kPi / 4, 1e-15);
  EXPECT_NEAR(z[1], 7 * kPi / 4, 1e-15);

  // Every partner satisfies the predicate.
  for (BellLabel label : all_bell_labels()) {
    for (CoordinatePlane plane : {CoordinatePlane::X, CoordinatePlane::Y, CoordinatePlane::Z}) {
      const PlaneCondition c = plane_condition(plane, label);
      for (int a = 0; a < 180; a += 7) {
        for (double p : partner_solutions(c, a * kDeg)) {
          EXPECT_TRUE(satisfies(c, a * kDeg, p));
        }
      }
    }
  }
}

PairFamily x_plane_nu_path(double mu) {
  return {[mu](double nu) {
            return ObservablePair<double>{Observabled(mu, kPi / 2), Observabled(nu, kPi / 2)};
          },
          0.0, kPi};
}

TEST(Solve, XPlaneSumRoot) {
  const auto roots = solve_independence(x_plane_nu_path(kPi / 4), {0, 0}, 64);
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_NEAR(roots[0].sweep_parameter, kPi / 4, 1e-8);
  EXPECT_LE(std::abs(roots[0].theta_at_root - 0.25), 1e-10);
}

TEST(Solve, XPlaneDiffRoot) {
  const auto roots = solve_independence(x_plane_nu_path(0), {1, 0}, 64);
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_NEAR(roots[0].sweep_parameter, kPi / 2, 1e-8);
}

TEST(Solve, ConstantFamilyHasNoRoots) {
  const PairFamily constant{[](double) {
                              return ObservablePair<double>{Observabled(0, 0), Observabled(0, 0)};
                            },
                            0.0, 1.0};
  EXPECT_TRUE(solve_independence(constant, {0, 0}, 16).empty());
  EXPECT_THROW(solve_independence(constant, {0, 0}, 1), std::invalid_argument);
}

TEST(Solve, RootsSatisfyPlaneConditions) {
  Generator gen(52);
  for (int trial = 0; trial < 60; ++trial) {
    const BellLabel label = gen.label();
    const double anchor = gen.uniform(0, kPi);
    // y = 0 plane, varying nu.
    const PairFamily y{[anchor](double nu) {
                         return ObservablePair<double>{Observabled(anchor, 0), Observabled(nu, 0)};
                       },
                       0.0, kPi};
    const auto roots = solve_independence(y, label, 97);
    const auto expected = partner_solutions(plane_condition(CoordinatePlane::Y, label), anchor);
    ASSERT_EQ(roots.size(), expected.size()) << "anchor " << anchor;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      EXPECT_NEAR(roots[i].sweep_parameter, expected[i], 1e-8);
      EXPECT_TRUE(condition_y_plane(anchor, roots[i].sweep_parameter, label.s(), label.t(), 1e-8));
      EXPECT_LE(std::abs(roots[i].theta_at_root - 0.25), 1e-10);
    }

    // z = 0 plane, varying zeta.
    const double eta = gen.uniform(0, 2 * kPi);
    const PairFamily z{[eta](double zeta) {
                         return ObservablePair<double>{Observabled(kPi / 2, eta),
                                                       Observabled(kPi / 2, zeta)};
                       },
                       0.0, 2 * kPi - 1e-9};
    const auto zroots = solve_independence(z, label, 211);
    const auto zexpected = partner_solutions(plane_condition(CoordinatePlane::Z, label), eta);
    ASSERT_EQ(zroots.size(), zexpected.size()) << "eta " << eta;
    for (std::size_t i = 0; i < zroots.size(); ++i) {
      EXPECT_NEAR(zroots[i].sweep_parameter, zexpected[i], 1e-8);
    }
  }
}

TEST(Solve, GenericFamilyRootsHitQuarter) {
  // Off the coordinate planes: rotate the second observable's polar angle.
  const PairFamily generic{[](double nu) {
                             return ObservablePair<double>{Observabled(1.1, 0.4),
                                                           Observabled(nu, 2.3)};
                           },
                           0.0, kPi};
  const auto roots = solve_independence(generic, {0, 1}, 200);
  ASSERT_FALSE(roots.empty());
  for (const auto& r : roots) {
    EXPECT_LE(std::abs(r.theta_at_root - 0.25), 1e-10);
    const auto d = joint_distribution_bruteforce(generic.pair_at(r.sweep_parameter),
                                                 bell_state({0, 1}));
    EXPECT_NEAR(d.theta(), 0.25, 1e-10);
  }
  for (std::size_t i = 1; i < roots.size(); ++i) {
    EXPECT_LT(roots[i - 1].sweep_parameter, roots[i].sweep_parameter);
  }
}

}  // namespace
}  // namespace crosstalk
