#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "lcmc/bvp.hpp"

using namespace lcmc;

// mpmath references (30 digits) for rings (1, 2, 0, 0.5).
namespace ref {
constexpr double H0 = 0.390360029179413271741753854496;
constexpr double c_H02 = -0.400230592528741812211157326443;
constexpr double c_H08 = 0.795372366399544089868608420259;
constexpr double c_H01 = -0.619710473473063496541510015141;
constexpr double c_H1 = 1.15941375336662789313775282545;
constexpr double c_flat_H1 = 2.18723695595022286211128334221;  // rings (1, 2, 0, 0)
}  // namespace ref

namespace {
const ValidatedRingPair kRings = validate_rings({1.0, 2.0, 0.0, 0.5});
}

TEST(ThresholdH0, Formula) {
  EXPECT_NEAR(threshold_H0(kRings), ref::H0, 1e-15);
  EXPECT_NEAR(threshold_H0(kRings), 1.0 / std::sqrt(0.75 * 8.75), 1e-15);
  EXPECT_EQ(threshold_H0(validate_rings({1.0, 2.0, 0.0, 0.0})), 0.0);
}

TEST(ThresholdH0, OrientationError) {
  try {
    threshold_H0(validate_rings({1.0, 2.0, 0.5, 0.0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrientationError);
  }
}

TEST(ThresholdH0, PropertyCapThroughBothRings) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> rr(0.1, 5.0), frac(0.0, 0.99), aa(-3.0, 3.0);
  for (int k = 0; k < 200; ++k) {
    const double r = rr(rng), R = r + rr(rng), a = aa(rng);
    const double b = a + frac(rng) * (R - r);
    const auto rings = validate_rings({r, R, a, b});
    const double H0 = threshold_H0(rings);
    if (H0 == 0.0) continue;
    EXPECT_NEAR(closed_form_hyperbolic(R, H0, {r, a}), b, 1e-12 * std::max(1.0, std::abs(b)));
  }
}

TEST(Classify, AgainstThreshold) {
  EXPECT_EQ(classify(threshold_H0(kRings), kRings), Regime::HyperbolicCap);
  EXPECT_EQ(classify(1.0, kRings), Regime::PositiveC);
  EXPECT_EQ(classify(0.1, kRings), Regime::NegativeC);
  EXPECT_EQ(classify(0.0, kRings), Regime::MaximalCatenoid);
  EXPECT_EQ(classify(0.0, validate_rings({1.0, 2.0, 0.0, 0.0})), Regime::Plane);
  EXPECT_EQ(classify(0.3, validate_rings({1.0, 2.0, 0.0, 0.0})), Regime::PositiveC);
  EXPECT_THROW(classify(1.0, validate_rings({1.0, 2.0, 0.5, 0.0})), Error);
}

TEST(Classify, PredictRegimeCoversReversedOrientation) {
  const auto down = validate_rings({1.0, 2.0, 0.5, 0.0});
  EXPECT_EQ(predict_regime(1.0, down), Regime::PositiveC);
  EXPECT_EQ(predict_regime(0.0, down), Regime::MaximalCatenoid);
  // H < 0 on the mirrored problem behaves like H > 0 on the original.
  EXPECT_EQ(predict_regime(-0.1, down), Regime::NegativeC);
}

TEST(SolveC, HyperbolicCapIsItsOwnSolution) {
  const double b = closed_form_hyperbolic(2.0, 1.0, {1.0, 0.0});
  const auto sol = solve_c({validate_rings({1.0, 2.0, 0.0, b}), 1.0});
  EXPECT_EQ(sol.c, 0.0);
  EXPECT_EQ(sol.regime, Regime::HyperbolicCap);
  EXPECT_LE(sol.residual, kDefaultRootTol);
}

TEST(SolveC, EqualHeightsDipBelowBoundaryPlane) {
  const auto sol = solve_c({validate_rings({1.0, 2.0, 0.0, 0.0}), 1.0});
  EXPECT_GT(sol.c, 0.0);
  EXPECT_NEAR(sol.c, ref::c_flat_H1, 1e-9);
  EXPECT_EQ(sol.regime, Regime::PositiveC);
  const double turning = std::sqrt(sol.c);
  EXPECT_GT(turning, 1.0);
  EXPECT_LT(turning, 2.0);
  EXPECT_NEAR(sol.curve.slope(turning), 0.0, 1e-12);
  EXPECT_LT(sol.curve.height(turning), 0.0);
}

TEST(SolveC, BelowThresholdIsIncreasing) {
  const auto sol = solve_c({kRings, 0.1});
  EXPECT_LT(sol.c, 0.0);
  EXPECT_NEAR(sol.c, ref::c_H01, 1e-9);
  EXPECT_EQ(sol.regime, Regime::NegativeC);
  double prev = sol.curve.height(1.0);
  for (int i = 1; i <= 50; ++i) {
    const double h = sol.curve.height(1.0 + i / 50.0);
    EXPECT_GT(h, prev);
    prev = h;
  }
}

TEST(SolveC, ReferenceRoots) {
  EXPECT_NEAR(solve_c({kRings, 0.2}).c, ref::c_H02, 1e-9);
  EXPECT_NEAR(solve_c({kRings, 0.8}).c, ref::c_H08, 1e-9);
  EXPECT_NEAR(solve_c({kRings, 1.0}).c, ref::c_H1, 1e-9);
}

TEST(SolveC, PlaneForZeroCurvatureAndEqualHeights) {
  const auto sol = solve_c({validate_rings({1.0, 2.0, 0.0, 0.0}), 0.0});
  EXPECT_EQ(sol.c, 0.0);
  EXPECT_EQ(sol.regime, Regime::Plane);
  EXPECT_EQ(sol.residual, 0.0);
}

TEST(SolveC, MaximalCatenoidBothDirections) {
  const auto up = solve_c({kRings, 0.0});
  EXPECT_LT(up.c, 0.0);
  EXPECT_EQ(up.regime, Regime::MaximalCatenoid);
  const auto down = solve_c({validate_rings({1.0, 2.0, 0.5, 0.0}), 0.0});
  EXPECT_NEAR(down.c, -up.c, 1e-10);
}

TEST(SolveC, ReversedOrientationWithoutReflection) {
  const auto rings = validate_rings({1.0, 3.0, 0.7, -0.4});
  const auto sol = solve_c({rings, 0.6});
  EXPECT_GT(sol.c, 0.0);
  EXPECT_EQ(sol.regime, predict_regime(0.6, rings));
  EXPECT_FALSE(sol.H0.has_value());
  EXPECT_NEAR(sol.curve.height(3.0), -0.4, kDefaultRootTol);
}

TEST(SolvePlateau, NegativeHUsesReflection) {
  const RingPair rings{1.0, 2.0, 0.0, 0.5};
  const auto sol = solve_plateau(rings, -0.8);
  EXPECT_EQ(sol.curve.params().H, -0.8);
  EXPECT_EQ(sol.curve.parity(), Parity::Negative);
  EXPECT_NEAR(sol.curve.height(2.0), 0.5, kDefaultRootTol);
  EXPECT_EQ(sol.curve.height(1.0), 0.0);
  // mirrored problem: (1,2,0,-0.5) with H = 0.8
  const auto mirror = solve_c({validate_rings({1.0, 2.0, 0.0, -0.5}), 0.8});
  EXPECT_NEAR(sol.c, -mirror.c, 1e-12);
}

TEST(SolveC, RejectsNegativeH) { EXPECT_THROW(solve_c({kRings, -1.0}), Error); }

TEST(SolvePlateau, PropagatesNotSolvable) {
  try {
    solve_plateau({1.0, 2.0, 0.0, 1.5}, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSpacelikeSolvable);
  }
}

TEST(ShootingMap, PropertyStrictlyDecreasing) {
  for (double H : {0.0, 0.4, 2.0}) {
    double prev = shoot(kRings, H, -64.0);
    for (int k = -63; k <= 64; ++k) {
      const double v = shoot(kRings, H, k * 1.0);
      EXPECT_LT(v, prev) << "H=" << H << " c=" << k;
      prev = v;
    }
  }
}

TEST(ShootingMap, BracketLimits) {
  for (double H : {0.0, 0.5, 3.0}) {
    EXPECT_NEAR(shoot(kRings, H, 1e6), 0.0 - 1.0, 1e-3);
    EXPECT_NEAR(shoot(kRings, H, -1e6), 0.0 + 1.0, 1e-3);
  }
}

TEST(SolveC, PropertyTrichotomy) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> rr(0.2, 4.0), frac(0.05, 0.9), aa(-2.0, 2.0);
  for (int k = 0; k < 30; ++k) {
    const double r = rr(rng), R = r + rr(rng), a = aa(rng);
    const auto rings = validate_rings({r, R, a, a + frac(rng) * (R - r)});
    const double H0 = threshold_H0(rings);
    const auto lo = solve_c({rings, 0.5 * H0});
    const auto at = solve_c({rings, H0});
    const auto hi = solve_c({rings, 2.0 * H0});
    EXPECT_LT(lo.c, 0.0);
    EXPECT_EQ(at.c, 0.0);
    EXPECT_GT(hi.c, 0.0);
    EXPECT_EQ(lo.regime, classify(0.5 * H0, rings));
    EXPECT_EQ(at.regime, classify(H0, rings));
    EXPECT_EQ(hi.regime, classify(2.0 * H0, rings));
  }
}

TEST(SolveC, PropertyRoundTripAndSlab) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> rr(0.2, 3.0), frac(-0.95, 0.95), aa(-2.0, 2.0), HH(0.0, 4.0);
  for (int k = 0; k < 40; ++k) {
    const double r = rr(rng), R = r + rr(rng), a = aa(rng), b = a + frac(rng) * (R - r);
    const auto rings = validate_rings({r, R, a, b});
    const double H = HH(rng);
    const auto sol = solve_c({rings, H});
    EXPECT_EQ(sol.curve.height(r), a);
    EXPECT_NEAR(sol.curve.height(R), b, kDefaultRootTol);
    EXPECT_EQ(sol.regime, predict_regime(H, rings));

    const double lo = std::min(a, b), hi = std::max(a, b);
    double fmin = hi, fmax = lo;
    for (int i = 0; i <= 100; ++i) {
      const double f = sol.curve.height(r + (R - r) * i / 100.0);
      fmin = std::min(fmin, f);
      fmax = std::max(fmax, f);
    }
    if (sol.c <= 0.0 && b > a) {
      EXPECT_GE(fmin, lo - 1e-9);
      EXPECT_LE(fmax, hi + 1e-9);
    }
    if (sol.c > 0.0 && H > 0.0) {
      const double turning = std::sqrt(sol.c / H);
      if (turning > r && turning < R) EXPECT_LT(sol.curve.height(turning), lo);
    }
  }
}
