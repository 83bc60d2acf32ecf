#pragma once

// Two-ring Plateau problem: given boundary circles Gamma(r, a), Gamma(R, b)
// and a mean curvature H, find the first-integral constant c with
// f(R; H, c) = b. The shooting map c -> f(R; H, c) is strictly decreasing,
// tends to a + (R - r) as c -> -inf and to a - (R - r) as c -> +inf, so a
// root exists exactly when |a - b| < R - r and bisection finds it.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "lcmc/core.hpp"
#include "lcmc/error.hpp"
#include "lcmc/profile.hpp"

namespace lcmc {

inline constexpr double kDefaultRootTol = 1e-9;
inline constexpr double kCIntervalTol = 1e-12;
inline constexpr double kSnapTol = 1e-10;
inline constexpr double kBracketLimit = 1e15;

struct PlateauProblem {
  ValidatedRingPair rings;
  double H = 0.0;  // canonical, >= 0
  double root_tol = kDefaultRootTol;
  double quad_tol = kDefaultQuadTol;
};

struct PlateauSolution {
  ProfileCurve curve;
  double c;
  Regime regime;
  std::optional<double> H0;  // absent when b < a
  double residual;           // |f(R) - b|
  int iterations;
};

/// Mean curvature of the hyperbolic cap through both rings,
///   H0 = 2(b-a) / sqrt(((R-r)^2 - (b-a)^2) ((R+r)^2 - (b-a)^2)).
/// Requires b >= a; returns 0 when a = b.
inline double threshold_H0(const ValidatedRingPair& rings) {
  const double d = rings.b() - rings.a();
  if (d < 0.0) throw Error(ErrorKind::OrientationError, "threshold_H0 needs b >= a");
  const double gap = rings.R() - rings.r();
  const double span = rings.R() + rings.r();
  return 2.0 * d / std::sqrt((gap * gap - d * d) * (span * span - d * d));
}

/// Regime predicted from (H, H0) without solving. Requires b >= a, H >= 0.
inline Regime classify(double H, const ValidatedRingPair& rings) {
  if (!(H >= 0.0)) throw Error(ErrorKind::InvalidArgument, "classify needs canonical H >= 0");
  const double H0 = threshold_H0(rings);
  if (H == 0.0) return rings.a() == rings.b() ? Regime::Plane : Regime::MaximalCatenoid;
  if (H < H0) return Regime::NegativeC;
  if (H == H0) return Regime::HyperbolicCap;
  return Regime::PositiveC;
}

/// classify extended to b < a (where f(R; H, 0) >= a > b forces c > 0) and
/// to H < 0 through the reflection f -> -f.
inline Regime predict_regime(double H, const ValidatedRingPair& rings) {
  if (H < 0.0) {
    const RingPair& g = rings.rings();
    return predict_regime(-H, validate_rings(RingPair{g.r, g.R, -g.a, -g.b}));
  }
  if (rings.b() >= rings.a()) return classify(H, rings);
  return H == 0.0 ? Regime::MaximalCatenoid : Regime::PositiveC;
}

/// f(R; H, c) for the profile anchored at (r, a).
inline double shoot(const ValidatedRingPair& rings, double H, double c,
                    double quad_tol = kDefaultQuadTol) {
  const ProfileCurve curve({H, c}, {rings.r(), rings.a()}, quad_tol);
  return curve.height(rings.R());
}

/// Bisection on c with a geometrically expanding bracket started at [-1, 1].
/// Runs until the bracket is below kCIntervalTol * max(1, |c|) so that the
/// snap-to-zero rule can recognise the hyperbolic cap.
inline PlateauSolution solve_c(const PlateauProblem& problem) {
  const ValidatedRingPair& rings = problem.rings;
  const double H = problem.H;
  if (!(H >= 0.0) || !std::isfinite(H)) {
    throw Error(ErrorKind::InvalidArgument, "solve_c needs a finite canonical H >= 0");
  }
  auto gap = [&](double c) { return shoot(rings, H, c, problem.quad_tol) - rings.b(); };

  int iterations = 0;
  double lo = -1.0;
  double hi = 1.0;
  double g_lo = gap(lo);
  double g_hi = gap(hi);
  while (g_lo < 0.0) {
    hi = lo;
    g_hi = g_lo;
    lo *= 2.0;
    if (std::abs(lo) > kBracketLimit) {
      throw Error(ErrorKind::RootBracketFailure, "no sign change for c down to -1e15");
    }
    g_lo = gap(lo);
    ++iterations;
  }
  while (g_hi > 0.0) {
    lo = hi;
    g_lo = g_hi;
    hi *= 2.0;
    if (std::abs(hi) > kBracketLimit) {
      throw Error(ErrorKind::RootBracketFailure, "no sign change for c up to 1e15");
    }
    g_hi = gap(hi);
    ++iterations;
  }

  double c = 0.0;
  if (g_lo == 0.0) {
    c = lo;
  } else if (g_hi == 0.0) {
    c = hi;
  } else {
    for (;;) {
      const double mid = lo + 0.5 * (hi - lo);
      if (mid <= lo || mid >= hi) {
        c = mid;
        break;
      }
      const double g_mid = gap(mid);
      ++iterations;
      if (g_mid == 0.0) {
        c = mid;
        break;
      }
      if (g_mid > 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
      if (hi - lo <= kCIntervalTol * std::max(1.0, std::abs(mid))) {
        c = lo + 0.5 * (hi - lo);
        break;
      }
    }
  }

  if (std::abs(c) < kSnapTol * std::max(1.0, H * rings.R() * rings.R())) c = 0.0;

  ProfileCurve curve({H, c}, {rings.r(), rings.a()}, problem.quad_tol);
  const double residual = std::abs(curve.height(rings.R()) - rings.b());
  if (!(residual <= problem.root_tol)) {
    throw Error(ErrorKind::ConvergenceFailure,
                "height residual " + std::to_string(residual) + " exceeds root_tol");
  }
  std::optional<double> H0;
  if (rings.b() >= rings.a()) H0 = threshold_H0(rings);
  const Regime regime = curve.regime();
  return {std::move(curve), c, regime, H0, residual, iterations};
}

/// Solves for any sign of H. Negative H is handled by the reflection
/// f(t; -H, -c) = -f(t; H, c): the canonical problem uses (-a, -b).
inline PlateauSolution solve_plateau(const RingPair& rings, double H,
                                     double root_tol = kDefaultRootTol,
                                     double quad_tol = kDefaultQuadTol) {
  const ValidatedRingPair valid = validate_rings(rings);
  if (H >= 0.0) return solve_c({valid, H, root_tol, quad_tol});

  const ValidatedRingPair mirrored = validate_rings(RingPair{rings.r, rings.R, -rings.a, -rings.b});
  PlateauSolution canon = solve_c({mirrored, -H, root_tol, quad_tol});
  const double c = -canon.c;
  ProfileCurve curve({H, c}, {rings.r, rings.a}, quad_tol);
  const double residual = std::abs(curve.height(rings.R) - rings.b);
  return {std::move(curve), c, canon.regime, canon.H0, residual, canon.iterations};
}

}  // namespace lcmc
