#pragma once

// Rotational profiles x3 = f(t) of spacelike CMC surfaces in L^3, where
// t is the distance to the timelike x3-axis. The slope is known in closed
// form from the first integral
//     H t^2 - t f'/sqrt(1 - f'^2) = c   =>   f' = (H t^2 - c) / sqrt(t^2 + (H t^2 - c)^2),
// and heights are obtained by quadrature of the slope from an anchor
// f(r) = a, or by closed forms when H = 0 or c = 0.

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>

#include "lcmc/core.hpp"
#include "lcmc/error.hpp"
#include "lcmc/quadrature.hpp"

namespace lcmc {

inline constexpr double kDefaultQuadTol = 1e-10;
inline constexpr std::size_t kQuadBudget = 10000;

/// f' together with sqrt(1 - f'^2), both computed without cancellation.
struct SlopeState {
  double slope;
  double lorentz;  // sqrt(1 - slope^2) = t / hypot(t, H t^2 - c)
};

namespace detail {

inline void require_positive_radius(double t) {
  if (!(t > 0.0)) throw Error(ErrorKind::NonPositiveRadius, "t must be > 0, got " + std::to_string(t));
}

// No domain check; callers guarantee t > 0.
inline SlopeState slope_state_unchecked(double t, const SurfaceParams& p) noexcept {
  const double q = p.H * t * t - p.c;
  if (q == 0.0) return {0.0, 1.0};
  if (std::abs(q) > t) {
    // Large |q|: dividing by q first keeps (t/q)^2 <= 1.
    const double ratio = t / q;
    const double norm = std::sqrt(1.0 + ratio * ratio);
    return {std::copysign(1.0, q) / norm, std::abs(ratio) / norm};
  }
  const double ratio = q / t;
  const double norm = std::sqrt(1.0 + ratio * ratio);
  return {ratio / norm, 1.0 / norm};
}

}  // namespace detail

inline SlopeState slope_state(double t, const SurfaceParams& p) {
  detail::require_positive_radius(t);
  return detail::slope_state_unchecked(t, p);
}

/// f'(t; H, c). |f'| < 1 for every t > 0 as long as t^2/(Ht^2-c)^2 stays
/// above the double rounding threshold.
inline double slope(double t, const SurfaceParams& p) { return slope_state(t, p).slope; }

/// lim_{t -> 0+} f'(t): -sign(c) when c != 0, 0 otherwise.
constexpr double slope_limit_at_zero(const SurfaceParams& p) noexcept {
  if (p.c == 0.0) return 0.0;
  return p.c > 0.0 ? -1.0 : 1.0;
}

/// The first integral evaluated with the exact slope; zero up to rounding.
inline double first_integral_residual_exact(double t, const SurfaceParams& p) {
  const SlopeState s = slope_state(t, p);
  return p.H * t * t - t * s.slope / s.lorentz - p.c;
}

struct Anchor {
  double r = 1.0;
  double a = 0.0;

  friend bool operator==(const Anchor&, const Anchor&) = default;
};

/// Maximal (H = 0) profile through (r, a):
///     f(t) = a - c (asinh(t/|c|) - asinh(r/|c|)).
/// c = 0 degenerates to the plane f = a.
inline double closed_form_maximal(double t, double c, const Anchor& anchor) {
  detail::require_positive_radius(t);
  detail::require_positive_radius(anchor.r);
  if (c == 0.0) return anchor.a;
  const double scale = std::abs(c);
  return anchor.a - c * (std::asinh(t / scale) - std::asinh(anchor.r / scale));
}

/// Hyperbolic cap (c = 0, H > 0) through (r, a), written as
///     a + H (t^2 - r^2) / (sqrt(1 + H^2 t^2) + sqrt(1 + H^2 r^2))
/// to avoid cancellation for small H. H = 0 degenerates to the plane.
inline double closed_form_hyperbolic(double t, double H, const Anchor& anchor) {
  detail::require_positive_radius(t);
  detail::require_positive_radius(anchor.r);
  const double st = std::sqrt(1.0 + H * H * t * t);
  const double sr = std::sqrt(1.0 + H * H * anchor.r * anchor.r);
  return anchor.a + H * (t - anchor.r) * (t + anchor.r) / (st + sr);
}

/// Height of the centre p = (0, 0, p3) of the hyperbolic plane
/// <x - p, x - p> = -1/H^2 that contains the cap through (r, a).
inline double hyperbolic_center_height(double H, const Anchor& anchor) {
  return anchor.a - std::sqrt(1.0 + H * H * anchor.r * anchor.r) / H;
}

enum class HeightMode { Auto, Quadrature };

/// One member f(t; H, c) of the profile family, pinned by f(r) = a.
///
/// Internally the parameters are canonical (H >= 0) and physical heights are
/// parity * canonical heights; the canonical anchor height is parity * a.
class ProfileCurve {
 public:
  ProfileCurve(SurfaceParams params, Anchor anchor, double quad_tol = kDefaultQuadTol)
      : params_(params), anchor_(anchor), quad_tol_(quad_tol) {
    if (!std::isfinite(params.H) || !std::isfinite(params.c)) {
      throw Error(ErrorKind::InvalidArgument, "H and c must be finite");
    }
    detail::require_positive_radius(anchor.r);
    if (!(quad_tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "quad_tol must be > 0");
    const CanonicalParams cp = canonicalize(params);
    canonical_ = cp.params;
    parity_ = cp.parity;
    regime_ = regime_of(canonical_);
  }

  const SurfaceParams& params() const noexcept { return params_; }
  const SurfaceParams& canonical() const noexcept { return canonical_; }
  Parity parity() const noexcept { return parity_; }
  const Anchor& anchor() const noexcept { return anchor_; }
  Regime regime() const noexcept { return regime_; }
  double quad_tol() const noexcept { return quad_tol_; }

  SlopeState slope_state(double t) const {
    SlopeState s = lcmc::slope_state(t, canonical_);
    s.slope *= sign_of(parity_);
    return s;
  }
  double slope(double t) const { return slope_state(t).slope; }

  bool has_closed_form() const noexcept {
    return regime_ == Regime::Plane || regime_ == Regime::MaximalCatenoid ||
           regime_ == Regime::HyperbolicCap;
  }

  /// Closed-form height; only meaningful when has_closed_form().
  double closed_form_height(double t) const {
    const Anchor canon{anchor_.r, sign_of(parity_) * anchor_.a};
    double h = canon.a;
    switch (regime_) {
      case Regime::Plane: detail::require_positive_radius(t); break;
      case Regime::MaximalCatenoid: h = closed_form_maximal(t, canonical_.c, canon); break;
      case Regime::HyperbolicCap: h = closed_form_hyperbolic(t, canonical_.H, canon); break;
      default:
        throw Error(ErrorKind::InvalidArgument,
                    "no closed form for regime " + std::string(to_string(regime_)));
    }
    return sign_of(parity_) * h;
  }

  /// f(t) = a + int_r^t f'(s) ds. Auto picks the closed form when one exists.
  double height(double t, HeightMode mode = HeightMode::Auto) const {
    detail::require_positive_radius(t);
    if (t == anchor_.r) return anchor_.a;
    if (mode == HeightMode::Auto && has_closed_form()) return closed_form_height(t);
    return anchor_.a + increment(anchor_.r, t);
  }

  double height_by_quadrature(double t) const { return height(t, HeightMode::Quadrature); }

  /// int_{t0}^{t1} f'(s) ds by adaptive quadrature; t0 or t1 may be 0, where
  /// the integrand takes its one-sided limit.
  double increment(double t0, double t1) const {
    if (t0 < 0.0 || t1 < 0.0) throw Error(ErrorKind::NonPositiveRadius, "negative radius");
    const SurfaceParams p = canonical_;
    const double limit0 = slope_limit_at_zero(p);
    auto integrand = [p, limit0](double s) {
      if (s <= 1e-30) return limit0;
      return detail::slope_state_unchecked(s, p).slope;
    };
    const quad::Result r = quad::integrate(integrand, t0, t1, {quad_tol_, kQuadBudget});
    return sign_of(parity_) * r.value;
  }

  /// f(0+), the height of the cone vertex (or of the regular centre point).
  double height_at_axis() const { return anchor_.a + increment(anchor_.r, 0.0); }

 private:
  SurfaceParams params_;
  SurfaceParams canonical_;
  Parity parity_ = Parity::Positive;
  Anchor anchor_;
  Regime regime_;
  double quad_tol_;
};

enum class SingularityKind { ConicalUpper, ConicalLower, RegularPlane, RegularHyperbolic };

constexpr std::string_view to_string(SingularityKind k) noexcept {
  switch (k) {
    case SingularityKind::ConicalUpper: return "ConicalUpper";
    case SingularityKind::ConicalLower: return "ConicalLower";
    case SingularityKind::RegularPlane: return "RegularPlane";
    case SingularityKind::RegularHyperbolic: return "RegularHyperbolic";
  }
  return "Unknown";
}

struct SingularityReport {
  double limit_slope;
  SingularityKind kind;
  double cone_vertex_height;
};

/// Behaviour at the axis. c != 0 gives a conical point tangent to the lower
/// (limit slope -1) or upper (+1) light cone.
inline SingularityReport singularity_report(const ProfileCurve& curve) {
  const SurfaceParams& p = curve.params();
  const double limit = slope_limit_at_zero(p);
  SingularityKind kind;
  if (p.c == 0.0) {
    kind = p.H == 0.0 ? SingularityKind::RegularPlane : SingularityKind::RegularHyperbolic;
  } else {
    kind = limit < 0.0 ? SingularityKind::ConicalLower : SingularityKind::ConicalUpper;
  }
  return {limit, kind, curve.height_at_axis()};
}

/// lim f(t)/t as t -> infinity: sign(H), i.e. light-cone asymptotics for
/// H != 0 and sub-linear (logarithmic) growth for maximal profiles.
constexpr double asymptotic_slope(const SurfaceParams& p) noexcept {
  if (p.H == 0.0) return 0.0;
  return p.H > 0.0 ? 1.0 : -1.0;
}

/// Numerical counterpart of asymptotic_slope: f(T)/T.
inline double asymptotic_ratio(const ProfileCurve& curve, double T) { return curve.height(T) / T; }

/// min(1e-5 max(1, t), t/2): keeps t - step > 0 near the axis.
inline double default_fd_step(double t) { return std::min(1e-5 * std::max(1.0, t), 0.5 * t); }

/// Central-difference slope (f(t+d) - f(t-d)) / 2d. The difference is one
/// integral over [t-d, t+d] (or a closed-form difference), never a
/// subtraction of two heights anchored at r.
inline double fd_slope(double t, const ProfileCurve& curve, double fd_step) {
  detail::require_positive_radius(t);
  if (!(fd_step > 0.0) || !(t - fd_step > 0.0)) {
    throw Error(ErrorKind::NonPositiveRadius, "need fd_step > 0 and t - fd_step > 0");
  }
  const double lo = t - fd_step;
  const double hi = t + fd_step;
  const double diff = curve.has_closed_form() ? curve.closed_form_height(hi) - curve.closed_form_height(lo)
                                              : curve.increment(lo, hi);
  return diff / (hi - lo);
}

/// H t^2 - t f'/sqrt(1 - f'^2) - c with f' from central differences of the
/// height. Vanishes up to O(fd_step^2 + quad_tol/fd_step).
inline double first_integral_residual(double t, const ProfileCurve& curve, double fd_step) {
  const double d = fd_slope(t, curve, fd_step);
  if (!(std::abs(d) < 1.0)) {
    throw Error(ErrorKind::SpacelikeViolation,
                "finite-difference slope reached |f'| >= 1 at t = " + std::to_string(t));
  }
  const SurfaceParams& p = curve.params();
  return p.H * t * t - t * d / std::sqrt((1.0 - d) * (1.0 + d)) - p.c;
}

inline double first_integral_residual(double t, const ProfileCurve& curve) {
  return first_integral_residual(t, curve, default_fd_step(t));
}

}  // namespace lcmc
