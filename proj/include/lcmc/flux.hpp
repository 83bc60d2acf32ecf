#pragma once

// Flux of the circle Gamma(r) = {t = r} on a rotational profile:
//     Flux = H * int <x ^ tau, e3> ds + int <nu, e3> ds.
// Conventions: tau runs counterclockwise seen from +x3, N is the
// future-directed unit normal, and nu = tau ^ N is the unit conormal pointing
// towards increasing t. With these the area summand is 2 pi H r^2, the
// conormal summand is -2 pi (H r^2 - c), and Flux = 2 pi c for every r.

#include <cmath>
#include <numbers>

#include "lcmc/core.hpp"
#include "lcmc/minkowski.hpp"
#include "lcmc/profile.hpp"

namespace lcmc {

struct FluxResult {
  double flux;
  double area_term;
  double conormal_term;
};

inline FluxResult flux_closed_form(double r, const SurfaceParams& p) {
  detail::require_positive_radius(r);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double area = two_pi * p.H * r * r;
  const double conormal = -two_pi * (p.H * r * r - p.c);
  return {two_pi * p.c, area, conormal};
}

enum class FluxIntegration {
  Pointwise,  // integrands are constant on the circle: 2 pi r * value at theta = 0
  Angular,    // trapezoidal rule over theta, for validation
};

/// Integrand pair (<x ^ tau, e3>, <nu, e3>) at angle theta on Gamma(r).
inline std::array<double, 2> flux_integrands(double r, double height, const SlopeState& s,
                                             double theta) {
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  const Vec3 x{r * ct, r * st, height};
  const Vec3 tau{-st, ct, 0.0};
  const Vec3 normal{s.slope * ct / s.lorentz, s.slope * st / s.lorentz, 1.0 / s.lorentz};
  const Vec3 conormal = lorentz_cross(tau, normal);
  return {lorentz_inner(lorentz_cross(x, tau), kE3), lorentz_inner(conormal, kE3)};
}

inline FluxResult flux_numeric(double r, const ProfileCurve& curve,
                               FluxIntegration mode = FluxIntegration::Pointwise,
                               int angular_samples = 64) {
  detail::require_positive_radius(r);
  const SlopeState s = curve.slope_state(r);
  if (!(s.lorentz > 0.0)) throw Error(ErrorKind::SpacelikeViolation, "|f'| = 1 on the circle");
  const double height = curve.height(r);
  const double H = curve.params().H;
  const double ds_total = 2.0 * std::numbers::pi * r;

  double area = 0.0;
  double conormal = 0.0;
  if (mode == FluxIntegration::Pointwise) {
    const auto v = flux_integrands(r, height, s, 0.0);
    area = H * v[0] * ds_total;
    conormal = v[1] * ds_total;
  } else {
    if (angular_samples < 3) throw Error(ErrorKind::InvalidArgument, "need >= 3 angular samples");
    const double dtheta = 2.0 * std::numbers::pi / angular_samples;
    for (int k = 0; k < angular_samples; ++k) {
      const auto v = flux_integrands(r, height, s, k * dtheta);
      area += v[0];
      conormal += v[1];
    }
    area *= H * r * dtheta;
    conormal *= r * dtheta;
  }
  return {area + conormal, area, conormal};
}

}  // namespace lcmc
