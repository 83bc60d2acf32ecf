#pragma once

// Independent checks of computed profiles:
//  * mean curvature of a sampled graph x3 = u(x1, x2), both from the
//    non-divergence form
//        (1 - |Du|^2) sum u_ii + sum u_i u_j u_ij = 2H (1 - |Du|^2)^(3/2)
//    and from the divergence form div(Du / sqrt(1 - |Du|^2)) = 2H;
//  * mean curvature of a profile from the rotational formula
//        H = (t f'' + (1 - f'^2) f') / (2 t (1 - f'^2)^(3/2));
//  * the Beltrami first integral of the area/volume functional written for
//    the inverse profile x1 = g(x3).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "lcmc/error.hpp"
#include "lcmc/profile.hpp"

namespace lcmc {

/// Samples u on the lattice x1 = x0 + i hx, x2 = y0 + j hy, stored with i
/// (the x1 index) running fastest. mask marks the points to evaluate; the
/// outer ring of the lattice is never evaluated whatever the mask says.
struct GraphPatch {
  std::size_t nx = 0;
  std::size_t ny = 0;
  double x0 = 0.0;
  double y0 = 0.0;
  double hx = 0.0;
  double hy = 0.0;
  std::vector<double> values;
  std::vector<unsigned char> mask;

  std::size_t index(std::size_t i, std::size_t j) const noexcept { return j * nx + i; }
  double at(std::size_t i, std::size_t j) const noexcept { return values[index(i, j)]; }
  double x1(std::size_t i) const noexcept { return x0 + static_cast<double>(i) * hx; }
  double x2(std::size_t j) const noexcept { return y0 + static_cast<double>(j) * hy; }
  bool interior(std::size_t i, std::size_t j) const noexcept {
    return i > 0 && j > 0 && i + 1 < nx && j + 1 < ny && mask[index(i, j)] != 0;
  }
};

/// Square patch [-half_width, half_width]^2 with spacing h, sampling u and
/// masking points whose distance to the origin lies outside [t_in, t_out].
inline GraphPatch sample_graph(const std::function<double(double, double)>& u, double half_width,
                               double h, double t_in = 0.0,
                               double t_out = std::numeric_limits<double>::infinity()) {
  if (!(h > 0.0) || !(half_width > 0.0)) throw Error(ErrorKind::InvalidArgument, "need h, half_width > 0");
  GraphPatch p;
  const auto steps = static_cast<std::size_t>(std::llround(2.0 * half_width / h));
  p.nx = p.ny = steps + 1;
  p.x0 = p.y0 = -half_width;
  p.hx = p.hy = h;
  p.values.resize(p.nx * p.ny);
  p.mask.resize(p.nx * p.ny);
  for (std::size_t j = 0; j < p.ny; ++j) {
    for (std::size_t i = 0; i < p.nx; ++i) {
      const double x = p.x1(i);
      const double y = p.x2(j);
      const double t = std::hypot(x, y);
      p.values[p.index(i, j)] = u(x, y);
      p.mask[p.index(i, j)] = (t >= t_in && t <= t_out) ? 1 : 0;
    }
  }
  return p;
}

/// The profile rotated into a graph u(x) = f(|x|). The axis point, where f
/// is singular in general, must be masked out (t_in > 0) and is filled with
/// f(0+).
inline GraphPatch sample_rotated_profile(const ProfileCurve& curve, double half_width, double h,
                                         double t_in, double t_out) {
  const double axis = curve.height_at_axis();
  return sample_graph(
      [&](double x, double y) {
        const double t = std::hypot(x, y);
        return t > 0.0 ? curve.height(t) : axis;
      },
      half_width, h, t_in, t_out);
}

enum class CurvatureForm { Nondivergence, Divergence };

struct CurvatureReport {
  double H_mean = 0.0;
  double H_max_dev = 0.0;
  double spacelike_min_margin = 0.0;
  std::size_t points_checked = 0;
};

/// Pointwise mean curvature at every evaluated lattice point (NaN elsewhere)
/// with second-order central differences. Throws SpacelikeViolation if
/// 1 - |Du|^2 <= 0 at an evaluated point.
inline std::vector<double> pointwise_mean_curvature(const GraphPatch& p, CurvatureForm form,
                                                    double* min_margin = nullptr) {
  if (p.nx < 3 || p.ny < 3 || p.values.size() != p.nx * p.ny || p.mask.size() != p.values.size()) {
    throw Error(ErrorKind::InvalidArgument, "patch needs a consistent lattice of at least 3x3");
  }
  const double hx = p.hx;
  const double hy = p.hy;
  std::vector<double> H(p.values.size(), std::numeric_limits<double>::quiet_NaN());
  double margin_min = std::numeric_limits<double>::infinity();

  auto check = [&](double margin, std::size_t i, std::size_t j) {
    if (!(margin > 0.0)) {
      throw Error(ErrorKind::SpacelikeViolation, "1 - |Du|^2 <= 0 near (" + std::to_string(p.x1(i)) +
                                                     ", " + std::to_string(p.x2(j)) + ")");
    }
  };
  // Divergence-form flux vector on the staggered edges.
  auto flux_x = [&](std::size_t i, std::size_t j) {  // at (i + 1/2, j)
    const double ux = (p.at(i + 1, j) - p.at(i, j)) / hx;
    const double uy = 0.25 * (p.at(i, j + 1) - p.at(i, j - 1) + p.at(i + 1, j + 1) - p.at(i + 1, j - 1)) / hy;
    const double margin = 1.0 - ux * ux - uy * uy;
    check(margin, i, j);
    return ux / std::sqrt(margin);
  };
  auto flux_y = [&](std::size_t i, std::size_t j) {  // at (i, j + 1/2)
    const double uy = (p.at(i, j + 1) - p.at(i, j)) / hy;
    const double ux = 0.25 * (p.at(i + 1, j) - p.at(i - 1, j) + p.at(i + 1, j + 1) - p.at(i - 1, j + 1)) / hx;
    const double margin = 1.0 - ux * ux - uy * uy;
    check(margin, i, j);
    return uy / std::sqrt(margin);
  };

  for (std::size_t j = 1; j + 1 < p.ny; ++j) {
    for (std::size_t i = 1; i + 1 < p.nx; ++i) {
      if (!p.interior(i, j)) continue;
      const double u1 = (p.at(i + 1, j) - p.at(i - 1, j)) / (2.0 * hx);
      const double u2 = (p.at(i, j + 1) - p.at(i, j - 1)) / (2.0 * hy);
      const double margin = 1.0 - u1 * u1 - u2 * u2;
      check(margin, i, j);
      margin_min = std::min(margin_min, margin);

      if (form == CurvatureForm::Nondivergence) {
        const double u11 = (p.at(i + 1, j) - 2.0 * p.at(i, j) + p.at(i - 1, j)) / (hx * hx);
        const double u22 = (p.at(i, j + 1) - 2.0 * p.at(i, j) + p.at(i, j - 1)) / (hy * hy);
        const double u12 = (p.at(i + 1, j + 1) - p.at(i + 1, j - 1) - p.at(i - 1, j + 1) + p.at(i - 1, j - 1)) /
                           (4.0 * hx * hy);
        const double lhs = margin * (u11 + u22) + u1 * u1 * u11 + 2.0 * u1 * u2 * u12 + u2 * u2 * u22;
        H[p.index(i, j)] = lhs / (2.0 * margin * std::sqrt(margin));
      } else {
        const double div = (flux_x(i, j) - flux_x(i - 1, j)) / hx + (flux_y(i, j) - flux_y(i, j - 1)) / hy;
        H[p.index(i, j)] = 0.5 * div;
      }
    }
  }
  if (min_margin) *min_margin = margin_min;
  return H;
}

inline CurvatureReport mean_curvature_graph(const GraphPatch& p,
                                            CurvatureForm form = CurvatureForm::Nondivergence) {
  CurvatureReport rep;
  const std::vector<double> H = pointwise_mean_curvature(p, form, &rep.spacelike_min_margin);
  double sum = 0.0;
  for (double h : H) {
    if (std::isnan(h)) continue;
    sum += h;
    ++rep.points_checked;
  }
  if (rep.points_checked == 0) throw Error(ErrorKind::InvalidArgument, "no interior points selected");
  rep.H_mean = sum / static_cast<double>(rep.points_checked);
  for (double h : H) {
    if (!std::isnan(h)) rep.H_max_dev = std::max(rep.H_max_dev, std::abs(h - rep.H_mean));
  }
  return rep;
}

/// Mean curvature from the rotational formula, with f' exact and f'' a
/// central difference of the exact slope.
inline double mean_curvature_rotational(double t, const ProfileCurve& curve, double fd_step) {
  detail::require_positive_radius(t);
  if (!(fd_step > 0.0)) throw Error(ErrorKind::InvalidArgument, "fd_step must be > 0");
  if (!(t - fd_step > 0.0)) {
    throw Error(ErrorKind::SpacelikeViolation, "difference stencil crosses the axis singularity");
  }
  const SlopeState s = curve.slope_state(t);
  if (!(s.lorentz > 0.0)) throw Error(ErrorKind::SpacelikeViolation, "|f'| = 1 at t = " + std::to_string(t));
  const double second = (curve.slope(t + fd_step) - curve.slope(t - fd_step)) / (2.0 * fd_step);
  const double l2 = s.lorentz * s.lorentz;
  return (t * second + l2 * s.slope) / (2.0 * t * l2 * s.lorentz);
}

struct VariationalResult {
  double max_deviation;  // max |kappa_k - mean|
  double kappa_mean;     // recovers 2c
  std::size_t samples;
};

/// Beltrami first integral of the area/volume functional, evaluated on the
/// inverse profile g = f^{-1} sampled at n equally spaced heights:
///     kappa = 2H g^2 - 2 sgn(g') g / sqrt(g'^2 - 1).
/// The sign factor accounts for the orientation of the x3 integration when
/// f decreases. g' comes from second-order differences in x3, so the spread
/// of kappa decays like n^-2; its mean is 2c.
inline VariationalResult variational_residual(const ProfileCurve& curve, double t1, double t2,
                                              std::size_t n) {
  detail::require_positive_radius(t1);
  if (!(t2 > t1)) throw Error(ErrorKind::InvalidArgument, "need t1 < t2");
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "need n >= 3 samples");
  const SurfaceParams& canon = curve.canonical();
  if (canon.H == 0.0 && canon.c == 0.0) throw Error(ErrorKind::NotMonotone, "the plane has f' = 0");
  if (canon.H > 0.0 && canon.c > 0.0) {
    const double turning = std::sqrt(canon.c / canon.H);
    if (turning >= t1 && turning <= t2) {
      throw Error(ErrorKind::NotMonotone, "f' vanishes at t = " + std::to_string(turning));
    }
  }

  // Heights relative to f(t1) keep the inversion free of the anchor offset.
  const double rise = curve.increment(t1, t2);
  const double dz = rise / static_cast<double>(n - 1);
  std::vector<double> g(n);
  g.front() = t1;
  g.back() = t2;
  double prev = t1;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const double target = dz * static_cast<double>(k);
    double lo = prev;
    double hi = t2;
    // First guess from the local slope, then safeguarded Newton.
    double t = std::clamp(prev + dz / curve.slope(prev), lo, hi);
    double base = prev;
    double base_val = dz * static_cast<double>(k - 1);
    for (int it = 0; it < 100; ++it) {
      const double val = base_val + curve.increment(base, t) - target;
      // Monotone in t with the sign of rise.
      if ((val > 0.0) == (rise > 0.0)) hi = t; else lo = t;
      if (val == 0.0) break;
      const double next = t - val / curve.slope(t);
      base_val = val + target;
      base = t;
      const double cand = (next > lo && next < hi) ? next : 0.5 * (lo + hi);
      if (std::abs(cand - t) <= 4.0 * std::numeric_limits<double>::epsilon() * t) {
        t = cand;
        break;
      }
      t = cand;
    }
    g[k] = t;
    prev = t;
  }

  std::vector<double> kappa(n);
  const double H = curve.params().H;
  for (std::size_t k = 0; k < n; ++k) {
    double dg;
    if (k == 0) {
      dg = (-3.0 * g[0] + 4.0 * g[1] - g[2]) / (2.0 * dz);
    } else if (k + 1 == n) {
      dg = (3.0 * g[n - 1] - 4.0 * g[n - 2] + g[n - 3]) / (2.0 * dz);
    } else {
      dg = (g[k + 1] - g[k - 1]) / (2.0 * dz);
    }
    const double root = std::sqrt((dg - 1.0) * (dg + 1.0));
    kappa[k] = 2.0 * H * g[k] * g[k] - 2.0 * std::copysign(1.0, dg) * g[k] / root;
  }
  double mean = 0.0;
  for (double v : kappa) mean += v;
  mean /= static_cast<double>(n);
  double dev = 0.0;
  for (double v : kappa) dev = std::max(dev, std::abs(v - mean));
  return {dev, mean, n};
}

}  // namespace lcmc
