#pragma once

// Sampling of X(t, theta) = (t cos theta, t sin theta, f(t)) on a grid and
// export as Wavefront OBJ (v/f records only) and profile CSV.

#include <array>
#include <cmath>
#include <cstddef>
#include <exception>
#include <istream>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lcmc/core.hpp"
#include "lcmc/error.hpp"
#include "lcmc/format.hpp"
#include "lcmc/minkowski.hpp"
#include "lcmc/profile.hpp"

namespace lcmc {

enum class Spacing { Uniform, Log };

struct SurfaceMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<std::size_t, 3>> triangles;
  std::vector<double> ring_t;  // t of each ring; the apex (if any) is not a ring
  std::size_t n_theta = 0;
  std::optional<std::size_t> singular_vertex;  // apex of a cone-vertex mesh

  SurfaceParams params;
  Anchor anchor;
  Regime regime = Regime::Plane;
  std::optional<RingPair> rings;
};

/// n samples of [t_min, t_max], endpoints included.
inline std::vector<double> sample_radii(double t_min, double t_max, std::size_t n, Spacing spacing) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "need at least 2 samples in t");
  if (!(t_min >= 0.0) || !(t_max > t_min)) throw Error(ErrorKind::InvalidArgument, "need 0 <= t_min < t_max");
  if (spacing == Spacing::Log && !(t_min > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "log spacing needs t_min > 0");
  }
  std::vector<double> ts(n);
  const double last = static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = static_cast<double>(i) / last;
    ts[i] = spacing == Spacing::Uniform ? t_min + (t_max - t_min) * s
                                        : t_min * std::pow(t_max / t_min, s);
  }
  ts.back() = t_max;
  return ts;
}

/// Grid over n_t radii and n_theta angles with the theta seam shared. When
/// t_min = 0 the first radius is replaced by a single apex vertex at
/// (0, 0, f(0+)) joined by a triangle fan and flagged as singular.
/// Triangles are counterclockwise about X_t x X_theta. Rows are sampled in
/// parallel when threads > 1; the output does not depend on the thread count.
inline SurfaceMesh sample_surface(const ProfileCurve& curve, double t_min, double t_max, std::size_t n_t,
                                  std::size_t n_theta, Spacing spacing = Spacing::Uniform,
                                  unsigned threads = 1) {
  if (n_theta < 3) throw Error(ErrorKind::InvalidArgument, "need at least 3 samples in theta");
  const std::vector<double> ts = sample_radii(t_min, t_max, n_t, spacing);
  const bool apex = ts.front() == 0.0;

  SurfaceMesh mesh;
  mesh.params = curve.params();
  mesh.anchor = curve.anchor();
  mesh.regime = curve.regime();
  mesh.n_theta = n_theta;
  mesh.ring_t.assign(ts.begin() + (apex ? 1 : 0), ts.end());

  const std::size_t rings = mesh.ring_t.size();
  const std::size_t offset = apex ? 1 : 0;
  mesh.vertices.resize(offset + rings * n_theta);

  std::vector<double> heights(rings);
  std::vector<std::exception_ptr> failures(std::max(1u, threads));
  auto fill_rows = [&](std::size_t begin, std::size_t step) {
    try {
      for (std::size_t i = begin; i < rings; i += step) heights[i] = curve.height(mesh.ring_t[i]);
    } catch (...) {
      failures[begin] = std::current_exception();
    }
  };
  if (threads > 1 && rings > 1) {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(fill_rows, k, threads);
  } else {
    fill_rows(0, 1);
  }
  // first failing row block wins, whatever the thread count
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);

  if (apex) {
    mesh.vertices[0] = {0.0, 0.0, curve.height_at_axis()};
    mesh.singular_vertex = 0;
  }
  const double dtheta = 2.0 * std::numbers::pi / static_cast<double>(n_theta);
  for (std::size_t i = 0; i < rings; ++i) {
    for (std::size_t j = 0; j < n_theta; ++j) {
      const double th = dtheta * static_cast<double>(j);
      const double t = mesh.ring_t[i];
      mesh.vertices[offset + i * n_theta + j] = {t * std::cos(th), t * std::sin(th), heights[i]};
    }
  }

  auto vid = [&](std::size_t i, std::size_t j) { return offset + i * n_theta + (j % n_theta); };
  if (apex) {
    for (std::size_t j = 0; j < n_theta; ++j) mesh.triangles.push_back({0, vid(0, j), vid(0, j + 1)});
  }
  for (std::size_t i = 0; i + 1 < rings; ++i) {
    for (std::size_t j = 0; j < n_theta; ++j) {
      mesh.triangles.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
      mesh.triangles.push_back({vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)});
    }
  }
  return mesh;
}

inline void export_obj(const SurfaceMesh& mesh, std::ostream& out) {
  for (const Vec3& v : mesh.vertices) {
    out << "v " << format_double(v[0]) << ' ' << format_double(v[1]) << ' ' << format_double(v[2]) << '\n';
  }
  for (const auto& f : mesh.triangles) {
    out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
  }
  if (!out) throw Error(ErrorKind::IoError, "failed writing OBJ stream");
}

struct ObjData {
  std::vector<Vec3> vertices;
  std::vector<std::array<std::size_t, 3>> triangles;  // 0-based
};

/// Reads the subset written by export_obj (v and triangular f records).
inline ObjData parse_obj(std::istream& in) {
  ObjData d;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "v") {
      std::string x, y, z;
      ls >> x >> y >> z;
      d.vertices.push_back({parse_double(x), parse_double(y), parse_double(z)});
    } else if (tag == "f") {
      std::array<std::size_t, 3> f{};
      for (auto& idx : f) {
        long long k = 0;
        if (!(ls >> k) || k < 1) throw Error(ErrorKind::ParseError, "bad face record: " + line);
        idx = static_cast<std::size_t>(k - 1);
      }
      d.triangles.push_back(f);
    } else {
      throw Error(ErrorKind::ParseError, "unsupported OBJ record: " + line);
    }
  }
  return d;
}

/// CSV with header t,f,fprime,first_integral_residual. At t = 0 the row holds
/// f(0+) and the limiting slope; the residual is undefined there and written
/// as nan.
inline void export_profile_csv(const ProfileCurve& curve, const std::vector<double>& ts, std::ostream& out) {
  out << "t,f,fprime,first_integral_residual\r\n";
  for (double t : ts) {
    if (t < 0.0) throw Error(ErrorKind::NonPositiveRadius, "negative t in CSV samples");
    double f, fp, res;
    if (t == 0.0) {
      f = curve.height_at_axis();
      fp = slope_limit_at_zero(curve.params());
      res = std::numeric_limits<double>::quiet_NaN();
    } else {
      f = curve.height(t);
      fp = curve.slope(t);
      res = first_integral_residual(t, curve);
    }
    out << format_double(t) << ',' << format_double(f) << ',' << format_double(fp) << ','
        << format_double(res) << "\r\n";
  }
  if (!out) throw Error(ErrorKind::IoError, "failed writing CSV stream");
}

}  // namespace lcmc
