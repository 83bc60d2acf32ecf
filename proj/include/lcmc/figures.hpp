#pragma once

// The four reference profiles: the maximal surface f(t; 0, 3) on [0, 7],
// f(t; 1/10, -1/4) on [0, 4], and f(t; 1, 3) on [1, 4] and on [0, 4]; all
// anchored at f(1) = 0.

#include <cstddef>
#include <string>
#include <vector>

#include "lcmc/error.hpp"
#include "lcmc/mesh.hpp"
#include "lcmc/profile.hpp"

namespace lcmc {

struct FigureSpec {
  int id;
  SurfaceParams params;
  Anchor anchor;
  double t_min;
  double t_max;
  std::string description;
};

inline FigureSpec figure_spec(int id) {
  switch (id) {
    case 1: return {1, {0.0, 3.0}, {1.0, 0.0}, 0.0, 7.0, "maximal surface f(t;0,3), f(1)=0, 0<=t<=7"};
    case 2: return {2, {0.1, -0.25}, {1.0, 0.0}, 0.0, 4.0, "f(t;1/10,-1/4), f(1)=0, 0<=t<=4"};
    case 3: return {3, {1.0, 3.0}, {1.0, 0.0}, 1.0, 4.0, "f(t;1,3), f(1)=0, 1<=t<=4"};
    case 4: return {4, {1.0, 3.0}, {1.0, 0.0}, 0.0, 4.0, "f(t;1,3), f(1)=0, 0<=t<=4"};
    default: throw Error(ErrorKind::InvalidArgument, "figure id must be 1..4, got " + std::to_string(id));
  }
}

struct FigureData {
  FigureSpec spec;
  ProfileCurve curve;
  std::vector<double> samples;  // profile sample radii, step 0.01
  SurfaceMesh mesh;
};

inline FigureData make_figure(int id, double quad_tol = kDefaultQuadTol, std::size_t n_t = 64,
                              std::size_t n_theta = 64, unsigned threads = 1) {
  const FigureSpec spec = figure_spec(id);
  ProfileCurve curve(spec.params, spec.anchor, quad_tol);
  const auto n = static_cast<std::size_t>(std::llround((spec.t_max - spec.t_min) * 100.0)) + 1;
  std::vector<double> samples = sample_radii(spec.t_min, spec.t_max, n, Spacing::Uniform);
  SurfaceMesh mesh = sample_surface(curve, spec.t_min, spec.t_max, n_t, n_theta, Spacing::Uniform, threads);
  return {spec, std::move(curve), std::move(samples), std::move(mesh)};
}

}  // namespace lcmc
