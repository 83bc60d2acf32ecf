#pragma once

#include <array>

namespace lcmc {

/// A vector of L^3 = (R^3, dx1^2 + dx2^2 - dx3^2).
using Vec3 = std::array<double, 3>;

constexpr double lorentz_inner(const Vec3& u, const Vec3& v) noexcept {
  return u[0] * v[0] + u[1] * v[1] - u[2] * v[2];
}

/// Lorentzian cross product, characterised by <u ^ v, w> = det(u, v, w).
constexpr Vec3 lorentz_cross(const Vec3& u, const Vec3& v) noexcept {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[1] * v[0] - u[0] * v[1]};
}

constexpr double det3(const Vec3& u, const Vec3& v, const Vec3& w) noexcept {
  return u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
         u[2] * (v[0] * w[1] - v[1] * w[0]);
}

inline constexpr Vec3 kE3{0.0, 0.0, 1.0};

}  // namespace lcmc
