#pragma once

#include <cmath>
#include <string>
#include <string_view>

#include "lcmc/error.hpp"

namespace lcmc {

/// Mean curvature H and first-integral constant c of a rotational profile,
/// i.e. the constant in  H t^2 - t f' / sqrt(1 - f'^2) = c.
struct SurfaceParams {
  double H = 0.0;
  double c = 0.0;

  friend bool operator==(const SurfaceParams&, const SurfaceParams&) = default;
};

/// +1 or -1. Heights of a canonical profile are multiplied by the parity.
enum class Parity : int { Negative = -1, Positive = 1 };

constexpr double sign_of(Parity p) noexcept { return static_cast<double>(static_cast<int>(p)); }

constexpr Parity operator*(Parity a, Parity b) noexcept {
  return a == b ? Parity::Positive : Parity::Negative;
}

/// Boundary data: the circles Gamma(r, a) and Gamma(R, b).
struct RingPair {
  double r = 0.0;
  double R = 0.0;
  double a = 0.0;
  double b = 0.0;

  friend bool operator==(const RingPair&, const RingPair&) = default;
};

/// A RingPair that passed validate_rings. Only validate_rings constructs one.
class ValidatedRingPair {
 public:
  const RingPair& rings() const noexcept { return rings_; }
  double r() const noexcept { return rings_.r; }
  double R() const noexcept { return rings_.R; }
  double a() const noexcept { return rings_.a; }
  double b() const noexcept { return rings_.b; }
  /// |a - b| / (R - r), strictly below 1.
  double slope_bound() const noexcept { return slope_bound_; }

  friend bool operator==(const ValidatedRingPair&, const ValidatedRingPair&) = default;

 private:
  ValidatedRingPair(RingPair rings, double bound) : rings_(rings), slope_bound_(bound) {}
  friend ValidatedRingPair validate_rings(const RingPair& rings);

  RingPair rings_;
  double slope_bound_;
};

/// Exact comparisons only: the solvability inequality is strict and open.
inline ValidatedRingPair validate_rings(const RingPair& rings) {
  if (!std::isfinite(rings.r) || !std::isfinite(rings.R) || !std::isfinite(rings.a) ||
      !std::isfinite(rings.b)) {
    throw Error(ErrorKind::DegenerateRadii, "ring data must be finite");
  }
  if (rings.r <= 0.0 || rings.r >= rings.R) {
    throw Error(ErrorKind::DegenerateRadii, "need 0 < r < R");
  }
  const double bound = std::abs(rings.a - rings.b) / (rings.R - rings.r);
  if (!(bound < 1.0)) {
    throw Error(ErrorKind::NotSpacelikeSolvable,
                "|a - b| / (R - r) = " + std::to_string(bound) + " is not below 1");
  }
  return ValidatedRingPair(rings, bound);
}

inline ValidatedRingPair validate_rings(const ValidatedRingPair& rings) { return rings; }

struct CanonicalParams {
  SurfaceParams params;
  Parity parity = Parity::Positive;
};

/// Maps H < 0 to (-H, -c) using f(t; -H, -c) = -f(t; H, c). H = 0 is left
/// alone: the two signs of c are distinct maximal branches.
inline CanonicalParams canonicalize(const SurfaceParams& p) noexcept {
  if (p.H < 0.0) return {{-p.H, -p.c}, Parity::Negative};
  return {p, Parity::Positive};
}

enum class Regime { Plane, MaximalCatenoid, HyperbolicCap, NegativeC, PositiveC };

constexpr std::string_view to_string(Regime r) noexcept {
  switch (r) {
    case Regime::Plane: return "Plane";
    case Regime::MaximalCatenoid: return "MaximalCatenoid";
    case Regime::HyperbolicCap: return "HyperbolicCap";
    case Regime::NegativeC: return "NegativeC";
    case Regime::PositiveC: return "PositiveC";
  }
  return "Unknown";
}

/// Classification of canonical parameters. c is tested for exact zero; any
/// snapping happens in the solver before this is called.
constexpr Regime regime_of(const SurfaceParams& canonical) noexcept {
  if (canonical.H == 0.0) return canonical.c == 0.0 ? Regime::Plane : Regime::MaximalCatenoid;
  if (canonical.c == 0.0) return Regime::HyperbolicCap;
  return canonical.c < 0.0 ? Regime::NegativeC : Regime::PositiveC;
}

}  // namespace lcmc
