#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

#include "lcmc/error.hpp"

namespace lcmc::quad {

struct Options {
  double abs_tol = 1e-10;
  std::size_t max_intervals = 10000;
};

struct Result {
  double value = 0.0;
  double error = 0.0;
  std::size_t intervals = 0;
};

namespace detail {

// 15-point Kronrod rule with embedded 7-point Gauss rule (QUADPACK qk15).
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for the odd Kronrod nodes 1, 3, 5 and the centre.
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo;
  double hi;
  double value;
  double error;
  double abs_value;  // integral of |f|, for the roundoff floor

  bool operator<(const Segment& o) const noexcept { return error < o.error; }
};

template <class F>
Segment gauss_kronrod_15(const F& f, double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  const double fc = f(centre);
  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  double abs_sum = kKronrodWeights[7] * std::abs(fc);

  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double f1 = f(centre - dx);
    const double f2 = f(centre + dx);
    kronrod += kKronrodWeights[i] * (f1 + f2);
    abs_sum += kKronrodWeights[i] * (std::abs(f1) + std::abs(f2));
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * (f1 + f2);
  }
  kronrod *= half;
  gauss *= half;
  abs_sum *= std::abs(half);
  return {lo, hi, kronrod, std::abs(kronrod - gauss), abs_sum};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod integration of f over [a, b].
///
/// The interval with the largest error estimate is bisected until the summed
/// estimate drops below max(abs_tol, 64 eps * integral of |f|). The second
/// term is the floor double arithmetic can deliver; without it large
/// integrals could never meet a fixed absolute tolerance. Exceeding
/// max_intervals raises QuadratureFailure. a > b is allowed.
template <class F>
Result integrate(const F& f, double a, double b, const Options& opt = {}) {
  if (a == b) return {};
  if (a > b) {
    Result r = integrate(f, b, a, opt);
    r.value = -r.value;
    return r;
  }

  constexpr double eps = std::numeric_limits<double>::epsilon();
  std::priority_queue<detail::Segment> heap;
  std::vector<detail::Segment> settled;  // too narrow to split further

  auto first = detail::gauss_kronrod_15(f, a, b);
  double total_err = first.error;
  double total_abs = first.abs_value;
  heap.push(first);
  std::size_t count = 1;

  auto target = [&] { return std::max(opt.abs_tol, 64.0 * eps * total_abs); };

  while (!heap.empty() && total_err > target()) {
    const detail::Segment worst = heap.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi) ||
        (worst.hi - worst.lo) <= 8.0 * eps * std::max(std::abs(worst.lo), std::abs(worst.hi))) {
      heap.pop();
      settled.push_back(worst);
      continue;
    }
    if (count >= opt.max_intervals) {
      throw Error(ErrorKind::QuadratureFailure,
                  "subdivision budget exhausted with error estimate " + std::to_string(total_err));
    }
    heap.pop();
    auto left = detail::gauss_kronrod_15(f, worst.lo, mid);
    auto right = detail::gauss_kronrod_15(f, mid, worst.hi);
    total_err += left.error + right.error - worst.error;
    total_abs += left.abs_value + right.abs_value - worst.abs_value;
    heap.push(left);
    heap.push(right);
    ++count;
  }

  // Re-sum from scratch so the running updates leave no drift, smallest
  // segments first.
  std::vector<detail::Segment> all = std::move(settled);
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(),
            [](const auto& x, const auto& y) { return x.lo < y.lo; });
  Result out;
  double comp = 0.0;
  for (const auto& s : all) {
    const double y = s.value - comp;
    const double t = out.value + y;
    comp = (t - out.value) - y;
    out.value = t;
    out.error += s.error;
  }
  out.intervals = all.size();
  return out;
}

}  // namespace lcmc::quad
