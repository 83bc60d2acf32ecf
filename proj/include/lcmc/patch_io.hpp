#pragma once

// GraphPatch <-> CSV with header "x1,x2,u", one lattice point per row.
// The writer emits rows with x1 running fastest; the reader accepts any row
// order as long as the points form a complete uniform lattice.

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "lcmc/error.hpp"
#include "lcmc/format.hpp"
#include "lcmc/oracle.hpp"

namespace lcmc {

inline void write_patch_csv(const GraphPatch& p, std::ostream& out) {
  out << "x1,x2,u\r\n";
  for (std::size_t j = 0; j < p.ny; ++j) {
    for (std::size_t i = 0; i < p.nx; ++i) {
      out << format_double(p.x1(i)) << ',' << format_double(p.x2(j)) << ',' << format_double(p.at(i, j))
          << "\r\n";
    }
  }
  if (!out) throw Error(ErrorKind::IoError, "failed writing patch CSV");
}

namespace detail {

inline std::vector<std::string> split_csv_line(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> cells;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  cells.push_back(cur);
  return cells;
}

// Sorted distinct coordinates, merging values closer than tol.
inline std::vector<double> distinct_axis(std::vector<double> v, double tol) {
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  for (double x : v) {
    if (out.empty() || x - out.back() > tol) out.push_back(x);
  }
  return out;
}

}  // namespace detail

/// Every interior lattice point is marked for evaluation.
inline GraphPatch read_patch_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorKind::ParseError, "empty patch CSV");
  auto header = detail::split_csv_line(line);
  for (auto& h : header) {
    h.erase(std::remove_if(h.begin(), h.end(), [](char ch) { return ch == ' ' || ch == '"'; }), h.end());
  }
  if (header != std::vector<std::string>{"x1", "x2", "u"}) {
    throw Error(ErrorKind::ParseError, "patch CSV header must be x1,x2,u");
  }
  std::vector<std::tuple<double, double, double>> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const auto cells = detail::split_csv_line(line);
    if (cells.size() != 3) throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": need 3 fields");
    rows.emplace_back(parse_double(cells[0]), parse_double(cells[1]), parse_double(cells[2]));
  }
  if (rows.empty()) throw Error(ErrorKind::ParseError, "patch CSV has no data rows");

  std::vector<double> xs, ys;
  double extent = 0.0;
  for (const auto& [x, y, u] : rows) {
    xs.push_back(x);
    ys.push_back(y);
    extent = std::max({extent, std::abs(x), std::abs(y)});
  }
  const double tol = 1e-9 * std::max(1.0, extent);
  const auto ax = detail::distinct_axis(xs, tol);
  const auto ay = detail::distinct_axis(ys, tol);
  if (ax.size() < 3 || ay.size() < 3 || ax.size() * ay.size() != rows.size()) {
    throw Error(ErrorKind::ParseError, "patch CSV is not a complete lattice of at least 3x3");
  }

  GraphPatch p;
  p.nx = ax.size();
  p.ny = ay.size();
  p.x0 = ax.front();
  p.y0 = ay.front();
  p.hx = (ax.back() - ax.front()) / static_cast<double>(p.nx - 1);
  p.hy = (ay.back() - ay.front()) / static_cast<double>(p.ny - 1);
  for (std::size_t i = 0; i < p.nx; ++i) {
    if (std::abs(ax[i] - p.x1(i)) > 1e-6 * p.hx) throw Error(ErrorKind::ParseError, "x1 spacing is not uniform");
  }
  for (std::size_t j = 0; j < p.ny; ++j) {
    if (std::abs(ay[j] - p.x2(j)) > 1e-6 * p.hy) throw Error(ErrorKind::ParseError, "x2 spacing is not uniform");
  }
  p.values.assign(p.nx * p.ny, std::nan(""));
  p.mask.assign(p.nx * p.ny, 1);
  for (const auto& [x, y, u] : rows) {
    const auto i = static_cast<std::size_t>(std::llround((x - p.x0) / p.hx));
    const auto j = static_cast<std::size_t>(std::llround((y - p.y0) / p.hy));
    if (!std::isnan(p.values[p.index(i, j)])) throw Error(ErrorKind::ParseError, "duplicate lattice point");
    p.values[p.index(i, j)] = u;
  }
  return p;
}

}  // namespace lcmc
