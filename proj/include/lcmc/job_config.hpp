#pragma once

// Job description for the command-line tool, stored as plain text:
//
//   # comment
//   command = solve
//   H = 1
//   r = 1
//
// One "key = value" per line. Keys are written in a fixed order and numbers
// in shortest round-trip form, so serialising, parsing and serialising again
// reproduces the file byte for byte.
//
// Keys: command, figure, r, R, a, b, H, c, t_min, t_max, n_t, n_theta,
// spacing (uniform|log), quad_tol, root_tol, threads, human (true|false),
// patch, output.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "lcmc/error.hpp"
#include "lcmc/format.hpp"
#include "lcmc/profile.hpp"
#include "lcmc/bvp.hpp"

namespace lcmc {

struct JobConfig {
  std::string command;
  std::optional<int> figure;
  std::optional<double> r, R, a, b, H, c;
  std::optional<double> t_min, t_max;
  std::size_t n_t = 64;
  std::size_t n_theta = 64;
  std::string spacing = "uniform";
  double quad_tol = kDefaultQuadTol;
  double root_tol = kDefaultRootTol;
  unsigned threads = 1;
  bool human = false;
  std::string patch;
  std::string output;

  friend bool operator==(const JobConfig&, const JobConfig&) = default;
};

inline std::string to_string(const JobConfig& cfg) {
  std::ostringstream out;
  auto put = [&](std::string_view key, const std::string& value) { out << key << " = " << value << '\n'; };
  auto put_opt = [&](std::string_view key, const std::optional<double>& v) {
    if (v) put(key, format_double(*v));
  };
  put("command", cfg.command);
  if (cfg.figure) put("figure", std::to_string(*cfg.figure));
  put_opt("r", cfg.r);
  put_opt("R", cfg.R);
  put_opt("a", cfg.a);
  put_opt("b", cfg.b);
  put_opt("H", cfg.H);
  put_opt("c", cfg.c);
  put_opt("t_min", cfg.t_min);
  put_opt("t_max", cfg.t_max);
  put("n_t", std::to_string(cfg.n_t));
  put("n_theta", std::to_string(cfg.n_theta));
  put("spacing", cfg.spacing);
  put("quad_tol", format_double(cfg.quad_tol));
  put("root_tol", format_double(cfg.root_tol));
  put("threads", std::to_string(cfg.threads));
  put("human", cfg.human ? "true" : "false");
  if (!cfg.patch.empty()) put("patch", cfg.patch);
  if (!cfg.output.empty()) put("output", cfg.output);
  return out.str();
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline unsigned long long parse_count(std::string_view key, std::string_view v) {
  const double x = parse_double(v);
  if (x < 0.0 || x != static_cast<double>(static_cast<unsigned long long>(x))) {
    throw Error(ErrorKind::ParseError, std::string(key) + " must be a non-negative integer");
  }
  return static_cast<unsigned long long>(x);
}

}  // namespace detail

inline JobConfig parse_job_config(std::string_view text) {
  JobConfig cfg;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string_view line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key(detail::trim(line.substr(0, eq)));
    const std::string_view value = detail::trim(line.substr(eq + 1));

    if (key == "command") cfg.command = value;
    else if (key == "figure") cfg.figure = static_cast<int>(detail::parse_count(key, value));
    else if (key == "r") cfg.r = parse_double(value);
    else if (key == "R") cfg.R = parse_double(value);
    else if (key == "a") cfg.a = parse_double(value);
    else if (key == "b") cfg.b = parse_double(value);
    else if (key == "H") cfg.H = parse_double(value);
    else if (key == "c") cfg.c = parse_double(value);
    else if (key == "t_min") cfg.t_min = parse_double(value);
    else if (key == "t_max") cfg.t_max = parse_double(value);
    else if (key == "n_t") cfg.n_t = detail::parse_count(key, value);
    else if (key == "n_theta") cfg.n_theta = detail::parse_count(key, value);
    else if (key == "spacing") {
      if (value != "uniform" && value != "log") throw Error(ErrorKind::ParseError, "spacing must be uniform or log");
      cfg.spacing = value;
    } else if (key == "quad_tol") cfg.quad_tol = parse_double(value);
    else if (key == "root_tol") cfg.root_tol = parse_double(value);
    else if (key == "threads") cfg.threads = static_cast<unsigned>(detail::parse_count(key, value));
    else if (key == "human") {
      if (value != "true" && value != "false") throw Error(ErrorKind::ParseError, "human must be true or false");
      cfg.human = value == "true";
    } else if (key == "patch") cfg.patch = value;
    else if (key == "output") cfg.output = value;
    else throw Error(ErrorKind::ParseError, "unknown key '" + key + "'");
  }
  if (cfg.command.empty()) throw Error(ErrorKind::ParseError, "config has no command");
  return cfg;
}

}  // namespace lcmc
