// lcmc: command line front end for the rotational CMC toolkit.
//
// Every subcommand fills a JobConfig and hands it to execute(), so
// `--save-config` followed by `run` reproduces a command byte for byte.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lcmc/lcmc.hpp"

namespace {

using json = nlohmann::ordered_json;
using lcmc::Error;
using lcmc::ErrorKind;
using lcmc::JobConfig;

// Exit codes.
constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitNotSolvable = 2;
constexpr int kExitUsage = 3;
constexpr int kExitIo = 4;

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotSpacelikeSolvable:
    case ErrorKind::DegenerateRadii: return kExitNotSolvable;
    case ErrorKind::InvalidArgument:
    case ErrorKind::ParseError:
    case ErrorKind::NonPositiveRadius: return kExitUsage;
    case ErrorKind::IoError: return kExitIo;
    default: return kExitInternal;
  }
}

json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double need(const std::optional<double>& v, const char* name) {
  if (!v) throw Error(ErrorKind::InvalidArgument, std::string("missing --") + name);
  return *v;
}

lcmc::Spacing spacing_of(const std::string& s) {
  if (s == "uniform") return lcmc::Spacing::Uniform;
  if (s == "log") return lcmc::Spacing::Log;
  throw Error(ErrorKind::InvalidArgument, "spacing must be uniform or log");
}

lcmc::RingPair rings_of(const JobConfig& cfg) {
  return {need(cfg.r, "r"), need(cfg.R, "R"), need(cfg.a, "a"), need(cfg.b, "b")};
}

lcmc::ProfileCurve curve_of(const JobConfig& cfg) {
  return lcmc::ProfileCurve({need(cfg.H, "H"), need(cfg.c, "c")}, {cfg.r.value_or(1.0), cfg.a.value_or(0.0)},
                            cfg.quad_tol);
}

json curvature_json(const lcmc::CurvatureReport& rep) {
  return {{"H_mean", num(rep.H_mean)},
          {"H_max_dev", num(rep.H_max_dev)},
          {"spacelike_min_margin", num(rep.spacelike_min_margin)},
          {"points_checked", rep.points_checked}};
}

json singularity_json(const lcmc::ProfileCurve& curve) {
  const auto s = lcmc::singularity_report(curve);
  return {{"limit_slope", num(s.limit_slope)},
          {"kind", std::string(lcmc::to_string(s.kind))},
          {"cone_vertex_height", num(s.cone_vertex_height)}};
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
  return out;
}

json cmd_solve(const JobConfig& cfg) {
  const auto sol = lcmc::solve_plateau(rings_of(cfg), need(cfg.H, "H"), cfg.root_tol, cfg.quad_tol);
  const auto flux = lcmc::flux_closed_form(*cfg.r, sol.curve.params());
  return {{"command", "solve"},
          {"c", num(sol.c)},
          {"regime", std::string(lcmc::to_string(sol.regime))},
          {"H0", sol.H0 ? num(*sol.H0) : json(nullptr)},
          {"residual", num(sol.residual)},
          {"iterations", sol.iterations},
          {"flux", num(flux.flux)},
          {"singularity", singularity_json(sol.curve)},
          {"asymptotic_slope", num(lcmc::asymptotic_slope(sol.curve.params()))}};
}

json cmd_classify(const JobConfig& cfg) {
  const auto rings = lcmc::validate_rings(rings_of(cfg));
  const double H = need(cfg.H, "H");
  std::optional<double> H0;
  if (rings.b() >= rings.a()) H0 = lcmc::threshold_H0(rings);
  return {{"command", "classify"},
          {"regime", std::string(lcmc::to_string(lcmc::predict_regime(H, rings)))},
          {"H0", H0 ? num(*H0) : json(nullptr)},
          {"slope_bound", num(rings.slope_bound())}};
}

json cmd_flux(const JobConfig& cfg) {
  const auto curve = curve_of(cfg);
  const double r = need(cfg.r, "r");
  const auto exact = lcmc::flux_closed_form(r, curve.params());
  const auto numeric = lcmc::flux_numeric(r, curve, lcmc::FluxIntegration::Angular);
  return {{"command", "flux"},
          {"flux", num(exact.flux)},
          {"area_term", num(exact.area_term)},
          {"conormal_term", num(exact.conormal_term)},
          {"flux_numeric", num(numeric.flux)},
          {"difference", num(std::abs(numeric.flux - exact.flux))}};
}

// Patch lattice for profile input: half width t_max, spacing t_max / n_t,
// annulus t_min <= |x| <= t_max evaluated.
json cmd_verify(const JobConfig& cfg) {
  json out{{"command", "verify"}};
  lcmc::GraphPatch patch;
  if (!cfg.patch.empty()) {
    std::ifstream in(cfg.patch, std::ios::binary);
    if (!in) throw Error(ErrorKind::IoError, "cannot read " + cfg.patch);
    patch = lcmc::read_patch_csv(in);
    out["source"] = "patch";
  } else {
    std::optional<lcmc::ProfileCurve> curve;
    double t_in = cfg.t_min.value_or(0.5);
    double t_out = cfg.t_max.value_or(2.0);
    if (cfg.R && cfg.b) {
      const auto sol = lcmc::solve_plateau(rings_of(cfg), need(cfg.H, "H"), cfg.root_tol, cfg.quad_tol);
      curve.emplace(sol.curve);
      t_in = cfg.t_min.value_or(*cfg.r);
      t_out = cfg.t_max.value_or(*cfg.R);
      out["source"] = "solved";
      out["c"] = num(sol.c);
    } else {
      curve.emplace(curve_of(cfg));
      out["source"] = "profile";
    }
    if (!(t_in > 0.0) || !(t_out > t_in) || cfg.n_t < 2) {
      throw Error(ErrorKind::InvalidArgument, "verify needs 0 < t_min < t_max and n_t >= 2");
    }
    patch = lcmc::sample_rotated_profile(*curve, t_out, t_out / static_cast<double>(cfg.n_t), t_in, t_out);
    const double t_mid = 0.5 * (t_in + t_out);
    out["H"] = num(curve->params().H);
    out["H_rotational"] = num(lcmc::mean_curvature_rotational(t_mid, *curve, lcmc::default_fd_step(t_mid)));
  }
  out["nondivergence"] = curvature_json(lcmc::mean_curvature_graph(patch, lcmc::CurvatureForm::Nondivergence));
  out["divergence"] = curvature_json(lcmc::mean_curvature_graph(patch, lcmc::CurvatureForm::Divergence));
  return out;
}

json cmd_mesh(const JobConfig& cfg, std::ostream& stdout_stream, bool& wrote_stdout) {
  const auto curve = curve_of(cfg);
  const auto mesh = lcmc::sample_surface(curve, need(cfg.t_min, "t-min"), need(cfg.t_max, "t-max"), cfg.n_t,
                                         cfg.n_theta, spacing_of(cfg.spacing), cfg.threads);
  if (cfg.output.empty()) {
    lcmc::export_obj(mesh, stdout_stream);
    wrote_stdout = true;
    return {};
  }
  auto out = open_out(cfg.output);
  lcmc::export_obj(mesh, out);
  return {{"command", "mesh"},
          {"output", cfg.output},
          {"vertices", mesh.vertices.size()},
          {"triangles", mesh.triangles.size()},
          {"singular_vertex", mesh.singular_vertex ? json(*mesh.singular_vertex) : json(nullptr)},
          {"regime", std::string(lcmc::to_string(mesh.regime))}};
}

json cmd_figure(const JobConfig& cfg) {
  if (!cfg.figure) throw Error(ErrorKind::InvalidArgument, "figure id required");
  const int id = *cfg.figure;
  const auto fig = lcmc::make_figure(id, cfg.quad_tol, cfg.n_t, cfg.n_theta, cfg.threads);
  const std::filesystem::path dir = cfg.output.empty() ? std::filesystem::path(".") : std::filesystem::path(cfg.output);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot create " + dir.string());

  const std::string csv_name = "figure" + std::to_string(id) + "_profile.csv";
  const std::string obj_name = "figure" + std::to_string(id) + "_surface.obj";
  {
    auto csv = open_out(dir / csv_name);
    lcmc::export_profile_csv(fig.curve, fig.samples, csv);
  }
  {
    auto obj = open_out(dir / obj_name);
    lcmc::export_obj(fig.mesh, obj);
  }

  // Lowest sampled point of the profile.
  std::size_t low = 0;
  std::vector<double> f(fig.samples.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double t = fig.samples[i];
    f[i] = t > 0.0 ? fig.curve.height(t) : fig.curve.height_at_axis();
    if (f[i] < f[low]) low = i;
  }
  return {{"command", "figure"},
          {"figure", id},
          {"H", num(fig.spec.params.H)},
          {"c", num(fig.spec.params.c)},
          {"t_min", num(fig.spec.t_min)},
          {"t_max", num(fig.spec.t_max)},
          {"regime", std::string(lcmc::to_string(fig.curve.regime()))},
          {"f_at_t_max", num(f.back())},
          {"t_of_min_sample", num(fig.samples[low])},
          {"min_sample", num(f[low])},
          {"singularity", singularity_json(fig.curve)},
          {"profile_csv", csv_name},
          {"surface_obj", obj_name}};
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object()) flatten(*it, key, rows);
    else if (it->is_string()) rows.emplace_back(key, it->get<std::string>());
    else if (it->is_number_float()) rows.emplace_back(key, lcmc::format_double(it->get<double>()));
    else rows.emplace_back(key, it->dump());
  }
}

void emit(const json& j, bool human, std::ostream& out) {
  if (!human) {
    out << j.dump() << '\n';
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& [k, v] : rows) out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
}

int execute(const JobConfig& cfg) {
  json result;
  bool wrote_stdout = false;
  if (cfg.command == "solve") result = cmd_solve(cfg);
  else if (cfg.command == "classify") result = cmd_classify(cfg);
  else if (cfg.command == "flux") result = cmd_flux(cfg);
  else if (cfg.command == "verify") result = cmd_verify(cfg);
  else if (cfg.command == "mesh") result = cmd_mesh(cfg, std::cout, wrote_stdout);
  else if (cfg.command == "figure") result = cmd_figure(cfg);
  else throw Error(ErrorKind::InvalidArgument, "unknown command '" + cfg.command + "'");
  if (!wrote_stdout) emit(result, cfg.human, std::cout);
  return kExitOk;
}

void report_error(std::string_view kind, const std::string& message) {
  json j{{"error", std::string(kind)}, {"message", message}};
  std::cerr << j.dump() << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  JobConfig cfg;

  // LORENTZ_CMC_TOL replaces the default tolerances; explicit flags win.
  if (const char* env = std::getenv("LORENTZ_CMC_TOL"); env && *env) {
    try {
      const double tol = lcmc::parse_double(env);
      if (!(tol > 0.0)) throw Error(ErrorKind::ParseError, "must be positive");
      cfg.quad_tol = tol;
      cfg.root_tol = std::max(lcmc::kDefaultRootTol, 10.0 * tol);
    } catch (const Error& e) {
      report_error("ParseError", std::string("LORENTZ_CMC_TOL: ") + e.what());
      return kExitUsage;
    }
  }
  const double env_quad_tol = cfg.quad_tol;
  const double env_root_tol = cfg.root_tol;

  CLI::App app{"Spacelike rotational CMC surfaces in Lorentz-Minkowski 3-space"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string save_config;
  app.add_flag("--human", cfg.human, "print aligned tables instead of JSON lines");
  app.add_option("--quad-tol", cfg.quad_tol, "absolute quadrature tolerance")->check(CLI::PositiveNumber);
  app.add_option("--root-tol", cfg.root_tol, "tolerance on |f(R) - b|")->check(CLI::PositiveNumber);
  app.add_option("--save-config", save_config, "write the job as a config file, then run it");

  auto rings_opts = [&](CLI::App* sub, bool required) {
    sub->add_option("--r", cfg.r, "inner ring radius")->required(required);
    sub->add_option("--R", cfg.R, "outer ring radius")->required(required);
    sub->add_option("--a", cfg.a, "inner ring height")->required(required);
    sub->add_option("--b", cfg.b, "outer ring height")->required(required);
    sub->add_option("--H", cfg.H, "mean curvature")->required(required);
  };
  auto profile_opts = [&](CLI::App* sub) {
    sub->add_option("--H", cfg.H, "mean curvature")->required();
    sub->add_option("--c", cfg.c, "first-integral constant")->required();
    sub->add_option("--r", cfg.r, "anchor radius (default 1)");
    sub->add_option("--a", cfg.a, "height at the anchor radius (default 0)");
  };
  auto grid_opts = [&](CLI::App* sub) {
    sub->add_option("--n-t", cfg.n_t, "radial samples")->check(CLI::Range(2ULL, 1ULL << 24));
    sub->add_option("--n-theta", cfg.n_theta, "angular samples")->check(CLI::Range(3ULL, 1ULL << 24));
    sub->add_option("--threads", cfg.threads, "worker threads for mesh sampling")->check(CLI::Range(1U, 256U));
  };

  auto* solve = app.add_subcommand("solve", "solve the two-ring problem for c");
  rings_opts(solve, true);
  auto* classify = app.add_subcommand("classify", "predict the regime without solving");
  rings_opts(classify, true);

  auto* flux = app.add_subcommand("flux", "flux of the circle of radius r");
  flux->add_option("--H", cfg.H, "mean curvature")->required();
  flux->add_option("--c", cfg.c, "first-integral constant")->required();
  flux->add_option("--r", cfg.r, "circle radius, also the anchor radius")->required();
  flux->add_option("--a", cfg.a, "height at r (default 0)");

  auto* verify = app.add_subcommand("verify", "finite-difference mean curvature of a patch or profile");
  verify->add_option("--patch", cfg.patch, "CSV with header x1,x2,u");
  verify->add_option("--H", cfg.H, "mean curvature");
  verify->add_option("--c", cfg.c, "first-integral constant (profile input)");
  verify->add_option("--r", cfg.r, "anchor / inner ring radius");
  verify->add_option("--R", cfg.R, "outer ring radius (solve first)");
  verify->add_option("--a", cfg.a, "anchor / inner ring height");
  verify->add_option("--b", cfg.b, "outer ring height (solve first)");
  verify->add_option("--t-min", cfg.t_min, "inner radius of the checked annulus");
  verify->add_option("--t-max", cfg.t_max, "outer radius of the checked annulus and patch half width");
  verify->add_option("--n-t", cfg.n_t, "lattice points per half width")->check(CLI::Range(2ULL, 1ULL << 16));

  auto* mesh = app.add_subcommand("mesh", "triangulate the surface of revolution as OBJ");
  profile_opts(mesh);
  mesh->add_option("--t-min", cfg.t_min, "smallest radius, 0 adds the apex")->required();
  mesh->add_option("--t-max", cfg.t_max, "largest radius")->required();
  mesh->add_option("--spacing", cfg.spacing, "uniform or log")->check(CLI::IsMember({"uniform", "log"}));
  mesh->add_option("--out", cfg.output, "OBJ path (stdout when omitted)");
  grid_opts(mesh);

  auto* figure = app.add_subcommand("figure", "write profile CSV and surface OBJ of a reference figure");
  figure->add_option("id", cfg.figure, "figure number 1..4")->required()->check(CLI::Range(1, 4));
  figure->add_option("--out-dir", cfg.output, "output directory (default .)");
  grid_opts(figure);

  std::string config_path;
  auto* run = app.add_subcommand("run", "run a job from a config file");
  run->add_option("config", config_path, "key = value config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run->parsed()) {
      // Config keys override the (environment adjusted) defaults.
      std::string text = "quad_tol = " + lcmc::format_double(env_quad_tol) + "\nroot_tol = " +
                         lcmc::format_double(env_root_tol) + "\n";
      text += read_file(config_path);
      const bool human_flag = cfg.human;
      cfg = lcmc::parse_job_config(text);
      cfg.human = cfg.human || human_flag;
    } else {
      for (const auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
    }
    if (!save_config.empty()) {
      auto out = open_out(save_config);
      out << lcmc::to_string(cfg);
    }
    return execute(cfg);
  } catch (const Error& e) {
    report_error(lcmc::to_string(e.kind()), e.what());
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    report_error("Internal", e.what());
    return kExitInternal;
  }
}
