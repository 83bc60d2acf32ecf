#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "lcmc/format.hpp"
#include "lcmc/oracle.hpp"
#include "lcmc/patch_io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" LCMC_CLI_PATH "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// Value of "key": in a single JSON line (numbers and strings only).
std::string field(const std::string& line, const std::string& key) {
  const std::string tag = "\"" + key + "\":";
  const auto pos = line.find(tag);
  if (pos == std::string::npos) return "<missing>";
  auto start = pos + tag.size();
  if (line[start] == '"') {
    const auto end = line.find('"', start + 1);
    return line.substr(start + 1, end - start - 1);
  }
  const auto end = line.find_first_of(",}", start);
  return line.substr(start, end - start);
}

double num_field(const std::string& line, const std::string& key) { return lcmc::parse_double(field(line, key)); }

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("lcmc_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, SolvePositiveC) {
  const auto r = run("solve --r 1 --R 2 --a 0 --b 0.5 --H 1");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(field(r.out, "regime"), "PositiveC");
  EXPECT_NEAR(num_field(r.out, "c"), 1.15941375336662789, 1e-7);
  EXPECT_NEAR(num_field(r.out, "H0"), 0.390360029179413271741753854496, 1e-12);
}

TEST(Cli, SolveNotSpacelikeExitsTwo) {
  EXPECT_EQ(run("solve --r 1 --R 2 --a 0 --b 1.5 --H 1").code, 2);
  EXPECT_EQ(run("classify --r 1 --R 2 --a 0 --b 1.5 --H 1").code, 2);
  EXPECT_EQ(run("solve --r 2 --R 1 --a 0 --b 0 --H 1").code, 2);
}

TEST(Cli, SolvePlane) {
  const auto r = run("solve --r 1 --R 2 --a 0 --b 0 --H 0");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(field(r.out, "regime"), "Plane");
  EXPECT_EQ(num_field(r.out, "c"), 0.0);
  EXPECT_EQ(num_field(r.out, "flux"), 0.0);
}

TEST(Cli, NegativeHMirrors) {
  const auto r = run("solve --r 1 --R 2 --a 0 --b -0.5 --H -1");
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(num_field(r.out, "c"), -1.15941375336662789, 1e-7);
}

TEST(Cli, Classify) {
  EXPECT_EQ(field(run("classify --r 1 --R 2 --a 0 --b 0.5 --H 0.2").out, "regime"), "NegativeC");
  EXPECT_EQ(field(run("classify --r 1 --R 2 --a 0 --b 0.5 --H 0.8").out, "regime"), "PositiveC");
  EXPECT_EQ(field(run("classify --r 1 --R 2 --a 0 --b 0.5 --H 0").out, "regime"), "MaximalCatenoid");
}

TEST(Cli, Flux) {
  const auto r = run("flux --H 1 --c 3 --r 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(num_field(r.out, "flux"), 18.8495559215387594, 1e-12);
  EXPECT_LT(num_field(r.out, "difference"), 1e-8);
}

TEST(Cli, UsageErrorsExitThree) {
  EXPECT_EQ(run("").code, 3);
  EXPECT_EQ(run("solve --r 1").code, 3);
  EXPECT_EQ(run("bogus").code, 3);
  EXPECT_EQ(run("figure 5").code, 3);
  EXPECT_EQ(run("solve --r 1 --R 2 --a 0 --b 0.5 --H abc").code, 3);
  EXPECT_EQ(run("solve --r 1 --R 2 --a 0 --b 0.5 --H 1", "LORENTZ_CMC_TOL=nope").code, 3);
  const auto dir = scratch("badcfg");
  std::ofstream(dir / "job.cfg") << "command = solve\nunknown = 4\n";
  EXPECT_EQ(run("run " + (dir / "job.cfg").string()).code, 3);
}

TEST(Cli, IoErrorExitsFour) {
  EXPECT_EQ(run("run /nonexistent/dir/job.cfg").code, 4);
  EXPECT_EQ(run("verify --patch /nonexistent/patch.csv").code, 4);
}

TEST(Cli, InternalErrorExitsOne) {
  // The default quadrature budget cannot reach an absurd tolerance.
  EXPECT_EQ(run("solve --r 1 --R 2 --a 0 --b 0.5 --H 1 --quad-tol 1e-300 --root-tol 1e-300").code, 1);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run("--help").code, 0); }

TEST(Cli, HumanTable) {
  const auto r = run("--human solve --r 1 --R 2 --a 0 --b 0.5 --H 1");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("regime"), std::string::npos);
  EXPECT_NE(r.out.find("PositiveC"), std::string::npos);
  EXPECT_NE(r.out.find("singularity.kind"), std::string::npos);
  EXPECT_EQ(r.out.find('{'), std::string::npos);
}

TEST(Cli, EnvToleranceIsUsed) {
  const auto dir = scratch("env");
  const auto cfg = (dir / "job.cfg").string();
  ASSERT_EQ(run("--save-config " + cfg + " solve --r 1 --R 2 --a 0 --b 0.5 --H 1", "LORENTZ_CMC_TOL=1e-8").code, 0);
  const std::string text = slurp(cfg);
  EXPECT_NE(text.find("quad_tol = 1e-08"), std::string::npos) << text;
  EXPECT_NE(text.find("root_tol = 1e-07"), std::string::npos) << text;
}

TEST(Cli, DeterministicAndConfigReplay) {
  const std::string args = "solve --r 1 --R 3 --a 0.2 --b 0.9 --H 0.35";
  const auto first = run(args);
  const auto second = run(args);
  ASSERT_EQ(first.code, 0);
  EXPECT_EQ(first.out, second.out);

  const auto dir = scratch("replay");
  const auto cfg = (dir / "job.cfg").string();
  const auto saved = run("--save-config " + cfg + " " + args);
  EXPECT_EQ(saved.out, first.out);
  EXPECT_EQ(run("run " + cfg).out, first.out);
}

TEST(Cli, FigureFilesDeterministic) {
  const auto d1 = scratch("fig_a");
  const auto d2 = scratch("fig_b");
  ASSERT_EQ(run("figure 2 --out-dir " + d1.string()).code, 0);
  ASSERT_EQ(run("figure 2 --threads 4 --out-dir " + d2.string()).code, 0);
  for (const char* name : {"figure2_profile.csv", "figure2_surface.obj"}) {
    const auto a = slurp(d1 / name);
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, slurp(d2 / name)) << name;
  }
}

TEST(Cli, FigureOneValues) {
  const auto dir = scratch("fig1");
  const auto r = run("figure 1 --out-dir " + dir.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(num_field(r.out, "f_at_t_max"), -3.76811656910353573819627864728, 1e-9);
  EXPECT_EQ(field(r.out, "kind"), "ConicalLower");
}

TEST(Cli, FigureThreeAndFourAgree) {
  const auto d3 = scratch("fig3");
  const auto d4 = scratch("fig4");
  ASSERT_EQ(run("figure 3 --out-dir " + d3.string()).code, 0);
  const auto r4 = run("figure 4 --out-dir " + d4.string());
  ASSERT_EQ(r4.code, 0);
  EXPECT_EQ(num_field(r4.out, "limit_slope"), -1.0);
  EXPECT_NEAR(num_field(r4.out, "t_of_min_sample"), 1.73, 1e-12);

  auto rows = [](const fs::path& p) {
    std::ifstream in(p);
    std::string line;
    std::getline(in, line);
    std::vector<std::pair<double, double>> out;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string t, f;
      std::getline(ls, t, ',');
      std::getline(ls, f, ',');
      out.emplace_back(lcmc::parse_double(t), lcmc::parse_double(f));
    }
    return out;
  };
  const auto three = rows(d3 / "figure3_profile.csv");
  const auto four = rows(d4 / "figure4_profile.csv");
  ASSERT_EQ(three.size(), 301u);
  ASSERT_EQ(four.size(), 401u);
  for (std::size_t i = 0; i < three.size(); ++i) {
    EXPECT_NEAR(three[i].first, four[i + 100].first, 1e-12);
    EXPECT_NEAR(three[i].second, four[i + 100].second, 1e-9);
  }
}

TEST(Cli, MeshToFileAndStdout) {
  const auto dir = scratch("mesh");
  const auto obj = (dir / "m.obj").string();
  const auto r = run("mesh --H 1 --c 3 --t-min 0 --t-max 4 --n-t 5 --n-theta 6 --out " + obj);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(num_field(r.out, "vertices"), 25.0);
  EXPECT_EQ(num_field(r.out, "singular_vertex"), 0.0);
  const auto s = run("mesh --H 1 --c 3 --t-min 0 --t-max 4 --n-t 5 --n-theta 6");
  EXPECT_EQ(s.out, slurp(obj));
  EXPECT_EQ(run("mesh --H 1 --c 3 --t-min 0 --t-max 4 --spacing cubic").code, 3);
}

TEST(Cli, VerifyPlanePatch) {
  const auto dir = scratch("plane");
  const auto p = lcmc::sample_graph([](double x, double y) { return 0.3 * x - 0.4 * y + 1.0; }, 1.0, 0.125, 0.0, 10.0);
  std::ofstream((dir / "p.csv")) << [&] { std::ostringstream ss; lcmc::write_patch_csv(p, ss); return ss.str(); }();
  const auto r = run("verify --patch " + (dir / "p.csv").string());
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(num_field(r.out, "H_mean"), 0.0, 1e-12);
}

TEST(Cli, VerifyHyperbolicPatch) {
  const auto dir = scratch("hyp");
  const auto p = lcmc::sample_graph([](double x, double y) { return std::sqrt(1.0 + x * x + y * y); }, 1.0,
                                    1.0 / 64, 0.0, 10.0);
  std::ofstream((dir / "h.csv")) << [&] { std::ostringstream ss; lcmc::write_patch_csv(p, ss); return ss.str(); }();
  const auto r = run("verify --patch " + (dir / "h.csv").string());
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(num_field(r.out, "H_mean"), 1.0, 1e-3);
}

TEST(Cli, VerifySolvedProfile) {
  const auto r = run("verify --r 1 --R 2 --a 0 --b 0.5 --H 0.8 --n-t 128");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(field(r.out, "source"), "solved");
  EXPECT_NEAR(num_field(r.out, "H_mean"), 0.8, 1e-3);
  EXPECT_NEAR(num_field(r.out, "H_rotational"), 0.8, 1e-5);
}
