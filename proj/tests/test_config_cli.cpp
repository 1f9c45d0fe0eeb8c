#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fracbvp/config.hpp"

using namespace fracbvp;
namespace fs = std::filesystem;

namespace {

const char* kReferenceConfig =
    "# reference instance\n"
    "k = 1\n"
    "m = 0\n"
    "alpha = 0.5\n"
    "beta = 1.5\n"
    "a = 1\n"
    "b = 1\n"
    "phi_family = poly\n"
    "phi_coefficients = 1\n"
    "modes = 6\n"
    "quad_order = 32\n"
    "grid_nx = 9\n"
    "grid_ny = 9\n";

fs::path make_temp_dir(const std::string& tag) {
  fs::path dir = fs::temp_directory_path() / ("fracbvp_test_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path write_config(const fs::path& dir, const std::string& text) {
  fs::path p = dir / "config.txt";
  std::ofstream out(p);
  out << text;
  return p;
}

int run_cli(const std::string& args, const fs::path& log) {
  std::string cmd = std::string(FRACBVP_CLI_PATH) + " " + args + " >" + log.string() +
                    " 2>" + log.string() + ".err";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("config parsing and round trip") {
  std::istringstream in(kReferenceConfig);
  FileConfig c = parse_config(in);
  CHECK(c.k == 1);
  CHECK(c.alpha == 0.5);
  CHECK(c.beta == 1.5);
  CHECK(c.phi_family == "poly");
  REQUIRE(c.phi_coefficients.size() == 1);
  CHECK(c.phi_coefficients[0] == 1.0);
  CHECK(c.modes == 6);

  std::string text = serialize_config(c);
  std::istringstream in2(text);
  FileConfig c2 = parse_config(in2);
  CHECK(serialize_config(c2) == text);
}

TEST_CASE("config error paths") {
  auto bad = [](const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
  };
  CHECK_THROWS_AS(bad("unknown_key = 1\n"), ConfigError);
  CHECK_THROWS_AS(bad("k = abc\n"), ConfigError);
  CHECK_THROWS_AS(bad("k 1\n"), ConfigError);
  CHECK_THROWS_AS(bad("phi_family = sine\n"), ConfigError);
  CHECK_THROWS_AS(bad("modes = 1.5\n"), ConfigError);

  std::istringstream in("modes = 40\nquad_order = 32\n");
  FileConfig c = parse_config(in);
  CHECK_THROWS_AS(resolve_config(c), ConfigError);
}

TEST_CASE("cli run writes outputs and exits 0") {
  auto dir = make_temp_dir("run");
  auto cfg = write_config(dir, kReferenceConfig);
  auto out = dir / "out";
  int rc = run_cli("--config " + cfg.string() + " --out " + out.string() +
                       " --verify-steps 256",
                   dir / "log");
  CHECK(rc == 0);
  CHECK(fs::exists(out / "solution.csv"));
  CHECK(fs::exists(out / "modes.csv"));
  CHECK(fs::exists(out / "report.json"));

  auto rep = nlohmann::json::parse(slurp(out / "report.json"));
  CHECK(rep["conjugation_value_gap"].get<double>() <= 1e-9);
  CHECK(rep["mode_closure_sup"].get<double>() <= 1e-9);
  CHECK(rep["bessel_ok"].get<bool>());
  CHECK(rep["uniqueness"]["modes"].size() == 6);

  std::string header = slurp(out / "solution.csv").substr(0, 13);
  CHECK(header == "x,y,branch,u\n");
}

TEST_CASE("cli exit codes: config error, resonance, strict") {
  auto dir = make_temp_dir("codes");
  auto bad = write_config(dir, "modes = 40\nquad_order = 32\n");
  CHECK(run_cli("--config " + bad.string() + " --out " + (dir / "o1").string(),
                dir / "l1") == 3);
  CHECK(run_cli("--config " + (dir / "missing.txt").string() + " --out " +
                    (dir / "o2").string(),
                dir / "l2") == 3);

  auto resonant =
      write_config(dir, std::string(kReferenceConfig) + "resonance_tol = 1e99\n");
  CHECK(run_cli("--config " + resonant.string() + " --out " + (dir / "o3").string() +
                    " --verify-steps 256",
                dir / "l3") == 2);

  auto strict =
      write_config(dir, std::string(kReferenceConfig) + "strict_pde_tol = 1e-30\n");
  CHECK(run_cli("--config " + strict.string() + " --out " + (dir / "o4").string() +
                    " --verify-steps 256 --strict",
                dir / "l4") == 4);
}

TEST_CASE("dry run prints a reparsable config and writes nothing") {
  auto dir = make_temp_dir("dry");
  auto cfg = write_config(dir, kReferenceConfig);
  auto out = dir / "out";
  auto log = dir / "log";
  int rc = run_cli("--config " + cfg.string() + " --out " + out.string() + " --dry-run",
                   log);
  CHECK(rc == 0);
  CHECK_FALSE(fs::exists(out / "solution.csv"));

  std::istringstream printed(slurp(log));
  FileConfig c = parse_config(printed);
  std::istringstream orig(kReferenceConfig);
  CHECK(serialize_config(c) == serialize_config(parse_config(orig)));
}

TEST_CASE("output precision override via the environment") {
  auto dir = make_temp_dir("prec");
  auto cfg = write_config(dir, kReferenceConfig);
  std::string base = std::string(FRACBVP_CLI_PATH) + " --config " + cfg.string() +
                     " --verify-steps 256 --out ";
  std::string cmd1 = base + (dir / "full").string() + " >/dev/null 2>&1";
  std::string cmd2 = "FRACBVP_OUTPUT_PRECISION=8 " + base + (dir / "short").string() +
                     " >/dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(cmd1.c_str())) == 0);
  CHECK(WEXITSTATUS(std::system(cmd2.c_str())) == 0);
  std::string full = slurp(dir / "full" / "solution.csv");
  std::string brief = slurp(dir / "short" / "solution.csv");
  CHECK(full != brief);
  CHECK(brief.size() < full.size());
}

TEST_CASE("two runs produce byte-identical solutions") {
  auto dir = make_temp_dir("det");
  auto cfg = write_config(dir, kReferenceConfig);
  CHECK(run_cli("--config " + cfg.string() + " --out " + (dir / "r1").string() +
                    " --verify-steps 256",
                dir / "l1") == 0);
  CHECK(run_cli("--config " + cfg.string() + " --out " + (dir / "r2").string() +
                    " --verify-steps 256",
                dir / "l2") == 0);
  CHECK(slurp(dir / "r1" / "solution.csv") == slurp(dir / "r2" / "solution.csv"));
  CHECK(slurp(dir / "r1" / "modes.csv") == slurp(dir / "r2" / "modes.csv"));
}
