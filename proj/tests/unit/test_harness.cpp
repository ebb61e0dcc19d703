#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cplab/harness/cli.hpp"
#include "cplab/harness/commands.hpp"

namespace cplab::harness {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("cplab_harness_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

TEST(Cli, ExactPrintsPolynomialAndJson) {
  CliRun r = run({"exact", "--ensemble", "complex", "--b", "3/4", "--n", "2", "--m", "2"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  EXPECT_NE(r.out.find("f(2,2) = mu^2*nu^2"), std::string::npos);
  auto j = nlohmann::json::parse(r.out.substr(r.out.find('{')));
  EXPECT_EQ(j["cross_check"], "equal");
  EXPECT_EQ(j["ensemble"]["b"], "3/4");
  EXPECT_EQ(j["polynomial"][0], nlohmann::json({0, 0, "12"}));
}

TEST(Cli, ExactValueAtRationalPoint) {
  // f(1,1) = mu nu - mu - nu + 2b + 1/2 with b = 3/4
  CliRun r = run({"exact", "--n", "1", "--m", "1", "--mu", "1/2", "--nu", "4"});
  ASSERT_EQ(r.code, kExitPass);
  auto j = nlohmann::json::parse(r.out.substr(r.out.find('{')));
  EXPECT_EQ(j["value"], "-1/2");  // 2 - 1/2 - 4 + 2
}

TEST(Cli, GfCheckReportsAllCoefficients) {
  CliRun r = run({"gf-check", "--ensemble", "real", "--b", "3", "--alpha", "2", "--mmax", "20"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out, "PASS, 21 coefficients equal\n");
  CliRun p = run({"gf-check", "--ensemble", "complex", "--b", "2", "--alpha", "1", "--mmax", "8", "--mu", "2", "--nu", "3"});
  EXPECT_EQ(p.out, "PASS, 9 coefficients equal\n");
}

TEST(Cli, LimitsHardEdgeCsv) {
  CliRun r = run({"limits", "--regime", "hard", "--alpha", "0", "--mu", "1", "--nu", "2", "--N", "50,100,200,400",
               "--precision", "128"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  std::istringstream csv(r.out);
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "N,scaled_value,predicted_limit,abs_error,nodes_used,precision_bits");
  double prev = 1e300;
  int rows = 0;
  while (std::getline(csv, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
    ASSERT_EQ(cells.size(), 6u);
    double err = std::stod(cells[3]);
    EXPECT_LT(err, prev);
    prev = err;
    ++rows;
  }
  EXPECT_EQ(rows, 4);
}

TEST(Cli, FailedCheckExitsOneWithReport) {
  // The complex bulk error is not monotone over these sizes.
  CliRun r = run({"limits", "--regime", "bulk", "--mu", "0.3", "--nu", "-0.2", "--N", "50,100,200", "--precision", "128"});
  EXPECT_EQ(r.code, kExitCheckFailed);
  auto j = nlohmann::json::parse(r.err);
  EXPECT_EQ(j["status"], "FAIL");
  EXPECT_EQ(j["subcommand"], "limits");
  EXPECT_EQ(j["failures"][0]["check"], "monotone");

  CliRun z = run({"mc", "--n", "2", "--m", "2", "--samples", "2000", "--z-max", "0"});
  EXPECT_EQ(z.code, kExitCheckFailed);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"nonsense"}).code, kExitUsage);
  EXPECT_EQ(run({"exact", "--n", "x"}).code, kExitUsage);
  EXPECT_EQ(run({"exact", "--ensemble", "quaternion"}).code, kExitUsage);
  EXPECT_EQ(run({"exact", "--mu", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"limits", "--regime", "bulk", "--xi", "5"}).code, kExitUsage);
  EXPECT_EQ(run({"kernels", "--kernel", "cosine"}).code, kExitUsage);
  EXPECT_EQ(run({"exact", "--precision", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitPass);
}

TEST(Cli, BruteMatchesRecursion) {
  CliRun r = run({"brute", "--ensemble", "real", "--n", "2", "--m", "2", "--mu", "1", "--nu", "2"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  auto j = nlohmann::json::parse(r.out.substr(r.out.find('{')));
  EXPECT_TRUE(j["equals_recursion"].get<bool>());
  EXPECT_EQ(j["value"], j["recursion_value"]);
  EXPECT_EQ(run({"brute", "--ensemble", "real", "--n", "5", "--m", "5"}).code, kExitCheckFailed);
}

TEST(Cli, ContourKernelsIdentities) {
  EXPECT_EQ(run({"contour", "--n", "4", "--m", "3", "--mu", "1/3", "--nu", "5/2", "--ensemble", "real"}).code,
            kExitPass);
  CliRun k = run({"kernels", "--kernel", "airy2", "--points", "-1,0,0.5,1.5"});
  EXPECT_EQ(k.code, kExitPass) << k.err;
  EXPECT_EQ(k.out.substr(0, k.out.find('\n')), "kernel,alpha,x,y,value,d_numeric,d_error");
  EXPECT_EQ(std::count(k.out.begin(), k.out.end(), '\n'), 17);
  EXPECT_EQ(run({"kernels", "--kernel", "sine2", "--d-tolerance", "1e-30"}).code, kExitCheckFailed);
  EXPECT_EQ(run({"identities", "--which", "laplace"}).code, kExitPass);
}

TEST(Cli, ConfigFileWithOverridesAndRoundTrip) {
  fs::path dir = scratch_dir("config");
  fs::path cfg = dir / "run.toml";
  {
    std::ofstream f(cfg);
    f << "# hard edge scan\nprecision = 128\n\n[limits]\nregime = \"hard\"\nalpha = 1\nmu = 1\nnu = 2\n"
         "N = [50, 100]\n";
  }
  CliRun emitted = run({"--config", cfg.string(), "--emit-config"});
  ASSERT_EQ(emitted.code, kExitPass) << emitted.err;
  EXPECT_NE(emitted.out.find("regime = \"hard\""), std::string::npos);
  EXPECT_NE(emitted.out.find("N = [\"50\", \"100\"]"), std::string::npos);

  fs::path again = dir / "again.toml";
  std::ofstream(again) << emitted.out;
  EXPECT_EQ(run({"--config", again.string(), "--emit-config"}).out, emitted.out);

  CliRun overridden = run({"--config", cfg.string(), "limits", "--alpha", "0", "--emit-config"});
  EXPECT_NE(overridden.out.find("alpha = \"0\""), std::string::npos);
  EXPECT_NE(overridden.out.find("precision = \"128\""), std::string::npos);

  CliRun scan = run({"--config", cfg.string()});
  EXPECT_EQ(scan.code, kExitPass) << scan.err;
  EXPECT_EQ(std::count(scan.out.begin(), scan.out.end(), '\n'), 3);
}

TEST(Cli, ManifestAndByteIdenticalMcRerun) {
  fs::path a = scratch_dir("mc_a");
  fs::path b = scratch_dir("mc_b");
  std::vector<std::string> args{"mc", "--ensemble", "real", "--distribution", "uniform", "--n", "3",
                                "--m", "2", "--samples", "5000", "--seed", "4242"};
  auto with_dir = [&](const fs::path& d) {
    auto v = args;
    v.insert(v.end(), {"--output-dir", d.string()});
    return v;
  };
  ASSERT_EQ(run(with_dir(a)).code, kExitPass);
  auto manifest = nlohmann::json::parse(slurp(a / "manifest.json"));
  EXPECT_EQ(manifest["seed"], 4242u);
  EXPECT_EQ(manifest["subcommand"], "mc");
  EXPECT_EQ(manifest["status"], "PASS");
  EXPECT_EQ(manifest["config"]["mc"]["seed"], "4242");

  ASSERT_EQ(run({"--config", (a / "run.toml").string(), "--output-dir", b.string()}).code, kExitPass);
  EXPECT_EQ(slurp(a / "mc.json"), slurp(b / "mc.json"));
}

TEST(Cli, TableCacheHitOnSecondRun) {
  fs::path cache = scratch_dir("cache");
  std::vector<std::string> args{"exact", "--n", "5", "--m", "4", "--ensemble", "real", "--b", "5",
                                "--cache-dir", cache.string()};
  CliRun first = run(args);
  CliRun second = run(args);
  ASSERT_EQ(first.code, kExitPass);
  EXPECT_NE(first.out.find("\"cache\":\"miss\""), std::string::npos);
  EXPECT_NE(second.out.find("\"cache\":\"hit\""), std::string::npos);
  EXPECT_EQ(first.out.substr(0, first.out.find('\n')), second.out.substr(0, second.out.find('\n')));
}

TEST(Cli, PrecisionFromEnvironment) {
  ::setenv("CPLAB_PRECISION", "96", 1);
  EXPECT_EQ(default_precision_from_env(), 96);
  CliRun r = run({"contour", "--n", "2", "--m", "2"});
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["precision_bits"], 96);
  ::setenv("CPLAB_PRECISION", "lots", 1);
  EXPECT_THROW(default_precision_from_env(), std::invalid_argument);
  EXPECT_EQ(run({"exact"}).code, kExitUsage);
  ::unsetenv("CPLAB_PRECISION");
  EXPECT_EQ(default_precision_from_env(), kDefaultPrecisionBits);
}

TEST(Commands, MakeEnsemble) {
  EXPECT_EQ(make_ensemble("real", ""), EnsembleSpec::real(3));
  EXPECT_EQ(make_ensemble("Complex", "2"), EnsembleSpec::complex(2));
  EXPECT_THROW(make_ensemble("real", "1/2"), std::invalid_argument);
}

}  // namespace
}  // namespace cplab::harness
