#include "cplab/harness/cli.hpp"

#include <gmp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "cplab/harness/commands.hpp"

namespace cplab::harness {
namespace {

constexpr const char* kVersion = "0.1.0";

// Options that steer the invocation rather than describe the run.
bool is_control_option(const std::string& name) {
  return name == "help" || name == "config" || name == "emit-config" || name == "version";
}

std::string toml_string(const std::string& s) { return nlohmann::json(s).dump(); }

std::vector<std::string> option_values(const CLI::Option* o) {
  if (o->count() > 0) return o->results();
  std::string d = o->get_default_str();
  if (o->get_items_expected_max() <= 1) return d.empty() ? std::vector<std::string>{} : std::vector<std::string>{d};
  if (d.size() >= 2 && d.front() == '[' && d.back() == ']') d = d.substr(1, d.size() - 2);
  std::vector<std::string> items;
  std::stringstream ss(d);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

void emit_options(std::ostream& os, const CLI::App& app, nlohmann::json& as_json) {
  for (const CLI::Option* o : app.get_options()) {
    const std::string name = o->get_single_name();
    if (is_control_option(name)) continue;
    std::vector<std::string> values = option_values(o);
    if (values.empty()) continue;
    if (o->get_items_expected_max() > 1) {
      os << name << " = [";
      for (std::size_t i = 0; i < values.size(); ++i) os << (i ? ", " : "") << toml_string(values[i]);
      os << "]\n";
      as_json[name] = values;
    } else {
      os << name << " = " << toml_string(values.front()) << "\n";
      as_json[name] = values.front();
    }
  }
}

// TOML-style text that --config reads back to the same run.
std::string config_text(const CLI::App& app, const CLI::App& sub, nlohmann::json& as_json) {
  std::ostringstream os;
  nlohmann::json top = nlohmann::json::object();
  nlohmann::json own = nlohmann::json::object();
  emit_options(os, app, top);
  os << "\n[" << sub.get_name() << "]\n";
  emit_options(os, sub, own);
  as_json = top;
  as_json[sub.get_name()] = own;
  return os.str();
}

nlohmann::json failure_json(const std::string& subcommand, const std::vector<Failure>& failures) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& f : failures) list.push_back({{"check", f.check}, {"detail", f.detail}});
  return {{"status", "FAIL"}, {"subcommand", subcommand}, {"failures", list}};
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << content;
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

void persist(const CommonParams& common, const std::string& subcommand, const CommandOutcome& outcome,
             const nlohmann::json& config, const std::string& config_txt) {
  namespace fs = std::filesystem;
  fs::path dir(common.output_dir);
  fs::create_directories(dir);
  nlohmann::json outputs = nlohmann::json::array();
  if (!outcome.csv.empty()) {
    write_file(dir / (subcommand + ".csv"), outcome.csv);
    outputs.push_back(subcommand + ".csv");
  }
  write_file(dir / (subcommand + ".json"), outcome.report.dump(2) + "\n");
  outputs.push_back(subcommand + ".json");
  write_file(dir / "run.toml", config_txt);
  outputs.push_back("run.toml");

  nlohmann::json manifest = {
      {"tool", "cplab"},
      {"version", kVersion},
      {"subcommand", subcommand},
      {"config", config},
      {"precision_bits", common.precision},
      {"libraries", {{"gmp", gmp_version}, {"mpfr", mpfr_get_version()}, {"cli11", CLI11_VERSION}}},
      {"status", outcome.passed() ? "PASS" : "FAIL"},
      {"outputs", outputs},
  };
  if (outcome.report.contains("config") && outcome.report["config"].contains("seed")) {
    manifest["seed"] = outcome.report["config"]["seed"];
  }
  if (!outcome.passed()) manifest["failures"] = failure_json(subcommand, outcome.failures)["failures"];
  write_file(dir / "manifest.json", manifest.dump(2) + "\n");
}

}  // namespace

mpfr_prec_t default_precision_from_env() {
  const char* env = std::getenv("CPLAB_PRECISION");
  if (env == nullptr || *env == '\0') return kDefaultPrecisionBits;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 16 || v > (1L << 24)) {
    throw std::invalid_argument(std::string("CPLAB_PRECISION must be an integer in [16, 2^24], got '") + env + "'");
  }
  return static_cast<mpfr_prec_t>(v);
}

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommonParams common;
  try {
    common.precision = default_precision_from_env();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"Second-order correlation lab for characteristic polynomials of sample covariance matrices"};
  app.option_defaults()->always_capture_default();
  app.set_config("--config", "", "TOML-style run file; command-line options override it");
  app.set_version_flag("--version", kVersion);
  bool emit_config = false;
  app.add_flag("--emit-config", emit_config, "Print the effective configuration and exit");
  app.add_option("--precision", common.precision, "Working precision in bits ($CPLAB_PRECISION)")
      ->check(CLI::Range(16, 1 << 24));
  app.add_option("--threads", common.threads, "Worker threads (0 = all cores)");
  app.add_option("--output-dir", common.output_dir, "Directory for CSV/JSON artifacts and the manifest");
  app.add_option("--cache-dir", common.cache_dir, "Directory of cached exact tables");
  app.require_subcommand(1);
  app.fallthrough();

  std::function<CommandOutcome()> runner;
  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->configurable();
    return s;
  };

  ExactParams exact;
  CLI::App* s_exact = sub("exact", "Print f(n,m) as an exact polynomial");
  s_exact->add_option("--ensemble", exact.ensemble, "complex or real");
  s_exact->add_option("--b", exact.b, "Fourth moment as p/q (default Gaussian)");
  s_exact->add_option("--n", exact.n);
  s_exact->add_option("--m", exact.m);
  s_exact->add_option("--mu", exact.mu, "Optional evaluation point");
  s_exact->add_option("--nu", exact.nu);
  s_exact->add_option("--cross-check", exact.cross_check, "Compare against the n-direction recursion");
  s_exact->callback([&] { runner = [&] { return run_exact(exact, common); }; });

  GfCheckParams gf;
  CLI::App* s_gf = sub("gf-check", "Generating-function coefficients by closed form, recursion and table");
  s_gf->add_option("--ensemble", gf.ensemble);
  s_gf->add_option("--b", gf.b);
  s_gf->add_option("--alpha", gf.alpha);
  s_gf->add_option("--mmax", gf.mmax);
  s_gf->add_option("--mu", gf.mu, "Compare values at (mu, nu) instead of polynomials");
  s_gf->add_option("--nu", gf.nu);
  s_gf->add_option("--with-table", gf.with_table, "Also compare with f(m+alpha,m)/((m+alpha)! m!)");
  s_gf->callback([&] { runner = [&] { return run_gf_check(gf, common); }; });

  ContourParams contour;
  CLI::App* s_contour = sub("contour", "Contour integral against the exact recursion");
  s_contour->add_option("--ensemble", contour.ensemble);
  s_contour->add_option("--b", contour.b);
  s_contour->add_option("--n", contour.n);
  s_contour->add_option("--m", contour.m);
  s_contour->add_option("--mu", contour.mu);
  s_contour->add_option("--nu", contour.nu);
  s_contour->add_option("--radius", contour.radius);
  s_contour->add_option("--route", contour.route, "auto, series or bessel");
  s_contour->add_option("--tolerance", contour.tolerance, "Quadrature tolerance");
  s_contour->add_option("--max-rel-error", contour.max_rel_error, "Pass threshold against the exact value");
  s_contour->callback([&] { runner = [&] { return run_contour(contour, common); }; });

  McParams mc;
  CLI::App* s_mc = sub("mc", "Monte Carlo estimate against the exact recursion");
  s_mc->add_option("--ensemble", mc.ensemble);
  s_mc->add_option("--distribution", mc.distribution, "gaussian, rademacher or uniform");
  s_mc->add_option("--n", mc.n);
  s_mc->add_option("--m", mc.m);
  s_mc->add_option("--mu", mc.mu);
  s_mc->add_option("--nu", mc.nu);
  s_mc->add_option("--samples", mc.samples);
  s_mc->add_option("--seed", mc.seed);
  s_mc->add_option("--z-max", mc.z_max, "Pass threshold on |z-score|");
  s_mc->callback([&] { runner = [&] { return run_mc(mc, common); }; });

  BruteParams brute;
  CLI::App* s_brute = sub("brute", "Exact enumeration over Rademacher entries");
  s_brute->add_option("--ensemble", brute.ensemble);
  s_brute->add_option("--n", brute.n);
  s_brute->add_option("--m", brute.m);
  s_brute->add_option("--mu", brute.mu);
  s_brute->add_option("--nu", brute.nu);
  s_brute->callback([&] { runner = [&] { return run_brute(brute, common); }; });

  LimitsParams limits;
  CLI::App* s_limits = sub("limits", "Scaled second moment against its kernel limit");
  s_limits->add_option("--regime", limits.regime, "bulk, soft or hard");
  s_limits->add_option("--ensemble", limits.ensemble);
  s_limits->add_option("--b", limits.b);
  s_limits->add_option("--alpha", limits.alpha);
  s_limits->add_option("--xi", limits.xi);
  s_limits->add_option("--mu", limits.mu);
  s_limits->add_option("--nu", limits.nu);
  s_limits->add_option("--N", limits.Ns, "Comma-separated sizes")->delimiter(',');
  s_limits->add_option("--method", limits.method, "contour or recursion");
  s_limits->add_option("--tolerance", limits.tolerance);
  s_limits->add_option("--require-monotone", limits.require_monotone);
  s_limits->add_option("--max-final-rel-error", limits.max_final_rel_error, "Negative disables");
  s_limits->add_option("--min-ratio", limits.min_ratio, "Negative disables");
  s_limits->add_option("--max-ratio", limits.max_ratio, "Negative disables");
  s_limits->callback([&] { runner = [&] { return run_limits(limits, common); }; });

  KernelsParams kernels;
  CLI::App* s_kernels = sub("kernels", "Tabulate a kernel and check D on differentiated kernels");
  s_kernels->add_option("--kernel", kernels.kernel, "sine, airy, bessel, sine2, airy2 or bessel2");
  s_kernels->add_option("--alpha", kernels.alpha);
  s_kernels->add_option("--points", kernels.points, "Comma-separated grid")->delimiter(',');
  s_kernels->add_option("--check-d", kernels.check_d);
  s_kernels->add_option("--step", kernels.h, "Finite-difference step");
  s_kernels->add_option("--d-tolerance", kernels.d_tolerance);
  s_kernels->callback([&] { runner = [&] { return run_kernels(kernels, common); }; });

  IdentitiesParams identities;
  CLI::App* s_id = sub("identities", "Integral identities behind the edge and bulk limits");
  s_id->add_option("--which", identities.which, "all, bessel, laplace or airy");
  s_id->add_option("--bessel-tolerance", identities.bessel_tolerance);
  s_id->add_option("--laplace-tolerance", identities.laplace_tolerance);
  s_id->add_option("--airy-tolerance", identities.airy_tolerance);
  s_id->callback([&] { runner = [&] { return run_identities(identities, common); }; });

  std::vector<const char*> argv{"cplab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const CLI::App* selected = app.get_subcommands().front();
  const std::string name = selected->get_name();
  nlohmann::json config;
  const std::string config_txt = config_text(app, *selected, config);
  if (emit_config) {
    out << config_txt;
    return kExitPass;
  }

  CommandOutcome outcome;
  try {
    PrecisionGuard guard(common.precision);
    outcome = runner();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    outcome.failures.push_back({"exception", e.what()});
  }

  out << outcome.text;
  if (!common.output_dir.empty()) {
    try {
      persist(common, name, outcome, config, config_txt);
    } catch (const std::exception& e) {
      outcome.failures.push_back({"persist", e.what()});
    }
  }
  if (!outcome.passed()) {
    err << failure_json(name, outcome.failures).dump() << "\n";
    return kExitCheckFailed;
  }
  return kExitPass;
}

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return cli_dispatch(args, out, err);
}

}  // namespace cplab::harness
