#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cplab/polycore/bigfloat.hpp"
#include "cplab/recursion/ensemble_spec.hpp"

namespace cplab::harness {

/// Options shared by all subcommands.
struct CommonParams {
  mpfr_prec_t precision = kDefaultPrecisionBits;
  unsigned threads = 0;
  std::string output_dir;
  std::string cache_dir;
};

struct Failure {
  std::string check;
  std::string detail;
};

/// What a subcommand produced. `text` goes to stdout; `csv` (if any) is also
/// persisted as <subcommand>.csv.
struct CommandOutcome {
  std::string text;
  nlohmann::json report = nlohmann::json::object();
  std::string csv;
  std::vector<Failure> failures;

  bool passed() const { return failures.empty(); }
};

/// Ensemble from a variant name and an optional "p/q" fourth moment (empty
/// means the Gaussian value).
EnsembleSpec make_ensemble(const std::string& variant, const std::string& b);

struct ExactParams {
  std::string ensemble = "complex";
  std::string b;
  int n = 1;
  int m = 1;
  std::string mu;
  std::string nu;
  bool cross_check = true;
};

struct GfCheckParams {
  std::string ensemble = "complex";
  std::string b;
  int alpha = 0;
  int mmax = 10;
  std::string mu;
  std::string nu;
  bool with_table = true;
};

struct ContourParams {
  std::string ensemble = "complex";
  std::string b;
  int n = 2;
  int m = 2;
  std::string mu = "1";
  std::string nu = "2";
  std::string radius = "0.5";
  std::string route = "auto";
  double tolerance = 1e-12;
  double max_rel_error = 1e-10;
};

struct McParams {
  std::string ensemble = "complex";
  std::string distribution = "gaussian";
  int n = 2;
  int m = 2;
  std::string mu = "1";
  std::string nu = "2";
  long samples = 100000;
  std::uint64_t seed = 1;
  double z_max = 4;
};

struct BruteParams {
  std::string ensemble = "real";
  int n = 2;
  int m = 2;
  std::string mu;
  std::string nu;
};

struct LimitsParams {
  std::string regime = "bulk";
  std::string ensemble = "complex";
  std::string b;
  int alpha = 0;
  std::string xi = "1";
  std::string mu = "0.5";
  std::string nu = "0.5";
  std::vector<int> Ns{50, 100, 200, 400};
  std::string method = "contour";
  double tolerance = 1e-12;
  bool require_monotone = true;
  /// Checks that are off when negative: final |error| / |limit|, and the
  /// range of per-step error ratios.
  double max_final_rel_error = -1;
  double min_ratio = -1;
  double max_ratio = -1;
};

struct KernelsParams {
  std::string kernel = "sine";
  int alpha = 0;
  std::vector<std::string> points{"0.5", "1", "1.5", "2"};
  bool check_d = true;
  std::string h = "1e-4";
  double d_tolerance = 1e-6;
};

struct IdentitiesParams {
  std::string which = "all";
  double bessel_tolerance = 1e-10;
  double laplace_tolerance = 1e-8;
  double airy_tolerance = 1e-8;
};

CommandOutcome run_exact(const ExactParams& p, const CommonParams& common);
CommandOutcome run_gf_check(const GfCheckParams& p, const CommonParams& common);
CommandOutcome run_contour(const ContourParams& p, const CommonParams& common);
CommandOutcome run_mc(const McParams& p, const CommonParams& common);
CommandOutcome run_brute(const BruteParams& p, const CommonParams& common);
CommandOutcome run_limits(const LimitsParams& p, const CommonParams& common);
CommandOutcome run_kernels(const KernelsParams& p, const CommonParams& common);
CommandOutcome run_identities(const IdentitiesParams& p, const CommonParams& common);

}  // namespace cplab::harness
