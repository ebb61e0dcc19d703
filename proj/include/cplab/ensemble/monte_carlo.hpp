#pragma once

#include <complex>
#include <cstdint>
#include <optional>

#include <json.hpp>

#include "cplab/ensemble/determinant.hpp"
#include "cplab/ensemble/distribution.hpp"
#include "cplab/polycore/bigfloat.hpp"

namespace cplab {

struct SampleConfig {
  int n = 1;
  int m = 1;
  Variant variant = Variant::Complex;
  DistributionKind distribution = DistributionKind::Gaussian;
  long sample_count = 1000;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  /// Share of samples (worst pivot ratio first) whose determinants are redone
  /// in high precision.
  double recompute_fraction = 0.01;
  mpfr_prec_t recompute_precision = 128;

  /// Throws std::invalid_argument unless n >= m >= 1, sample_count >= 1 and
  /// recompute_fraction is in [0, 1].
  void validate() const;
  EntryDistribution entry() const { return {distribution, variant}; }
};

/// The n x m matrix of draw `index`; a pure function of (cfg.seed, index).
DenseMatrix<std::complex<double>> sample_matrix(const SampleConfig& cfg, std::uint64_t index);

/// det(X^*X - mu) det(X^*X - nu) for one matrix, in double precision.
double sample_statistic(const DenseMatrix<std::complex<double>>& x, double mu, double nu,
                        double* pivot_ratio = nullptr);

struct McResult {
  BigFloat mean;
  BigFloat std_error;
  long samples = 0;
  long recomputed = 0;
  /// Largest relative change caused by the high-precision recomputation.
  double max_recompute_change = 0;
};

/// Sample mean and standard error of det(X^*X - mu) det(X^*X - nu). Samples
/// are computed in parallel and reduced in index order at the working
/// precision, so the result does not depend on the thread count.
McResult mc_second_moment(const SampleConfig& cfg, const BigFloat& mu, const BigFloat& nu);

/// {config, mean, stderr, exact_value?, z_score?}.
nlohmann::json mc_report(const SampleConfig& cfg, const BigFloat& mu, const BigFloat& nu, const McResult& result,
                         const std::optional<BigFloat>& exact = std::nullopt);

}  // namespace cplab
