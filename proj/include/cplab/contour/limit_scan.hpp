#pragma once

#include <iosfwd>
#include <vector>

#include "cplab/contour/contour.hpp"
#include "cplab/kernels/kernels.hpp"
#include "cplab/recursion/ensemble_spec.hpp"

namespace cplab {

enum class ScanMethod { Contour, Recursion };

/// One rescaling regime: Bulk zooms in around N xi with xi in (0, 4), Soft at
/// the edge 4N, Hard at the origin (mu, nu > 0).
struct RegimeConfig {
  Regime regime = Regime::Bulk;
  BigFloat xi = BigFloat(1);
  BigFloat mu;
  BigFloat nu;
  int alpha = 0;
  EnsembleSpec ensemble = EnsembleSpec::gaussian(Variant::Complex);
  ScanMethod method = ScanMethod::Contour;
  /// Relative accuracy requested from the contour integral / recursion.
  double tolerance = 1e-12;
  /// Working precision for each N; 0 = caller's.
  mpfr_prec_t precision = 0;

  /// Throws std::invalid_argument for xi outside (0, 4) in the bulk or
  /// non-positive mu, nu at the hard edge.
  void validate() const;
};

/// Shift arguments at size N and the factor multiplying f(n, m)/(n! m!) on
/// the left-hand side of the limit: prefactor * Z_N, where
/// Z_N = (mu_N nu_N)^{alpha/2} exp(-(mu_N + nu_N)/2) (no exponential at the
/// hard edge).
struct ScaledArguments {
  BigFloat mu;
  BigFloat nu;
  BigFloat normalization;
  /// Radius 1 - 1/N (bulk, hard) or 1 - N^{-1/3} (soft).
  BigFloat radius;
};

ScaledArguments scaled_arguments(const RegimeConfig& config, int N);

/// exp(b*) K(mu, nu), K the regime's kernel (differentiated for real ensembles).
BigFloat predicted_limit(const RegimeConfig& config);

struct ScanRow {
  int N = 0;
  BigFloat scaled_value;
  BigFloat predicted_limit;
  BigFloat abs_error;
  int nodes_used = 0;
  mpfr_prec_t precision_bits = 0;
};

/// Scaled left-hand side at a single N (n = N, m = N - alpha).
ScanRow scaled_value(const RegimeConfig& config, int N, unsigned threads = 0);

/// scaled_value for every N, computed in parallel over N.
std::vector<ScanRow> limit_scan(const RegimeConfig& config, const std::vector<int>& Ns, unsigned threads = 0);

/// CSV with header N,scaled_value,predicted_limit,abs_error,nodes_used,precision_bits.
void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows);

}  // namespace cplab
