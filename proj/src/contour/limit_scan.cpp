#include "cplab/contour/limit_scan.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include "cplab/polycore/parallel.hpp"
#include "cplab/recursion/second_moment.hpp"

namespace cplab {

void RegimeConfig::validate() const {
  if (alpha < 0) throw std::invalid_argument("limit scan: alpha must be >= 0");
  if (regime == Regime::Bulk && !(xi.sign() > 0 && xi < BigFloat(4))) {
    throw std::invalid_argument("limit scan: bulk needs 0 < xi < 4");
  }
  if (regime == Regime::Hard && (mu.sign() <= 0 || nu.sign() <= 0)) {
    throw std::invalid_argument("limit scan: hard edge needs mu, nu > 0");
  }
}

ScaledArguments scaled_arguments(const RegimeConfig& config, int N) {
  config.validate();
  if (N < config.alpha + 1) throw std::invalid_argument("limit scan: need N >= alpha + 1");
  const bool real = config.ensemble.is_real();
  const BigFloat n(N);
  ScaledArguments out;
  BigFloat prefactor;
  bool with_exp = true;
  switch (config.regime) {
    case Regime::Bulk: {
      BigFloat g = mp_density(config.xi);
      out.mu = n * config.xi + config.mu / g;
      out.nu = n * config.xi + config.nu / g;
      prefactor = real ? BigFloat(1) / (n * config.xi * g * g * g) : BigFloat(1) / g;
      out.radius = BigFloat(1) - BigFloat(1) / n;
      break;
    }
    case Regime::Soft: {
      BigFloat c = pow(BigFloat(2), BigFloat(4) / BigFloat(3));
      BigFloat n13 = cbrt(n);
      out.mu = BigFloat(4) * n + c * config.mu * n13;
      out.nu = BigFloat(4) * n + c * config.nu * n13;
      prefactor = real ? BigFloat(4) : c * n13;
      out.radius = BigFloat(1) - BigFloat(1) / n13;
      break;
    }
    case Regime::Hard: {
      out.mu = config.mu / (BigFloat(4) * n);
      out.nu = config.nu / (BigFloat(4) * n);
      prefactor = real ? BigFloat(1) / (BigFloat(16) * n * n) : BigFloat(1) / (BigFloat(4) * n);
      out.radius = BigFloat(1) - BigFloat(1) / n;
      with_exp = false;
      break;
    }
  }
  BigFloat product = out.mu * out.nu;
  if (config.alpha > 0 && product.sign() < 0) {
    throw std::invalid_argument("limit scan: shifted arguments have opposite signs at N = " + std::to_string(N));
  }
  BigFloat z = config.alpha > 0 ? pow(sqrt(product), static_cast<long>(config.alpha)) : BigFloat(1);
  if (with_exp) z *= exp(-(out.mu + out.nu) / BigFloat(2));
  out.normalization = prefactor * z;
  return out;
}

BigFloat predicted_limit(const RegimeConfig& config) {
  config.validate();
  KernelPoint p;
  p.kind = config.ensemble.is_real() ? differentiated_kernel(config.regime) : base_kernel(config.regime);
  p.x = config.mu;
  p.y = config.nu;
  p.alpha = config.alpha;
  return exp(BigFloat(config.ensemble.bstar())) * kernel_eval(p);
}

ScanRow scaled_value(const RegimeConfig& config, int N, unsigned threads) {
  PrecisionGuard guard(config.precision > 0 ? config.precision : working_precision());
  ScaledArguments args = scaled_arguments(config, N);
  ScanRow row;
  row.N = N;
  BigFloat moment;
  if (config.method == ScanMethod::Contour) {
    ContourSpec spec = ContourSpec::for_size(N, config.alpha, args.radius);
    spec.tolerance = config.tolerance;
    spec.threads = threads;
    ContourResult r = contour_integral(spec, args.mu, args.nu, config.ensemble);
    moment = r.value;
    row.nodes_used = r.nodes_used;
    row.precision_bits = r.precision_bits;
  } else {
    NumericMoment r = second_moment_numeric_auto(config.ensemble, N, N - config.alpha, args.mu, args.nu,
                                                 config.tolerance, working_precision());
    moment = r.value;
    row.precision_bits = r.precision_bits;
  }
  row.scaled_value = args.normalization * moment;
  row.predicted_limit = predicted_limit(config);
  row.abs_error = abs(row.scaled_value - row.predicted_limit);
  return row;
}

std::vector<ScanRow> limit_scan(const RegimeConfig& config, const std::vector<int>& Ns, unsigned threads) {
  std::vector<ScanRow> rows(Ns.size());
  if (threads == 0) threads = default_thread_count();
  if (threads > 1 && Ns.size() > 1) {
    parallel_for(Ns.size(), threads, [&](std::size_t i) { rows[i] = scaled_value(config, Ns[i], 1); });
  } else {
    for (std::size_t i = 0; i < Ns.size(); ++i) rows[i] = scaled_value(config, Ns[i], threads);
  }
  return rows;
}

void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
  os << "N,scaled_value,predicted_limit,abs_error,nodes_used,precision_bits\n";
  for (const auto& r : rows) {
    os << r.N << ',' << r.scaled_value.to_string(17) << ',' << r.predicted_limit.to_string(17) << ','
       << r.abs_error.to_string(6) << ',' << r.nodes_used << ',' << r.precision_bits << '\n';
  }
}

}  // namespace cplab
