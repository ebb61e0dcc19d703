#include "cplab/ensemble/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cplab/polycore/parallel.hpp"

namespace cplab {

void SampleConfig::validate() const {
  if (m < 1 || n < m) throw std::invalid_argument("SampleConfig: need n >= m >= 1");
  if (sample_count < 1) throw std::invalid_argument("SampleConfig: sample_count must be positive");
  if (!(recompute_fraction >= 0 && recompute_fraction <= 1)) {
    throw std::invalid_argument("SampleConfig: recompute_fraction must lie in [0, 1]");
  }
}

DenseMatrix<std::complex<double>> sample_matrix(const SampleConfig& cfg, std::uint64_t index) {
  cfg.validate();
  CounterRng rng(cfg.seed, index);
  EntryDistribution dist = cfg.entry();
  DenseMatrix<std::complex<double>> x(cfg.n, cfg.m);
  for (int i = 0; i < cfg.n; ++i)
    for (int j = 0; j < cfg.m; ++j) x(i, j) = dist.draw(rng);
  return x;
}

namespace {

template <class T, class S>
DenseMatrix<T> shifted(DenseMatrix<T> g, const S& s) {
  for (int i = 0; i < g.rows(); ++i) g(i, i) = g(i, i) - s;
  return g;
}

double high_precision_statistic(const DenseMatrix<std::complex<double>>& x, const BigFloat& mu,
                                const BigFloat& nu) {
  auto xc = x.map<Complex>([](const std::complex<double>& v) { return Complex(BigFloat(v.real()), BigFloat(v.imag())); });
  DenseMatrix<Complex> g = gram(xc);
  Complex a = determinant_pivoted(shifted(g, Complex(mu)));
  Complex b = determinant_pivoted(shifted(g, Complex(nu)));
  return (a * b).re.to_double();
}

}  // namespace

double sample_statistic(const DenseMatrix<std::complex<double>>& x, double mu, double nu, double* pivot_ratio) {
  DenseMatrix<std::complex<double>> g = gram(x);
  double ra = 0;
  double rb = 0;
  std::complex<double> a = determinant_pivoted(shifted(g, std::complex<double>(mu)), &ra);
  std::complex<double> b = determinant_pivoted(shifted(g, std::complex<double>(nu)), &rb);
  if (pivot_ratio) *pivot_ratio = std::min(ra, rb);
  return (a * b).real();
}

McResult mc_second_moment(const SampleConfig& cfg, const BigFloat& mu, const BigFloat& nu) {
  cfg.validate();
  const std::size_t count = static_cast<std::size_t>(cfg.sample_count);
  std::vector<double> values(count);
  std::vector<double> ratios(count);
  const double mu_d = mu.to_double();
  const double nu_d = nu.to_double();

  const std::size_t chunk = 1024;
  const std::size_t chunks = (count + chunk - 1) / chunk;
  parallel_for(chunks, cfg.threads, [&](std::size_t c) {
    const std::size_t end = std::min(count, (c + 1) * chunk);
    for (std::size_t i = c * chunk; i < end; ++i) {
      values[i] = sample_statistic(sample_matrix(cfg, i), mu_d, nu_d, &ratios[i]);
    }
  });

  McResult result;
  result.samples = cfg.sample_count;

  auto redo = static_cast<std::size_t>(std::ceil(cfg.recompute_fraction * static_cast<double>(count)));
  redo = std::min(redo, count);
  if (redo > 0) {
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(redo), order.end(),
                      [&](std::size_t a, std::size_t b) {
                        return ratios[a] != ratios[b] ? ratios[a] < ratios[b] : a < b;
                      });
    std::vector<double> change(redo, 0.0);
    parallel_for(redo, cfg.threads, [&](std::size_t k) {
      PrecisionGuard guard(cfg.recompute_precision);
      const std::size_t i = order[k];
      double v = high_precision_statistic(sample_matrix(cfg, i), mu, nu);
      double scale = std::max(std::abs(v), std::abs(values[i]));
      change[k] = scale > 0 ? std::abs(v - values[i]) / scale : 0.0;
      values[i] = v;
    });
    result.recomputed = static_cast<long>(redo);
    result.max_recompute_change = *std::max_element(change.begin(), change.end());
  }

  BigFloat sum(0);
  for (double v : values) sum += BigFloat(v);
  result.mean = sum / BigFloat(static_cast<long>(count));
  if (count > 1) {
    BigFloat ss(0);
    for (double v : values) {
      BigFloat d = BigFloat(v) - result.mean;
      ss += d * d;
    }
    result.std_error = sqrt(ss / BigFloat(static_cast<long>(count - 1)) / BigFloat(static_cast<long>(count)));
  } else {
    result.std_error = BigFloat(0);
  }
  return result;
}

nlohmann::json mc_report(const SampleConfig& cfg, const BigFloat& mu, const BigFloat& nu, const McResult& result,
                         const std::optional<BigFloat>& exact) {
  nlohmann::json config = {
      {"n", cfg.n},
      {"m", cfg.m},
      {"variant", to_string(cfg.variant)},
      {"distribution", to_string(cfg.distribution)},
      {"b", cfg.entry().b().get_str()},
      {"sample_count", cfg.sample_count},
      {"seed", cfg.seed},
      {"mu", mu.to_string(30)},
      {"nu", nu.to_string(30)},
      {"recompute_fraction", cfg.recompute_fraction},
      {"recompute_precision", cfg.recompute_precision},
  };
  nlohmann::json j = {
      {"config", config},
      {"mean", result.mean.to_double()},
      {"stderr", result.std_error.to_double()},
      {"recomputed", result.recomputed},
      {"max_recompute_change", result.max_recompute_change},
  };
  if (exact) {
    j["exact_value"] = exact->to_double();
    if (!result.std_error.is_zero()) {
      j["z_score"] = ((result.mean - *exact) / result.std_error).to_double();
    } else {
      j["z_score"] = result.mean == *exact ? nlohmann::json(0.0) : nlohmann::json(nullptr);
    }
  }
  return j;
}

}  // namespace cplab
