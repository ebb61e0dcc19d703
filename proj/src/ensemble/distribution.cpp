#include "cplab/ensemble/distribution.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cplab {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(mix64(seed) ^ (stream * 0xd1b54a32d192ed03ULL + 0x632be59bd9b4e019ULL))) {}

std::uint64_t CounterRng::next() { return mix64(key_ + 0x9e3779b97f4a7c15ULL * counter_++); }

double CounterRng::uniform() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

std::pair<double, double> CounterRng::normal_pair() {
  double r = std::sqrt(-2.0 * std::log(uniform()));
  double t = 2.0 * std::numbers::pi * uniform();
  return {r * std::cos(t), r * std::sin(t)};
}

std::string to_string(DistributionKind k) {
  switch (k) {
    case DistributionKind::Gaussian: return "gaussian";
    case DistributionKind::Rademacher: return "rademacher";
    case DistributionKind::Uniform: return "uniform";
  }
  return "?";
}

DistributionKind parse_distribution(std::string_view text) {
  std::string s;
  for (char c : text) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "gaussian") return DistributionKind::Gaussian;
  if (s == "rademacher") return DistributionKind::Rademacher;
  if (s == "uniform") return DistributionKind::Uniform;
  throw std::invalid_argument("unknown distribution '" + std::string(text) + "'");
}

// Fourth moment of a part with variance v: Gaussian 3v^2, Rademacher v^2,
// uniform 9v^2/5.
Rational EntryDistribution::b() const {
  Rational v2 = variant_ == Variant::Complex ? Rational(1, 4) : Rational(1);
  switch (kind_) {
    case DistributionKind::Gaussian: return 3 * v2;
    case DistributionKind::Rademacher: return v2;
    case DistributionKind::Uniform: return Rational(9, 5) * v2;
  }
  throw std::logic_error("bad distribution kind");
}

double EntryDistribution::draw_part(CounterRng& rng, double scale) const {
  switch (kind_) {
    case DistributionKind::Gaussian: return scale * rng.normal_pair().first;
    case DistributionKind::Rademacher: return (rng.next() >> 63) ? scale : -scale;
    case DistributionKind::Uniform: return scale * std::sqrt(3.0) * (2.0 * rng.uniform() - 1.0);
  }
  throw std::logic_error("bad distribution kind");
}

std::complex<double> EntryDistribution::draw(CounterRng& rng) const {
  if (variant_ == Variant::Real) return {draw_part(rng, 1.0), 0.0};
  const double s = std::sqrt(0.5);
  if (kind_ == DistributionKind::Gaussian) {
    auto [a, c] = rng.normal_pair();
    return {s * a, s * c};
  }
  double re = draw_part(rng, s);
  return {re, draw_part(rng, s)};
}

}  // namespace cplab
