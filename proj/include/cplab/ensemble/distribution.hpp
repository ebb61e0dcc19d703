#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include "cplab/polycore/rational.hpp"
#include "cplab/recursion/ensemble_spec.hpp"

namespace cplab {

/// Counter-based generator: the k-th output of stream s under seed is a pure
/// function of (seed, s, k), so every sample index owns an independent stream.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next();
  /// Uniform on (0, 1), 53 random bits, never 0.
  double uniform();
  /// Two independent standard normals (Box-Muller).
  std::pair<double, double> normal_pair();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

enum class DistributionKind { Gaussian, Rademacher, Uniform };

std::string to_string(DistributionKind k);
DistributionKind parse_distribution(std::string_view text);

/// Entry law of X. Complex entries have independent real and imaginary parts
/// of variance 1/2 each; real entries have variance 1. b is the fourth moment
/// of a part (complex) or of the entry (real).
class EntryDistribution {
 public:
  EntryDistribution(DistributionKind kind, Variant variant) : kind_(kind), variant_(variant) {}

  DistributionKind kind() const { return kind_; }
  Variant variant() const { return variant_; }
  Rational b() const;
  EnsembleSpec ensemble() const { return {variant_, b()}; }
  /// Variance of one part: 1/2 complex, 1 real.
  double part_variance() const { return variant_ == Variant::Complex ? 0.5 : 1.0; }

  /// One entry; the imaginary part is zero for the real variant.
  std::complex<double> draw(CounterRng& rng) const;

 private:
  double draw_part(CounterRng& rng, double scale) const;

  DistributionKind kind_;
  Variant variant_;
};

}  // namespace cplab
