#pragma once

#include <functional>
#include <stdexcept>

#include "cplab/polycore/bigfloat.hpp"
#include "cplab/polycore/complex.hpp"

namespace cplab {

class QuadratureNotConverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuadratureOptions {
  /// Relative agreement required between two successive resolutions.
  double tolerance = 1e-12;
  int initial_nodes = 256;
  int max_nodes = 1 << 20;
  /// Convergence is not tested below this many nodes.
  int min_nodes = 0;
  /// g(-t) = conj(g(t)); only the upper half of the nodes is evaluated.
  bool conjugate_symmetric = false;
  /// 0 = all cores.
  unsigned threads = 0;
};

struct QuadratureResult {
  Complex value;
  /// |S_{2M} - S_M| at the last doubling.
  BigFloat estimated_error;
  int nodes_used = 0;
};

/// (1/2pi) * integral of g(t) over t in (-pi, pi] by the equispaced
/// trapezoid rule, doubling the node count until successive resolutions agree.
/// Earlier nodes are reused at every doubling.
QuadratureResult periodic_trapezoid(const std::function<Complex(const BigFloat&)>& g,
                                    const QuadratureOptions& options = {});

struct LineQuadratureResult {
  Complex value;
  BigFloat estimated_error;
  /// The integral runs over [-half_width, half_width].
  BigFloat half_width;
  int nodes_used = 0;
};

/// Integral of g(u) over the real line. The range is truncated at the first
/// U = 2^k >= `initial_half_width` where |g| near +-U falls below
/// tolerance * 1e-3 times the largest sample seen; the truncated integral is
/// computed by the trapezoid rule with node doubling.
LineQuadratureResult line_trapezoid(const std::function<Complex(const BigFloat&)>& g,
                                    const QuadratureOptions& options = {}, double initial_half_width = 1.0,
                                    double max_half_width = 1e6);

}  // namespace cplab
