#include "cplab/contour/quadrature.hpp"

#include <string>
#include <vector>

#include "cplab/polycore/parallel.hpp"

namespace cplab {
namespace {

std::vector<Complex> evaluate(const std::function<Complex(const BigFloat&)>& g, const std::vector<BigFloat>& points,
                              unsigned threads) {
  std::vector<Complex> values(points.size());
  parallel_for(points.size(), threads, [&](std::size_t i) { values[i] = g(points[i]); });
  return values;
}

void check_options(const QuadratureOptions& o) {
  if (o.initial_nodes < 4 || (o.initial_nodes & (o.initial_nodes - 1)) != 0) {
    throw std::invalid_argument("quadrature: initial_nodes must be a power of two >= 4");
  }
  if (!(o.tolerance > 0)) throw std::invalid_argument("quadrature: tolerance must be positive");
}

bool converged(const BigFloat& diff, const Complex& value, double tolerance) {
  return diff.is_zero() || diff <= BigFloat(tolerance) * abs(value);
}

}  // namespace

QuadratureResult periodic_trapezoid(const std::function<Complex(const BigFloat&)>& g,
                                    const QuadratureOptions& options) {
  check_options(options);
  const BigFloat two_pi = BigFloat(2) * pi();
  // Node k of an M-point grid sits at t = 2 pi k / M, folded into (-pi, pi].
  auto node = [&](long k, long m) {
    BigFloat t = two_pi * BigFloat(k) / BigFloat(m);
    if (2 * k > m) t -= two_pi;
    return t;
  };
  const bool sym = options.conjugate_symmetric;

  // Running sums over all nodes evaluated so far: `axis` holds t = 0 and
  // t = pi (weight 1), `inner` the remaining nodes (weight 2 when symmetric).
  Complex axis(BigFloat(0), BigFloat(0));
  Complex inner(BigFloat(0), BigFloat(0));
  auto level_value = [&](long m) {
    Complex s = sym ? axis + Complex(BigFloat(2) * inner.re) : axis + inner;
    return s / BigFloat(m);
  };

  long m = options.initial_nodes;
  {
    std::vector<BigFloat> pts;
    std::vector<int> kind;  // 0 axis, 1 inner
    for (long k = 0; k < m; ++k) {
      if (sym && 2 * k > m) continue;
      pts.push_back(node(k, m));
      kind.push_back(k == 0 || 2 * k == m ? 0 : 1);
    }
    auto vals = evaluate(g, pts, options.threads);
    for (std::size_t i = 0; i < vals.size(); ++i) (kind[i] == 0 ? axis : inner) += vals[i];
  }
  Complex previous = level_value(m);
  while (true) {
    if (2 * m > options.max_nodes) {
      throw QuadratureNotConverged("periodic trapezoid did not converge within " + std::to_string(options.max_nodes) +
                                   " nodes");
    }
    const long m2 = 2 * m;
    std::vector<BigFloat> pts;
    for (long k = 1; k < m2; k += 2) {
      if (sym && 2 * k > m2) continue;
      pts.push_back(node(k, m2));
    }
    auto vals = evaluate(g, pts, options.threads);
    for (const auto& v : vals) inner += v;
    m = m2;
    Complex current = level_value(m);
    BigFloat diff = abs(current - previous);
    if (m >= options.min_nodes && converged(diff, current, options.tolerance)) {
      return {current, diff, static_cast<int>(m)};
    }
    previous = current;
  }
}

LineQuadratureResult line_trapezoid(const std::function<Complex(const BigFloat&)>& g,
                                    const QuadratureOptions& options, double initial_half_width,
                                    double max_half_width) {
  check_options(options);
  const bool sym = options.conjugate_symmetric;

  // Truncation: grow U until the integrand near +-U is negligible against the
  // largest magnitude sampled inside.
  double u = initial_half_width;
  BigFloat ref(0);
  for (double s : {0.0, 0.25, 0.5, 0.75}) {
    ref = max(ref, abs(g(BigFloat(s * u))));
    if (!sym) ref = max(ref, abs(g(BigFloat(-s * u))));
  }
  while (true) {
    BigFloat edge(0);
    for (double s : {0.9, 0.95, 1.0}) {
      edge = max(edge, abs(g(BigFloat(s * u))));
      if (!sym) edge = max(edge, abs(g(BigFloat(-s * u))));
    }
    if (edge < BigFloat(options.tolerance * 1e-3) * ref) break;
    ref = max(ref, edge);
    u *= 2;
    if (u > max_half_width) {
      throw QuadratureNotConverged("line quadrature: integrand does not decay within |u| <= " +
                                   std::to_string(max_half_width));
    }
  }
  const BigFloat half(u);

  // Nodes u_k = -U + k h, h = 2U / M, k = 0..M; endpoint weights 1/2.
  Complex ends(BigFloat(0), BigFloat(0));
  Complex centre(BigFloat(0), BigFloat(0));
  Complex inner(BigFloat(0), BigFloat(0));
  auto point = [&](long k, long m) { return half * BigFloat(2 * k - m) / BigFloat(m); };
  auto add = [&](long k, long m, const Complex& v) {
    if (k == 0 || k == m) {
      ends += v;
    } else if (2 * k == m) {
      centre += v;
    } else {
      inner += v;
    }
  };
  auto level_value = [&](long m) {
    Complex s = sym ? Complex(ends.re) + centre + Complex(BigFloat(2) * inner.re)
                    : ends * (BigFloat(1) / BigFloat(2)) + centre + inner;
    return s * (BigFloat(2) * half / BigFloat(m));
  };
  auto wanted = [&](long k, long m) { return !sym || 2 * k >= m; };

  long m = options.initial_nodes;
  {
    std::vector<BigFloat> pts;
    std::vector<long> idx;
    for (long k = 0; k <= m; ++k) {
      if (!wanted(k, m)) continue;
      pts.push_back(point(k, m));
      idx.push_back(k);
    }
    auto vals = evaluate(g, pts, options.threads);
    for (std::size_t i = 0; i < vals.size(); ++i) add(idx[i], m, vals[i]);
  }
  Complex previous = level_value(m);
  while (true) {
    if (2 * m > options.max_nodes) {
      throw QuadratureNotConverged("line quadrature did not converge within " + std::to_string(options.max_nodes) +
                                   " nodes");
    }
    const long m2 = 2 * m;
    std::vector<BigFloat> pts;
    for (long k = 1; k < m2; k += 2) {
      if (!wanted(k, m2)) continue;
      pts.push_back(point(k, m2));
    }
    auto vals = evaluate(g, pts, options.threads);
    for (const auto& v : vals) inner += v;
    m = m2;
    Complex current = level_value(m);
    BigFloat diff = abs(current - previous);
    if (m >= options.min_nodes && converged(diff, current, options.tolerance)) {
      return {current, diff, half, static_cast<int>(m)};
    }
    previous = current;
  }
}

}  // namespace cplab
