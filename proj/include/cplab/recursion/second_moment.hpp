#pragma once

#include <stdexcept>
#include <vector>

#include "cplab/polycore/bigfloat.hpp"
#include "cplab/polycore/polynomial.hpp"
#include "cplab/recursion/ensemble_spec.hpp"

namespace cplab {

/// Which covariance-normalized recursion fills a MomentTable.
enum class RecursionDirection {
  M,  ///< recursion over m (row expansion in the m-dimension)
  N,  ///< recursion over n
};

/// f(n, m; mu, nu) = E det(X^*X - mu) det(X^*X - nu) for 0 <= n <= n_max,
/// 0 <= m <= m_max, with f(n, 0) = 1 and f(0, m) = (mu nu)^m.
class MomentTable {
 public:
  static MomentTable build(const EnsembleSpec& ensemble, int n_max, int m_max,
                           RecursionDirection direction = RecursionDirection::M);
  /// Wraps precomputed entries (e.g. loaded from a cache); `entries` is row-major in n.
  static MomentTable from_entries(const EnsembleSpec& ensemble, int n_max, int m_max,
                                  std::vector<BivariatePolynomial> entries);

  const EnsembleSpec& ensemble() const { return ensemble_; }
  int n_max() const { return n_max_; }
  int m_max() const { return m_max_; }
  const BivariatePolynomial& at(int n, int m) const;

  friend bool operator==(const MomentTable& a, const MomentTable& b) {
    return a.ensemble_ == b.ensemble_ && a.n_max_ == b.n_max_ && a.m_max_ == b.m_max_ && a.entries_ == b.entries_;
  }

 private:
  MomentTable(EnsembleSpec ensemble, int n_max, int m_max);
  BivariatePolynomial& cell(int n, int m);

  EnsembleSpec ensemble_;
  int n_max_;
  int m_max_;
  std::vector<BivariatePolynomial> entries_;
};

/// f(n, m) for n >= m by the m-direction recursion. Throws
/// std::invalid_argument for n < m; use second_moment() for that case.
BivariatePolynomial second_moment_exact(const EnsembleSpec& ensemble, int n, int m);
/// Same value by the n-direction recursion.
BivariatePolynomial second_moment_exact_alt(const EnsembleSpec& ensemble, int n, int m);
/// Any n, m >= 0; for n < m uses f(n, m) = (mu nu)^{m-n} f(m, n).
BivariatePolynomial second_moment(const EnsembleSpec& ensemble, int n, int m);

/// Thrown when a numeric recursion loses more accuracy than allowed.
class PrecisionUnderflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NumericMoment {
  BigFloat value;                ///< f(n, m) / (n! m!)
  double estimated_rel_error;    ///< from a rerun at higher precision
  mpfr_prec_t precision_bits;
};

/// f(n, m; mu, nu) / (n! m!) evaluated by the normalized m-direction recursion
/// at `precision` bits. The accuracy is estimated by repeating the computation
/// with 64 extra bits; if the estimate exceeds `max_rel_error` (default
/// 2^{-precision/2}) PrecisionUnderflow is thrown. Requires n >= m and
/// precision >= 64.
NumericMoment second_moment_numeric(const EnsembleSpec& ensemble, int n, int m, const BigFloat& mu,
                                    const BigFloat& nu, mpfr_prec_t precision, double max_rel_error = 0);

/// As above but raises the precision (doubling from `start_precision`) until
/// the estimated relative error is below `target_rel_error`.
NumericMoment second_moment_numeric_auto(const EnsembleSpec& ensemble, int n, int m, const BigFloat& mu,
                                         const BigFloat& nu, double target_rel_error,
                                         mpfr_prec_t start_precision = 256,
                                         mpfr_prec_t max_precision = 1 << 16);

}  // namespace cplab
