#pragma once

#include <array>
#include <vector>

#include "cplab/polycore/polynomial.hpp"
#include "cplab/recursion/ensemble_spec.hpp"

namespace cplab {

/// Deletion pattern applied to the two chiral determinants. `None` is the
/// plain product; the others delete matching rows/columns as in the
/// row/column expansion of the block determinants.
enum class ChiralTag { None, T01, T10, T11A, T11B, T11C };

/// Expectations f(n, m, left, right) of products of two chiral block
/// determinants with deletions, in the chiral variables (the diagonal
/// blocks are mu I and nu I). At most one of the two tags is non-None.
///
/// Entries are filled in order of increasing n + m by the coupled system over
/// both directions. The plain entry f(n, m) is computed from the m-direction
/// equation and checked against the n-direction equation; a disagreement
/// throws std::logic_error. The 11_B family is populated only for the real
/// ensemble (it vanishes identically in the complex one).
class ChiralAuxTable {
 public:
  static ChiralAuxTable build(const EnsembleSpec& ensemble, int n_max, int m_max);

  const EnsembleSpec& ensemble() const { return ensemble_; }
  int n_max() const { return n_max_; }
  int m_max() const { return m_max_; }

  /// Negative arguments yield the zero polynomial.
  const BivariatePolynomial& get(int n, int m, ChiralTag left = ChiralTag::None,
                                 ChiralTag right = ChiralTag::None) const;

  /// Plain chiral entry converted to the covariance normalization:
  /// divide by (mu nu)^{n-m}, then substitute mu^2 -> mu, nu^2 -> nu.
  BivariatePolynomial covariance_moment(int n, int m) const;

 private:
  ChiralAuxTable(EnsembleSpec ensemble, int n_max, int m_max);

  // Slot 0 is the plain entry, 1..5 the left tags, 6..10 the right tags.
  static constexpr int kSlots = 11;
  static int slot(ChiralTag left, ChiralTag right);
  BivariatePolynomial& at(int slot, int n, int m);

  EnsembleSpec ensemble_;
  int n_max_;
  int m_max_;
  std::vector<std::array<BivariatePolynomial, kSlots>> cells_;
};

/// Converts a chiral-normalized polynomial for dimensions (n, m) into the
/// covariance normalization. Throws std::logic_error if a term does not fit.
BivariatePolynomial chiral_to_covariance(const BivariatePolynomial& chiral, int n, int m);

}  // namespace cplab
