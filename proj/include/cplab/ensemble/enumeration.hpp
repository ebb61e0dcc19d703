#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cplab/ensemble/determinant.hpp"
#include "cplab/polycore/polynomial.hpp"
#include "cplab/recursion/ensemble_spec.hpp"

namespace cplab {

class StateSpaceTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::uint64_t kMaxEnumerationStates = std::uint64_t{1} << 24;

/// Coefficients c_0..c_k of det(A - t I) = sum c_j t^j (Faddeev-LeVerrier,
/// exact).
std::vector<QComplex> characteristic_coefficients(const DenseMatrix<QComplex>& a);

/// E det(X^*X - mu) det(X^*X - nu) as an exact polynomial, averaged over all
/// sign patterns of Rademacher entries: X_ij = +-1 (real) or (+-1 +- i)/sqrt 2
/// (complex). Throws StateSpaceTooLarge beyond kMaxEnumerationStates.
BivariatePolynomial brute_force_polynomial(int n, int m, Variant variant);

Rational brute_force_expectation(int n, int m, Variant variant, const Rational& mu, const Rational& nu);

struct ChiralDeterminants {
  QComplex block;        // det [[lambda I_n, X], [X^*, lambda I_m]]
  QComplex via_gram;     // det(lambda^2 I_m - X^*X) lambda^(n-m)
  QComplex via_cogram;   // det(lambda^2 I_n - XX^*) lambda^(m-n)
};

/// The three determinants for an n x m matrix X; lambda must be nonzero.
ChiralDeterminants chiral_determinants(const Rational& lambda, const DenseMatrix<QComplex>& x);

/// True iff all three chiral determinants agree exactly.
bool chiral_identity_check(int n, int m, const Rational& lambda, const DenseMatrix<QComplex>& x);

}  // namespace cplab
