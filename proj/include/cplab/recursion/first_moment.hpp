#pragma once

#include "cplab/polycore/polynomial.hpp"
#include "cplab/polycore/rational.hpp"

namespace cplab {

/// E det([[lambda I_n, X], [X^*, lambda I_m]]) as a polynomial in lambda, by
/// the recursion over m: F(n,m) = lambda F(n,m-1) - n F(n-1,m-1), F(n,0) = lambda^n.
Polynomial first_moment_recursive(int n, int m);

/// Same quantity by the recursion over n: F(n,m) = lambda F(n-1,m) - m F(n-1,m-1),
/// F(0,m) = lambda^m.
Polynomial first_moment_recursive_n(int n, int m);

/// E det(x I_m - X^* X) for n >= m as a polynomial in x, obtained from the
/// chiral first moment by dividing out lambda^{n-m} and substituting lambda^2 = x.
Polynomial first_moment_covariance(int n, int m);

/// (-1)^m m! L_m^{(n-m)}(lambda). Throws std::invalid_argument for n < m.
Rational first_moment_laguerre(int n, int m, const Rational& lambda);

}  // namespace cplab
