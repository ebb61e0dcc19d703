#pragma once

#include "cplab/polycore/bigfloat.hpp"
#include "cplab/polycore/polynomial.hpp"
#include "cplab/polycore/rational.hpp"

namespace cplab {

/// Generalized Laguerre polynomial L_n^{(alpha)} as an exact polynomial,
/// sum_k binom(n + alpha, n - k) (-x)^k / k!. Requires n >= 0 and
/// n + alpha >= 0 (alpha may be negative).
Polynomial laguerre_polynomial(int n, int alpha);

Rational laguerre(int n, int alpha, const Rational& x);
BigFloat laguerre(int n, int alpha, const BigFloat& x);

}  // namespace cplab
