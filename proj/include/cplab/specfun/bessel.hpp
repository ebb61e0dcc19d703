#pragma once

#include "cplab/polycore/bigfloat.hpp"
#include "cplab/polycore/complex.hpp"
#include "cplab/specfun/series_policy.hpp"

namespace cplab {

/// Modified Bessel function I_alpha(z) of integer order alpha >= 0 and
/// complex argument; entire in z. Power series below the crossover radius,
/// Hankel-type asymptotics above it.
Complex bessel_i(int alpha, const Complex& z, const SeriesPolicy& policy = {});
/// Power series sum_k (z/2)^{2k+alpha} / (k! (k+alpha)!), any |z|.
Complex bessel_i_series(int alpha, const Complex& z, const SeriesPolicy& policy = {});
/// Large-|z| expansion; requires Re z >= 0 and z != 0. Throws
/// SeriesNotConverged if the expansion cannot reach the target precision.
Complex bessel_i_asymptotic(int alpha, const Complex& z, const SeriesPolicy& policy = {});

/// Phi_alpha(q) = sum_k q^k / (k! (k+alpha)!) = (w/2)^{-alpha} I_alpha(w) with
/// w = 2 sqrt(q) (any branch). Single-valued and entire in q.
Complex bessel_phi(int alpha, const Complex& q, const SeriesPolicy& policy = {});
/// The defining series of Phi_alpha, without the Bessel-function route.
Complex bessel_phi_series(int alpha, const Complex& q, const SeriesPolicy& policy = {});

struct BesselJValue {
  BigFloat value;
  BigFloat derivative;
};

/// J_alpha(x) and J_alpha'(x) for integer alpha >= 0 and real x >= 0.
BesselJValue bessel_j(int alpha, const BigFloat& x, const SeriesPolicy& policy = {});
/// J_alpha(x) alone by its power series / by the Hankel expansion.
BigFloat bessel_j_series(int alpha, const BigFloat& x, const SeriesPolicy& policy = {});
BigFloat bessel_j_asymptotic(int alpha, const BigFloat& x, const SeriesPolicy& policy = {});

}  // namespace cplab
