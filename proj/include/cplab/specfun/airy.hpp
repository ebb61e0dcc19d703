#pragma once

#include "cplab/polycore/bigfloat.hpp"
#include "cplab/specfun/series_policy.hpp"

namespace cplab {

struct AiryValue {
  BigFloat ai;
  BigFloat ai_prime;
};

/// Ai(x) and Ai'(x) for real x.
AiryValue airy(const BigFloat& x, const SeriesPolicy& policy = {});
/// Maclaurin series route (any x; cost grows with |x|^{3/2}).
AiryValue airy_series(const BigFloat& x, const SeriesPolicy& policy = {});
/// Asymptotic route for large |x|; throws SeriesNotConverged when |x| is too
/// small for the target precision.
AiryValue airy_asymptotic(const BigFloat& x, const SeriesPolicy& policy = {});

}  // namespace cplab
