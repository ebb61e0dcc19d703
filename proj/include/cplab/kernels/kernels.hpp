#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cplab/polycore/bigfloat.hpp"

namespace cplab {

/// Limit kernels: three for complex ensembles and their "differentiated"
/// counterparts for real ensembles.
enum class KernelKind { Sine, Airy, Bessel, SineDiff, AiryDiff, BesselDiff };

/// Spectral regime of the rescaling; each has one base kernel.
enum class Regime { Bulk, Soft, Hard };

std::string to_string(KernelKind kind);
std::string to_string(Regime regime);
/// Accepts "sine", "airy", "bessel", "sine2", "airy2", "bessel2" (any case).
KernelKind parse_kernel_kind(std::string_view text);
/// Accepts "bulk", "soft", "hard" (any case).
Regime parse_regime(std::string_view text);

bool is_differentiated(KernelKind kind);
KernelKind base_kernel(Regime regime);
KernelKind differentiated_kernel(Regime regime);
Regime regime_of(KernelKind kind);

struct KernelPoint {
  KernelKind kind = KernelKind::Sine;
  BigFloat x;
  BigFloat y;
  /// Only used by the Bessel kinds.
  int alpha = 0;
  /// Below this |x - y| the removable singularity is handled by a Taylor
  /// expansion around the midpoint.
  BigFloat near_diag_threshold = BigFloat("1e-4");
};

/// Marchenko-Pastur density g(xi) = sqrt(xi (4 - xi)) / (2 pi xi) on (0, 4).
BigFloat mp_density(const BigFloat& xi);

/// Kernel value; switches to kernel_near_diagonal() for |x - y| below the
/// point's threshold. Bessel kinds throw std::domain_error unless x, y > 0.
BigFloat kernel_eval(const KernelPoint& p);

/// Off-diagonal formula (x != y), evaluated with extra guard bits to absorb
/// the cancellation near the diagonal.
BigFloat kernel_direct(KernelKind kind, const BigFloat& x, const BigFloat& y, int alpha = 0);

/// Quadratic Taylor expansion in d = x - y around the midpoint; the
/// coefficients come from derivatives generated by the Airy/Bessel ODEs.
BigFloat kernel_near_diagonal(KernelKind kind, const BigFloat& x, const BigFloat& y, int alpha = 0);

/// Closed-form diagonal value K(x, x).
BigFloat kernel_diagonal(KernelKind kind, const BigFloat& x, int alpha = 0);

class StepTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Applies D to the regime's base kernel by central differences of step h:
/// D = (d/dy - d/dx)/(x - y) for Bulk and Soft, (y d/dy - x d/dx)/(x - y) for
/// Hard. The truncation error is estimated from a second run with step 2h;
/// StepTooLarge is thrown when it exceeds `tolerance`. Requires
/// 4h <= |x - y|.
BigFloat apply_D_numeric(Regime regime, const BigFloat& x, const BigFloat& y, const BigFloat& h, int alpha = 0,
                         double tolerance = 1e-7);

}  // namespace cplab
