#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace flatdet {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

/// Value of a truncated series together with a certified bound on the
/// dropped tail.
struct SeriesValue {
  cplx value{};
  double tail_bound = 0.0;
};

/// Zeta-regularized determinant, log det* = -zeta'(0) with zero modes
/// excluded from the spectral zeta function.
struct ZetaDetResult {
  double log_det = 0.0;
  double zeta_at_0 = 0.0;
  std::string model;  // subtracted eigenvalue model, for diagnostics
  double error_estimate = 0.0;

  double value() const { return std::exp(log_det); }
};

/// Truncation control for lattice sums.  Summation stops once the
/// certified tail bound drops below tail_tolerance; the enumeration box
/// never exceeds max_lattice_radius.
struct TruncationPolicy {
  double max_lattice_radius = 80.0;
  double tail_tolerance = 1e-14;
};

}  // namespace flatdet
