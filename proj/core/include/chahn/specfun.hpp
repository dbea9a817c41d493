#pragma once

#include <complex>

#include "chahn/scaled_value.hpp"

/// Special-function kernel: complex log-gamma, real Airy functions and the
/// zeros of Ai. Everything here is pure and reentrant.
namespace chahn::specfun {

/// Principal branch of log Gamma(z). Throws PoleAtNonpositiveInteger within
/// 1e-14 of z = 0, -1, -2, ...
Complex log_gamma(Complex z);

/// Gamma(z) as a ScaledValue (exp of log_gamma).
ScaledValue gamma_scaled(Complex z);

struct AiryQuad {
  double ai = 0.0;
  double ai_prime = 0.0;
  double bi = 0.0;
  double bi_prime = 0.0;
};

/// Ai, Ai', Bi, Bi' at real x. Throws RangeOverflow once Bi or Bi' leave the
/// double range (x above ~104).
AiryQuad airy(double x);

/// Ai(x) in scaled form; usable for arguments where Ai underflows.
ScaledValue airy_ai_scaled(double x);

/// k-th (negative) zero of Ai, descending: airy_zero(1) = -2.338...
/// Valid for 1 <= k <= 10^4.
double airy_zero(int k);

}  // namespace chahn::specfun
