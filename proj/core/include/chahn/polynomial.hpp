#pragma once

#include <vector>

#include "chahn/params.hpp"
#include "chahn/scaled_value.hpp"

namespace chahn {

struct MonicValue {
  ScaledValue value;
  ScaledValue derivative;
};

/// pi_n(x) and pi_n'(x) by the forward three-term recurrence from
/// pi_{-1} = 0, pi_0 = 1, rescaled as it goes so no step overflows.
MonicValue monic_eval(int n, Complex x, const Params& p);

/// pi_0(x), ..., pi_{max_n}(x) in one pass.
std::vector<ScaledValue> monic_sequence(int max_n, Complex x, const Params& p);

struct OracleOptions {
  int max_degree = 40;
  /// Sum|term| / |Sum term| above this raises CancellationLoss.
  double max_condition = 1e18;
};

struct OracleResult {
  ScaledValue value;
  double condition = 1.0;
};

/// p_n(x) from the terminating 3F2 sum, accumulated in double-double.
OracleResult oracle_3f2(int n, Complex x, const Params& p, const OracleOptions& opts = {});

/// n! / (n+a+b+c+d-1)_n, the ratio pi_n / p_n.
ScaledValue monic_factor(int n, const Params& p);

/// The oracle converted to the monic normalization,
/// pi_n = n! / (n+a+b+c+d-1)_n * p_n.
OracleResult oracle_monic(int n, Complex x, const Params& p, const OracleOptions& opts = {});

/// Terminating sum 3F2(-n, b1, b2; d1, d2; 1) in double-double.
OracleResult terminating_3f2(int n, Complex b1, Complex b2, Complex d1, Complex d2,
                             double max_condition = 1e18);

/// w(x) = Gamma(a+ix) Gamma(b+ix) Gamma(c-ix) Gamma(d-ix).
ScaledValue weight(Complex x, const Params& p);
/// Principal log of the weight as a sum of log-gamma values.
Complex log_weight(Complex x, const Params& p);

/// h_n of the orthogonality relation for p_n.
ScaledValue norm_h(int n, const Params& p);
/// Norm of the monic polynomial, (n!/(n+2u-1)_n)^2 h_n.
ScaledValue monic_norm(int n, const Params& p);

/// K_n, the gamma-ratio normalization that turns pi_n / K_n into a
/// recurrence with bounded coefficients.
ScaledValue kn_scale(int n, const Params& p);

/// [w(x)]^{1/2} pi_n(x) / K_n evaluated exactly (up to rounding).
ScaledValue normalized_monic(int n, Complex x, const Params& p);

enum class Family { Bateman, Pasternack, Touchard };

struct SpecialFamily {
  Family family = Family::Bateman;
  Complex m = 0.0;  // Pasternack order
};

/// Bateman F_n(x), Pasternack F_n^m(x) or Touchard Q_n(x), all through the
/// continuous Hahn 3F2 with the matching parameters.
Complex special_family(const SpecialFamily& fam, int n, Complex x, const OracleOptions& opts = {});

}  // namespace chahn
