#pragma once

#include <vector>

#include "chahn/asymptotics.hpp"
#include "chahn/params.hpp"
#include "chahn/scaled_value.hpp"

namespace chahn::zeros {

using asymptotics::Side;

enum class Provenance { Estimate, Refined };

struct ZeroSet {
  int n = 0;
  std::vector<double> zeros;  // ascending
  std::vector<ScaledValue> residuals;
  std::vector<Provenance> provenance;
};

/// Airy estimate of the k-th zero counted from the right edge (Plus) or the
/// left edge (Minus); k = 1 is the outermost zero.
double edge_estimate(int n, int k, Side side, const Params& p);

/// All n zeros from the Jacobi matrix by Sturm bisection, Newton polished.
ZeroSet all_zeros(int n, const Params& p);

struct Refined {
  double zero = 0.0;
  /// E/m: bound on |value| (with rounding) over a lower bound on |slope|.
  double certificate = 0.0;
};

/// Newton from x0, falling back to bisection on a sign change within
/// +-0.5 of x0 when Newton does not settle down.
Refined refine_zero(int n, double x0, const Params& p);

/// Number of Jacobi eigenvalues strictly below x.
int sturm_count(int n, double x, const Params& p);

}  // namespace chahn::zeros
