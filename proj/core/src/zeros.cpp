#include "chahn/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "chahn/error.hpp"
#include "chahn/polynomial.hpp"
#include "chahn/specfun.hpp"

namespace chahn::zeros {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_real(const Params& p, const char* where) {
  if (!p.real_orthogonal()) {
    throw Error(ErrorCode::WrongClass, std::string(where) + ": needs real-orthogonal parameters");
  }
}

struct Jacobi {
  std::vector<double> diag;
  std::vector<double> off_sq;  // off_sq[k] couples k-1 and k, off_sq[0] unused
};

Jacobi jacobi(int n, const Params& p) {
  Jacobi j;
  j.diag.resize(n);
  j.off_sq.assign(n, 0.0);
  for (int k = 0; k < n; ++k) {
    j.diag[k] = monic_diagonal(k, p).real();
    if (k > 0) {
      const double e = monic_offdiagonal_sq(k, p).real();
      if (!(e > 0.0)) {
        throw Error(ErrorCode::NonPositiveOffdiagonal,
                    "all_zeros: off-diagonal square not positive at k = " + std::to_string(k));
      }
      j.off_sq[k] = e;
    }
  }
  return j;
}

int count_below(const Jacobi& j, double x) {
  int count = 0;
  double d = 1.0;
  const double tiny = std::numeric_limits<double>::min() / kEps;
  for (std::size_t k = 0; k < j.diag.size(); ++k) {
    d = (j.diag[k] - x) - (k > 0 ? j.off_sq[k] / d : 0.0);
    if (d == 0.0) d = -tiny;
    if (d < 0.0) ++count;
  }
  return count;
}

// pi_n(x) / pi_n'(x) with the shared scaling cancelled.
double newton_step(int n, double x, const Params& p, ScaledValue* value = nullptr) {
  const MonicValue mv = monic_eval(n, x, p);
  if (value) *value = mv.value;
  if (mv.value.is_zero()) return 0.0;
  if (mv.derivative.is_zero()) return std::numeric_limits<double>::infinity();
  return (mv.value / mv.derivative).real();
}

double sign_of(const ScaledValue& v) { return v.is_zero() ? 0.0 : (v.mantissa().real() < 0.0 ? -1.0 : 1.0); }

// First-order bound on the rounding error of the forward recurrence. Each
// step k commits a local error of at most gamma (|x - d_k||pi_k| +
// beta_k^2 |pi_{k-1}|); its effect on pi_n is the (1,1) entry of the
// product of the remaining transfer matrices, which a backward sweep gives
// for every k at once.
ScaledValue rounding_bound(int n, double x, const Params& p) {
  std::vector<double> dk(n), ek(n);
  for (int k = 0; k < n; ++k) {
    dk[k] = x - monic_diagonal(k, p).real();
    ek[k] = k > 0 ? monic_offdiagonal_sq(k, p).real() : 0.0;
  }
  std::vector<ScaledValue> pi(n + 1);
  pi[0] = 1.0;
  if (n >= 1) pi[1] = dk[0];
  for (int k = 1; k < n; ++k) pi[k + 1] = pi[k] * dk[k] - pi[k - 1] * ek[k];

  // r1, r2: first row of M_{n-1} ... M_{k+1}, M_k = [[d_k, -e_k], [1, 0]].
  ScaledValue r1 = 1.0, r2 = 0.0;
  ScaledValue total;
  for (int k = n - 1; k >= 0; --k) {
    ScaledValue local = ScaledValue(pi[k].abs()) * std::abs(dk[k]);
    if (k > 0) local += ScaledValue(pi[k - 1].abs()) * ek[k];
    total += ScaledValue(r1.abs()) * local;
    const ScaledValue next1 = r1 * dk[k] + r2;
    const ScaledValue next2 = -(r1 * ek[k]);
    r1 = next1;
    r2 = next2;
  }
  return total * (16.0 * kEps);
}

}  // namespace

double edge_estimate(int n, int k, Side side, const Params& p) {
  require_real(p, "edge_estimate");
  if (n < 1) throw Error(ErrorCode::DomainError, "edge_estimate: n must be positive");
  if (k < 1 || k > 10) throw Error(ErrorCode::DomainError, "edge_estimate: k must be in 1..10");
  const double shift = asymptotics::turning_shift(n, side, p).real();
  const double x = shift / 2.0 + std::cbrt(shift) * specfun::airy_zero(k) / std::cbrt(16.0);
  return side == Side::Plus ? x : -x;
}

int sturm_count(int n, double x, const Params& p) { return count_below(jacobi(n, p), x); }

ZeroSet all_zeros(int n, const Params& p) {
  require_real(p, "all_zeros");
  if (n < 0) throw Error(ErrorCode::DomainError, "all_zeros: negative degree");
  ZeroSet set;
  set.n = n;
  if (n == 0) return set;
  const Jacobi j = jacobi(n, p);

  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (int k = 0; k < n; ++k) {
    double r = 0.0;
    if (k > 0) r += std::sqrt(j.off_sq[k]);
    if (k + 1 < n) r += std::sqrt(j.off_sq[k + 1]);
    lo = std::min(lo, j.diag[k] - r);
    hi = std::max(hi, j.diag[k] + r);
  }
  lo -= 1.0;
  hi += 1.0;

  for (int idx = 0; idx < n; ++idx) {
    // The idx-th eigenvalue is where the count steps from idx to idx+1.
    double a = lo, b = hi;
    for (int it = 0; it < 300 && b - a > 2.0 * kEps * std::max({std::abs(a), std::abs(b), 1e-300}); ++it) {
      const double m = 0.5 * (a + b);
      if (m <= a || m >= b) break;
      if (count_below(j, m) > idx) b = m;
      else a = m;
    }
    double x = 0.5 * (a + b);
    // Newton polish, kept inside the bisection bracket widened a little.
    const double slack = 64.0 * kEps * (1.0 + std::abs(x));
    const double left = a - slack, right = b + slack;
    ScaledValue value;
    int it = 0;
    for (;; ++it) {
      if (it >= 50) throw Error(ErrorCode::NoConvergence, "all_zeros: Newton polish did not converge");
      const double step = newton_step(n, x, p, &value);
      if (!std::isfinite(step)) break;
      const double next = x - step;
      if (next < left || next > right) break;
      const bool done = std::abs(step) < 1e-15 * (1.0 + std::abs(x));
      x = next;
      if (done) break;
    }
    value = monic_eval(n, x, p).value;
    set.zeros.push_back(x);
    set.residuals.push_back(ScaledValue(value.abs()));
    set.provenance.push_back(Provenance::Refined);
  }
  std::sort(set.zeros.begin(), set.zeros.end());
  return set;
}

namespace {

double hethcote_certificate(int n, double z, const Params& p) {
  const MonicValue mv = monic_eval(n, z, p);
  const ScaledValue e = ScaledValue(mv.value.abs()) + rounding_bound(n, z, p);
  const ScaledValue slope(mv.derivative.abs());
  if (slope.is_zero()) return std::numeric_limits<double>::infinity();
  double radius = (e / slope).real();
  // |pi_n'| must stay above m on the whole interval |x - z| <= E/m; sample
  // both ends of a doubled interval and take the smallest slope.
  const double probe = std::max(2.0 * radius, 8.0 * kEps * (1.0 + std::abs(z)));
  ScaledValue m = slope;
  for (double s : {-probe, probe}) {
    const ScaledValue d(monic_eval(n, z + s, p).derivative.abs());
    if (d.log_abs() < m.log_abs()) m = d;
  }
  if (m.is_zero()) return std::numeric_limits<double>::infinity();
  radius = (e / m).real();
  return radius;
}

double bisect_bracket(int n, double a, double b, const Params& p) {
  double fa = sign_of(monic_eval(n, a, p).value);
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    // A Newton step from the midpoint when it stays inside the bracket.
    const double step = newton_step(n, m, p);
    double x = m;
    if (std::isfinite(step) && m - step > a && m - step < b) x = m - step;
    const double fx = sign_of(monic_eval(n, x, p).value);
    if (fx == 0.0) return x;
    if (fx == fa) {
      a = x;
    } else {
      b = x;
    }
    if (x != m) {
      // Tighten the other side with the midpoint too so the bracket shrinks.
      const double fm = sign_of(monic_eval(n, m, p).value);
      if (fm == 0.0) return m;
      if (fm == fa) a = std::max(a, m);
      else b = std::min(b, m);
    }
    if (b - a < 1e-15 * (1.0 + std::abs(a))) break;
  }
  return 0.5 * (a + b);
}

}  // namespace

Refined refine_zero(int n, double x0, const Params& p) {
  require_real(p, "refine_zero");
  if (n < 1) throw Error(ErrorCode::DomainError, "refine_zero: n must be positive");
  double x = x0;
  ScaledValue value;
  bool converged = false;
  double last_log = std::numeric_limits<double>::infinity();
  bool monotone = true;
  for (int it = 0; it < 60; ++it) {
    const double step = newton_step(n, x, p, &value);
    if (value.is_zero()) {
      converged = true;
      break;
    }
    if (!std::isfinite(step)) break;
    if (it < 3) {
      if (value.log_abs() >= last_log) monotone = false;
      last_log = value.log_abs();
      if (!monotone) break;
    }
    x -= step;
    if (std::abs(step) < 1e-12 * (1.0 + std::abs(x))) {
      converged = true;
      break;
    }
  }
  if (converged && monotone && p.real_orthogonal()) {
    // Newton may jump over zeros; keep the result only if it is the first
    // zero met walking from x0 towards it.
    const Jacobi j = jacobi(n, p);
    const double delta = 1e-9 * (1.0 + std::abs(x));
    const int between = x >= x0 ? count_below(j, x + delta) - count_below(j, x0)
                                : count_below(j, x0) - count_below(j, x - delta);
    if (between > 1) converged = false;
  }
  if (!converged || !monotone) {
    // Bracket the sign change nearest to x0 inside [x0 - 0.5, x0 + 0.5].
    constexpr int kSteps = 256;
    const double h = 1.0 / kSteps;
    bool found = false;
    double best_a = 0.0, best_b = 0.0, best_dist = std::numeric_limits<double>::infinity();
    double prev_x = x0 - 0.5;
    double prev_s = sign_of(monic_eval(n, prev_x, p).value);
    for (int i = 1; i <= kSteps; ++i) {
      const double cx = x0 - 0.5 + i * h;
      const double cs = sign_of(monic_eval(n, cx, p).value);
      if (prev_s == 0.0 || cs == 0.0 || cs != prev_s) {
        const double dist = std::min(std::abs(prev_x - x0), std::abs(cx - x0));
        if (dist < best_dist) {
          best_dist = dist;
          best_a = prev_x;
          best_b = cx;
          found = true;
        }
      }
      prev_x = cx;
      prev_s = cs;
    }
    if (!found) throw Error(ErrorCode::NoSignChange, "refine_zero: no sign change within 0.5 of x0");
    if (sign_of(monic_eval(n, best_a, p).value) == 0.0) x = best_a;
    else if (sign_of(monic_eval(n, best_b, p).value) == 0.0) x = best_b;
    else x = bisect_bracket(n, best_a, best_b, p);
  }
  return {x, hethcote_certificate(n, x, p)};
}

}  // namespace chahn::zeros
