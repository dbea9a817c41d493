#include "chahn/polynomial.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "chahn/double_double.hpp"
#include "chahn/error.hpp"
#include "chahn/specfun.hpp"

namespace chahn {

namespace {

using specfun::log_gamma;

constexpr double kRescaleAbove = 0x1p500;
constexpr double kRescaleBelow = 0x1p-500;

double max_abs(std::initializer_list<Complex> values) {
  double m = 0.0;
  for (const Complex z : values) m = std::max({m, std::abs(z.real()), std::abs(z.imag())});
  return m;
}

Complex scale(Complex z, int e) { return {std::ldexp(z.real(), e), std::ldexp(z.imag(), e)}; }

void check_degree(int n, const char* where) {
  if (n < 0) throw Error(ErrorCode::DomainError, std::string(where) + ": negative degree");
}

bool near_pole(Complex z) {
  const double nearest = std::round(z.real());
  return nearest <= 0.0 && std::abs(z - Complex(nearest, 0.0)) <= 1e-12;
}

}  // namespace

MonicValue monic_eval(int n, Complex x, const Params& p) {
  check_degree(n, "monic_eval");
  // All four running values share one binary exponent.
  Complex prev = 0.0, cur = 1.0, dprev = 0.0, dcur = 0.0;
  std::int64_t exponent = 0;
  for (int k = 0; k < n; ++k) {
    const Complex lin = x - monic_diagonal(k, p);
    const Complex e = -monic_offdiagonal_sq(k, p);  // A_{k-1} C_k
    const Complex next = lin * cur + e * prev;
    const Complex dnext = cur + lin * dcur + e * dprev;
    prev = cur;
    cur = next;
    dprev = dcur;
    dcur = dnext;
    const double m = max_abs({prev, cur, dprev, dcur});
    if (m > kRescaleAbove || (m > 0.0 && m < kRescaleBelow)) {
      int shift = 0;
      std::frexp(m, &shift);
      prev = scale(prev, -shift);
      cur = scale(cur, -shift);
      dprev = scale(dprev, -shift);
      dcur = scale(dcur, -shift);
      exponent += shift;
    }
  }
  return {ScaledValue::from_parts(cur, exponent), ScaledValue::from_parts(dcur, exponent)};
}

std::vector<ScaledValue> monic_sequence(int max_n, Complex x, const Params& p) {
  check_degree(max_n, "monic_sequence");
  std::vector<ScaledValue> out;
  out.reserve(static_cast<std::size_t>(max_n) + 1);
  ScaledValue prev, cur(1.0);
  out.push_back(cur);
  for (int k = 0; k < max_n; ++k) {
    const ScaledValue next = cur * ScaledValue(x - monic_diagonal(k, p)) -
                             prev * ScaledValue(monic_offdiagonal_sq(k, p));
    prev = cur;
    cur = next;
    out.push_back(cur);
  }
  return out;
}

OracleResult terminating_3f2(int n, Complex b1, Complex b2, Complex d1, Complex d2, double max_condition) {
  check_degree(n, "terminating_3f2");
  for (int j = 0; j < n; ++j) {
    const double jj = j;
    if (d1 + jj == Complex{} || d2 + jj == Complex{}) {
      throw Error(ErrorCode::DegeneratePochhammer, "terminating_3f2: vanishing denominator Pochhammer");
    }
  }
  // term_k = (-n)_k (b1)_k (b2)_k / ((d1)_k (d2)_k k!), as a running product.
  dd::Complex term(Complex(1.0, 0.0));
  dd::Complex sum = term;
  double abs_sum = 1.0;
  int exponent = 0;  // shared by term, sum and abs_sum
  for (int k = 0; k < n; ++k) {
    const double kk = k;
    const dd::Complex num = dd::Complex(Complex(kk - n, 0.0)) * (dd::Complex(b1) + dd::Complex(Complex(kk, 0.0))) *
                            (dd::Complex(b2) + dd::Complex(Complex(kk, 0.0)));
    const dd::Complex den = (dd::Complex(d1) + dd::Complex(Complex(kk, 0.0))) *
                            (dd::Complex(d2) + dd::Complex(Complex(kk, 0.0))) *
                            dd::Complex(Complex(kk + 1.0, 0.0));
    term = term * num / den;
    sum += term;
    abs_sum += dd::abs(term);
    if (abs_sum > 0x1p600) {
      term = dd::ldexp(term, -600);
      sum = dd::ldexp(sum, -600);
      abs_sum = std::ldexp(abs_sum, -600);
      exponent += 600;
    }
  }
  const double total = dd::abs(sum);
  const double condition = total > 0.0 ? abs_sum / total : std::numeric_limits<double>::infinity();
  if (condition > max_condition) {
    throw Error(ErrorCode::CancellationLoss,
                "terminating_3f2: condition estimate " + std::to_string(condition) + " exceeds bound");
  }
  return {ScaledValue::from_parts(sum.to_complex(), exponent), condition};
}

OracleResult oracle_3f2(int n, Complex x, const Params& p, const OracleOptions& opts) {
  check_degree(n, "oracle_3f2");
  if (n > opts.max_degree) {
    throw Error(ErrorCode::OracleBoundExceeded,
                "oracle_3f2: degree " + std::to_string(n) + " above bound " + std::to_string(opts.max_degree));
  }
  const Complex i{0.0, 1.0};
  const Complex ac = p.a() + p.c(), ad = p.a() + p.d();
  OracleResult r = terminating_3f2(n, static_cast<double>(n) + p.sum() - 1.0, p.a() + i * x, ac, ad,
                                   opts.max_condition);
  // i^n (a+c)_n (a+d)_n / n!
  ScaledValue pre(1.0);
  for (int k = 0; k < n; ++k) {
    const double kk = k;
    pre *= ScaledValue(i * (ac + kk) * (ad + kk) / (kk + 1.0));
  }
  r.value *= pre;
  return r;
}

ScaledValue monic_factor(int n, const Params& p) {
  check_degree(n, "monic_factor");
  ScaledValue factor(1.0);
  for (int k = 0; k < n; ++k) {
    const double kk = k;
    factor *= ScaledValue((kk + 1.0) / (static_cast<double>(n) + p.sum() - 1.0 + kk));
  }
  return factor;
}

OracleResult oracle_monic(int n, Complex x, const Params& p, const OracleOptions& opts) {
  OracleResult r = oracle_3f2(n, x, p, opts);
  r.value *= monic_factor(n, p);
  return r;
}

Complex log_weight(Complex x, const Params& p) {
  const Complex ix = Complex(0.0, 1.0) * x;
  const std::array<Complex, 4> args = {p.a() + ix, p.b() + ix, p.c() - ix, p.d() - ix};
  for (const Complex z : args) {
    if (near_pole(z)) throw Error(ErrorCode::PoleHit, "weight: gamma argument at a pole");
  }
  // Pair each factor with its conjugate partner so the imaginary parts cancel
  // exactly for real x in the orthogonal class.
  if (p.c() == std::conj(p.b()) && p.d() == std::conj(p.a())) {
    return (log_gamma(args[0]) + log_gamma(args[3])) + (log_gamma(args[1]) + log_gamma(args[2]));
  }
  return (log_gamma(args[0]) + log_gamma(args[2])) + (log_gamma(args[1]) + log_gamma(args[3]));
}

ScaledValue weight(Complex x, const Params& p) {
  Complex lw = log_weight(x, p);
  if (p.real_orthogonal() && x.imag() == 0.0) lw.imag(0.0);
  return ScaledValue::from_log(lw);
}

namespace {

Complex log_norm_h(int n, const Params& p) {
  const double k = n;
  const Complex s = p.sum();
  const Complex a = p.a(), b = p.b(), c = p.c(), d = p.d();
  const Complex num = (log_gamma(k + a + c) + log_gamma(k + b + d)) + (log_gamma(k + a + d) + log_gamma(k + b + c));
  // (2n+s-1) Gamma(n+s-1) collapses to Gamma(s) at n = 0.
  const Complex den = n == 0 ? log_gamma(s) : std::log(2.0 * k + s - 1.0) + log_gamma(k + s - 1.0);
  return num - den - log_gamma(k + 1.0);
}

ScaledValue from_log_real_if(Complex l, bool real) {
  if (real) l.imag(0.0);
  return ScaledValue::from_log(l);
}

}  // namespace

ScaledValue norm_h(int n, const Params& p) {
  check_degree(n, "norm_h");
  return from_log_real_if(log_norm_h(n, p), p.real_orthogonal());
}

ScaledValue monic_norm(int n, const Params& p) {
  check_degree(n, "monic_norm");
  const double k = n;
  const Complex s = p.sum();
  // log (n+s-1)_n = log Gamma(2n+s-1) - log Gamma(n+s-1)
  const Complex log_poch = n == 0 ? Complex{} : log_gamma(2.0 * k + s - 1.0) - log_gamma(k + s - 1.0);
  const Complex l = 2.0 * (log_gamma(k + 1.0) - log_poch) + log_norm_h(n, p);
  return from_log_real_if(l, p.real_orthogonal());
}

ScaledValue kn_scale(int n, const Params& p) {
  check_degree(n, "kn_scale");
  const double k = n;
  const Complex u = p.u();
  const Complex a = p.a(), b = p.b(), c = p.c(), d = p.d();
  // Gamma((n+2u-1)/2) / Gamma((n+u-1/2)/2); at n = 0 both may sit on a pole
  // (u = 1/2), so use Gamma(u+1/2) / (2 Gamma((u+3/2)/2)) instead.
  const Complex ratio = n == 0 ? log_gamma(u + 0.5) - std::log(2.0) - log_gamma((u + 1.5) * 0.5)
                               : log_gamma((k + 2.0 * u - 1.0) * 0.5) - log_gamma((k + u - 0.5) * 0.5);
  const Complex top = log_gamma((k + 1.0) * 0.5) + (log_gamma((k + a + c) * 0.5) + log_gamma((k + b + d) * 0.5)) +
                      (log_gamma((k + a + d) * 0.5) + log_gamma((k + b + c) * 0.5));
  const Complex bottom = k * std::numbers::ln2 + 2.0 * log_gamma((k + u) * 0.5) + log_gamma((k + u + 0.5) * 0.5);
  return from_log_real_if(top + ratio - bottom, p.real_orthogonal());
}

ScaledValue normalized_monic(int n, Complex x, const Params& p) {
  Complex lw = log_weight(x, p);
  if (p.real_orthogonal() && x.imag() == 0.0) lw.imag(0.0);
  return ScaledValue::from_log(0.5 * lw) * monic_eval(n, x, p).value / kn_scale(n, p);
}

Complex special_family(const SpecialFamily& fam, int n, Complex x, const OracleOptions& opts) {
  check_degree(n, "special_family");
  if (n > opts.max_degree) {
    throw Error(ErrorCode::OracleBoundExceeded, "special_family: degree above oracle bound");
  }
  const double k = n;
  switch (fam.family) {
    case Family::Bateman:
      return terminating_3f2(n, k + 1.0, (1.0 + x) * 0.5, 1.0, 1.0, opts.max_condition).value.to_complex();
    case Family::Pasternack: {
      const Complex m1 = fam.m + 1.0;
      if (m1.imag() == 0.0 && m1.real() <= 0.0 && std::round(m1.real()) == m1.real()) {
        throw Error(ErrorCode::DegeneratePochhammer, "special_family: m+1 is a nonpositive integer");
      }
      // Continuous Hahn with (a,b,c,d) = ((1+m)/2, (1-m)/2, (1-m)/2, (1+m)/2)
      // at argument -ix/2: a + c = 1, a + d = 1 + m, a + i(-ix/2) = (1+m+x)/2.
      return terminating_3f2(n, k + 1.0, (m1 + x) * 0.5, 1.0, m1, opts.max_condition).value.to_complex();
    }
    case Family::Touchard: {
      // (-1)^n 2^n n! / binom(2n, n) = prod_k (-2) k^2 / (n + k)
      double coef = 1.0;
      for (int j = 1; j <= n; ++j) coef *= -2.0 * j * j / (k + j);
      const Complex f = terminating_3f2(n, k + 1.0, (2.0 * x + 2.0) * 0.5, 1.0, 1.0, opts.max_condition)
                            .value.to_complex();
      return coef * f;
    }
  }
  return 0.0;
}

}  // namespace chahn
