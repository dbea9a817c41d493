#pragma once

// Minimal double-double arithmetic (about 32 significant digits), enough for
// the compensated hypergeometric sums and power series in this library.

#include <algorithm>
#include <cmath>
#include <complex>

namespace chahn::dd {

struct Real {
  double hi = 0.0;
  double lo = 0.0;

  constexpr Real() = default;
  // NOLINTNEXTLINE(google-explicit-constructor)
  constexpr Real(double x) : hi(x), lo(0.0) {}
  constexpr Real(double h, double l) : hi(h), lo(l) {}

  double to_double() const { return hi + lo; }
};

inline Real quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline Real two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline Real two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline Real operator+(const Real& a, const Real& b) {
  Real s = two_sum(a.hi, b.hi);
  const Real t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline Real operator-(const Real& a) { return {-a.hi, -a.lo}; }
inline Real operator-(const Real& a, const Real& b) { return a + (-b); }

inline Real operator*(const Real& a, const Real& b) {
  Real p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline Real operator/(const Real& a, const Real& b) {
  const double q1 = a.hi / b.hi;
  Real r = a - b * Real(q1);
  const double q2 = r.hi / b.hi;
  r = r - b * Real(q2);
  const double q3 = r.hi / b.hi;
  return quick_two_sum(q1, q2) + Real(q3);
}

inline Real& operator+=(Real& a, const Real& b) { return a = a + b; }
inline Real& operator*=(Real& a, const Real& b) { return a = a * b; }

inline Real ldexp(const Real& a, int e) { return {std::ldexp(a.hi, e), std::ldexp(a.lo, e)}; }
inline double abs(const Real& a) { return std::abs(a.to_double()); }

struct Complex {
  Real re;
  Real im;

  constexpr Complex() = default;
  constexpr Complex(Real r, Real i) : re(r), im(i) {}
  // NOLINTNEXTLINE(google-explicit-constructor)
  Complex(std::complex<double> z) : re(z.real()), im(z.imag()) {}

  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

inline Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
inline Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
inline Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex operator/(const Complex& a, const Complex& b) {
  // Scale by the larger component of b to avoid overflow in the norm.
  const double s = std::max(std::abs(b.re.hi), std::abs(b.im.hi));
  int e = 0;
  std::frexp(s, &e);
  const Complex bs{ldexp(b.re, -e), ldexp(b.im, -e)};
  const Real den = bs.re * bs.re + bs.im * bs.im;
  const Complex num = a * Complex{bs.re, -bs.im};
  return {ldexp(num.re / den, -e), ldexp(num.im / den, -e)};
}
inline Complex& operator+=(Complex& a, const Complex& b) { return a = a + b; }
inline Complex& operator*=(Complex& a, const Complex& b) { return a = a * b; }

inline Complex ldexp(const Complex& a, int e) { return {ldexp(a.re, e), ldexp(a.im, e)}; }
inline double abs(const Complex& a) { return std::abs(a.to_complex()); }

}  // namespace chahn::dd
