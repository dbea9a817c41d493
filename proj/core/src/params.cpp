#include "chahn/params.hpp"

#include <cmath>
#include <string>

#include "chahn/error.hpp"

namespace chahn {

namespace {

bool is_zero_or_negative_integer(Complex z) {
  if (z.imag() != 0.0) return false;
  return z.real() <= 0.0 && std::round(z.real()) == z.real();
}

}  // namespace

// Grouping (a+b) against (c+d) keeps u, v exactly real in the orthogonal
// class: c+d is then the exact conjugate of a+b.
Complex derived_u(Complex a, Complex b, Complex c, Complex d) { return ((a + b) + (c + d)) * 0.5; }

Complex derived_v(Complex a, Complex b, Complex c, Complex d) {
  const Complex w = (a + b) - (c + d);
  return {w.imag() * 0.5, -w.real() * 0.5};
}

bool Params::symmetric() const noexcept {
  return a_.imag() == 0.0 && a_ == b_ && a_ == c_ && a_ == d_;
}

Params make_params(Complex a, Complex b, Complex c, Complex d) {
  for (const Complex z : {a, b, c, d}) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorCode::DomainError, "make_params: non-finite parameter");
    }
    if (z.real() <= 0.0) {
      throw Error(ErrorCode::NonPositiveRealPart,
                  "make_params: parameter with real part " + std::to_string(z.real()));
    }
  }
  for (const Complex z : {a + c, a + d, b + c, b + d}) {
    if (is_zero_or_negative_integer(z)) {
      throw Error(ErrorCode::DegeneratePochhammer, "make_params: a+c, a+d, b+c or b+d is 0 or a negative integer");
    }
  }
  Params p;
  p.a_ = a;
  p.b_ = b;
  p.c_ = c;
  p.d_ = d;
  p.u_ = derived_u(a, b, c, d);
  p.v_ = derived_v(a, b, c, d);
  const bool paired = (c == std::conj(a) && d == std::conj(b)) || (c == std::conj(b) && d == std::conj(a));
  p.class_ = paired ? OrthogonalityClass::RealOrthogonal : OrthogonalityClass::General;
  return p;
}

RecurrenceCoeffs rec_coeffs(int n, const Params& p) {
  if (n < 0) throw Error(ErrorCode::DomainError, "rec_coeffs: negative degree");
  const Complex s = p.sum();
  const auto k = static_cast<double>(n);
  const Complex a = p.a(), b = p.b(), c = p.c(), d = p.d();
  if (n == 0) {
    // (s-1)/(s-1) cancels; keeping it would divide by zero at s = 1.
    return {-(a + c) * (a + d) / s, 0.0};
  }
  const Complex A = -(k + s - 1.0) * (k + a + c) * (k + a + d) / ((2.0 * k + s - 1.0) * (2.0 * k + s));
  const Complex C = k * (k + b + c - 1.0) * (k + b + d - 1.0) / ((2.0 * k + s - 2.0) * (2.0 * k + s - 1.0));
  return {A, C};
}

Complex monic_diagonal(int n, const Params& p) {
  const RecurrenceCoeffs rc = rec_coeffs(n, p);
  const Complex d = Complex(0.0, 1.0) * (rc.A + rc.C + p.a());
  // Real by construction in the orthogonal class; drop the rounding residue.
  return p.real_orthogonal() ? Complex(d.real(), 0.0) : d;
}

Complex monic_offdiagonal_sq(int n, const Params& p) {
  if (n <= 0) return 0.0;
  const Complex e = -rec_coeffs(n - 1, p).A * rec_coeffs(n, p).C;
  return p.real_orthogonal() ? Complex(e.real(), 0.0) : e;
}

}  // namespace chahn
