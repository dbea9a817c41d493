#pragma once

#include "chahn/scaled_value.hpp"

namespace chahn {

enum class OrthogonalityClass {
  RealOrthogonal,  // c = conj(a), d = conj(b) or c = conj(b), d = conj(a)
  General,
};

/// Validated parameter quadruple (a, b, c, d) with
/// u = (a+b+c+d)/2 and v = (a+b-c-d)/(2i).
class Params {
 public:
  Complex a() const noexcept { return a_; }
  Complex b() const noexcept { return b_; }
  Complex c() const noexcept { return c_; }
  Complex d() const noexcept { return d_; }
  Complex u() const noexcept { return u_; }
  Complex v() const noexcept { return v_; }
  /// a + b + c + d.
  Complex sum() const noexcept { return 2.0 * u_; }
  OrthogonalityClass orthogonality() const noexcept { return class_; }
  bool real_orthogonal() const noexcept { return class_ == OrthogonalityClass::RealOrthogonal; }
  /// a = b = c = d real; then pi_n(-x) = (-1)^n pi_n(x).
  bool symmetric() const noexcept;

  friend Params make_params(Complex a, Complex b, Complex c, Complex d);

 private:
  Params() = default;

  Complex a_, b_, c_, d_, u_, v_;
  OrthogonalityClass class_ = OrthogonalityClass::General;
};

/// Throws NonPositiveRealPart or DegeneratePochhammer.
Params make_params(Complex a, Complex b, Complex c, Complex d);

/// u and v computed exactly the way make_params stores them.
Complex derived_u(Complex a, Complex b, Complex c, Complex d);
Complex derived_v(Complex a, Complex b, Complex c, Complex d);

struct RecurrenceCoeffs {
  Complex A;
  Complex C;
};

/// A_n, C_n of the 3F2-normalized recurrence; C_0 = 0.
RecurrenceCoeffs rec_coeffs(int n, const Params& p);

/// Diagonal i(A_n + C_n + a) of the monic recurrence.
Complex monic_diagonal(int n, const Params& p);
/// -A_{n-1} C_n for n >= 1 (zero for n = 0).
Complex monic_offdiagonal_sq(int n, const Params& p);

}  // namespace chahn
