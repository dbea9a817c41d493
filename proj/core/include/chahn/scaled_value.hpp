#pragma once

#include <complex>
#include <cstdint>

namespace chahn {

using Complex = std::complex<double>;

/// Complex number held as mantissa * 2^exp2 with 1 <= |mantissa| < 2, or the
/// canonical zero (0, 0). Values such as (n/4e)^n or e^{pi n t} stay finite
/// well past the point where a plain double overflows.
class ScaledValue {
 public:
  ScaledValue() = default;
  // NOLINTNEXTLINE(google-explicit-constructor)
  ScaledValue(Complex value);
  // NOLINTNEXTLINE(google-explicit-constructor)
  ScaledValue(double value) : ScaledValue(Complex(value, 0.0)) {}

  /// Normalizes an arbitrary (mantissa, exponent) pair.
  static ScaledValue from_parts(Complex mantissa, std::int64_t exp2);
  /// exp(log_value), without forming the exponential in double.
  static ScaledValue from_log(Complex log_value);

  Complex mantissa() const noexcept { return mantissa_; }
  std::int64_t exp2() const noexcept { return exp2_; }
  bool is_zero() const noexcept { return mantissa_ == Complex{}; }

  /// Plain complex value; overflows to inf or underflows to 0 outside the
  /// double range.
  Complex to_complex() const noexcept;
  double real() const noexcept { return to_complex().real(); }

  /// ln|value|; -inf for zero.
  double log_abs() const noexcept;
  /// Principal complex logarithm.
  Complex log() const;
  /// |value| as a ScaledValue.
  ScaledValue abs() const;
  ScaledValue conj() const noexcept;

  ScaledValue operator-() const noexcept;
  ScaledValue& operator+=(const ScaledValue& rhs);
  ScaledValue& operator-=(const ScaledValue& rhs);
  ScaledValue& operator*=(const ScaledValue& rhs);
  ScaledValue& operator/=(const ScaledValue& rhs);

  friend ScaledValue operator+(ScaledValue lhs, const ScaledValue& rhs) { return lhs += rhs; }
  friend ScaledValue operator-(ScaledValue lhs, const ScaledValue& rhs) { return lhs -= rhs; }
  friend ScaledValue operator*(ScaledValue lhs, const ScaledValue& rhs) { return lhs *= rhs; }
  friend ScaledValue operator/(ScaledValue lhs, const ScaledValue& rhs) { return lhs /= rhs; }

  friend bool operator==(const ScaledValue& a, const ScaledValue& b) noexcept {
    return a.mantissa_ == b.mantissa_ && a.exp2_ == b.exp2_;
  }

 private:
  void normalize();

  Complex mantissa_{};
  std::int64_t exp2_ = 0;
};

/// |exact - approx| / |exact|, evaluated without leaving the scaled
/// representation. Returns +inf when exact is zero and approx is not.
double relative_difference(const ScaledValue& exact, const ScaledValue& approx);

/// |value| as a double, clamped to the representable range.
double magnitude(const ScaledValue& value);

}  // namespace chahn
