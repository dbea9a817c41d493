#include "chahn/scaled_value.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "chahn/error.hpp"

namespace chahn {

namespace {

constexpr std::int64_t kNegligibleShift = 1100;

Complex ldexp_complex(Complex z, std::int64_t e) {
  // std::ldexp takes int; clamp, the result saturates anyway.
  const auto clamped = static_cast<int>(std::clamp<std::int64_t>(e, -4000, 4000));
  return {std::ldexp(z.real(), clamped), std::ldexp(z.imag(), clamped)};
}

}  // namespace

ScaledValue::ScaledValue(Complex value) : mantissa_(value) { normalize(); }

ScaledValue ScaledValue::from_parts(Complex mantissa, std::int64_t exp2) {
  ScaledValue out;
  out.mantissa_ = mantissa;
  out.exp2_ = exp2;
  out.normalize();
  return out;
}

ScaledValue ScaledValue::from_log(Complex log_value) {
  const double re = log_value.real();
  if (std::isnan(re) || std::isnan(log_value.imag())) {
    throw Error(ErrorCode::DomainError, "ScaledValue::from_log: NaN argument");
  }
  if (re == -std::numeric_limits<double>::infinity()) return {};
  if (!std::isfinite(re) || !std::isfinite(log_value.imag())) {
    throw Error(ErrorCode::RangeOverflow, "ScaledValue::from_log: infinite argument");
  }
  const double k = std::floor(re / std::numbers::ln2);
  const double r = re - k * std::numbers::ln2;
  return from_parts(std::exp(r) * Complex(std::cos(log_value.imag()), std::sin(log_value.imag())),
                    static_cast<std::int64_t>(k));
}

void ScaledValue::normalize() {
  if (std::isnan(mantissa_.real()) || std::isnan(mantissa_.imag())) {
    throw Error(ErrorCode::DomainError, "ScaledValue: NaN component");
  }
  if (!std::isfinite(mantissa_.real()) || !std::isfinite(mantissa_.imag())) {
    throw Error(ErrorCode::RangeOverflow, "ScaledValue: infinite component");
  }
  if (mantissa_ == Complex{}) {
    mantissa_ = {};
    exp2_ = 0;
    return;
  }
  // Bring the larger component near 1 first so hypot cannot over/underflow.
  int e = 0;
  std::frexp(std::max(std::abs(mantissa_.real()), std::abs(mantissa_.imag())), &e);
  mantissa_ = ldexp_complex(mantissa_, -e);
  exp2_ += e;
  std::frexp(std::abs(mantissa_), &e);
  mantissa_ = ldexp_complex(mantissa_, 1 - e);
  exp2_ += e - 1;
  // hypot rounding can land exactly on a boundary.
  while (std::abs(mantissa_) >= 2.0) {
    mantissa_ *= 0.5;
    ++exp2_;
  }
  while (std::abs(mantissa_) < 1.0) {
    mantissa_ *= 2.0;
    --exp2_;
  }
}

Complex ScaledValue::to_complex() const noexcept { return ldexp_complex(mantissa_, exp2_); }

double ScaledValue::log_abs() const noexcept {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  return std::log(std::abs(mantissa_)) + static_cast<double>(exp2_) * std::numbers::ln2;
}

Complex ScaledValue::log() const {
  if (is_zero()) throw Error(ErrorCode::DomainError, "ScaledValue::log of zero");
  return {log_abs(), std::arg(mantissa_)};
}

ScaledValue ScaledValue::abs() const { return from_parts(std::abs(mantissa_), exp2_); }

ScaledValue ScaledValue::conj() const noexcept {
  ScaledValue out = *this;
  out.mantissa_ = std::conj(mantissa_);
  return out;
}

ScaledValue ScaledValue::operator-() const noexcept {
  ScaledValue out = *this;
  out.mantissa_ = -mantissa_;
  return out;
}

ScaledValue& ScaledValue::operator+=(const ScaledValue& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const std::int64_t shift = rhs.exp2_ - exp2_;
  if (shift > kNegligibleShift) return *this = rhs;
  if (shift < -kNegligibleShift) return *this;
  if (shift >= 0) {
    mantissa_ = ldexp_complex(mantissa_, -shift) + rhs.mantissa_;
    exp2_ = rhs.exp2_;
  } else {
    mantissa_ += ldexp_complex(rhs.mantissa_, shift);
  }
  normalize();
  return *this;
}

ScaledValue& ScaledValue::operator-=(const ScaledValue& rhs) { return *this += -rhs; }

ScaledValue& ScaledValue::operator*=(const ScaledValue& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = ScaledValue{};
  mantissa_ *= rhs.mantissa_;
  exp2_ += rhs.exp2_;
  normalize();
  return *this;
}

ScaledValue& ScaledValue::operator/=(const ScaledValue& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DomainError, "ScaledValue: division by zero");
  if (is_zero()) return *this;
  mantissa_ /= rhs.mantissa_;
  exp2_ -= rhs.exp2_;
  normalize();
  return *this;
}

double relative_difference(const ScaledValue& exact, const ScaledValue& approx) {
  const ScaledValue diff = exact - approx;
  if (diff.is_zero()) return 0.0;
  if (exact.is_zero()) return std::numeric_limits<double>::infinity();
  return magnitude(diff / exact);
}

double magnitude(const ScaledValue& value) {
  if (value.is_zero()) return 0.0;
  const auto e = static_cast<int>(std::clamp<std::int64_t>(value.exp2(), -4000, 4000));
  return std::ldexp(std::abs(value.mantissa()), e);
}

}  // namespace chahn
