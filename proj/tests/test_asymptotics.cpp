#include <doctest.h>

#include <cmath>
#include <numbers>

#include "chahn/asymptotics.hpp"
#include "chahn/harness.hpp"
#include "chahn/polynomial.hpp"
#include "chahn/specfun.hpp"
#include "support.hpp"

using namespace chahn;
using namespace chahn::asymptotics;
using namespace testing;
using std::numbers::pi;

namespace {

Params v_one() { return make_params(Complex(0.5, 1.0), 1.5, Complex(0.5, -1.0), 1.5); }

double zeta_direct(double t) {
  if (t > 0.5) {
    const double r = pi * t - 2.0 * t * std::asin(1.0 / (2.0 * t)) - std::log(2.0 * t + std::sqrt(4.0 * t * t - 1.0));
    return std::pow(1.5 * r, 2.0 / 3.0);
  }
  const double s = std::sqrt(1.0 - 4.0 * t * t);
  return -std::pow(1.5 * (std::acos(2.0 * t) - 2.0 * t * std::log((1.0 + s) / (2.0 * t))), 2.0 / 3.0);
}

ScaledValue exact_normalized(int n, Complex x, const Params& p) { return normalized_monic(n, x, p); }

}  // namespace

TEST_CASE("classify") {
  CHECK(classify(1.0, 100) == Region::Outer);
  CHECK(classify(0.3, 100) == Region::OscPlus);
  CHECK(classify(-0.3, 100) == Region::OscMinus);
  CHECK(classify(0.501, 10000) == Region::TurnPlus);
  CHECK(classify(-0.505, 10000) == Region::TurnMinus);
  CHECK(classify(Complex(0.2, 0.1), 100) == Region::Outer);
  CHECK(classify(-2.0, 100) == Region::Outer);
  CHECK_THROWS_CODE(classify(0.01, 100), ErrorCode::TooCloseToOrigin);
  // window edges are Airy arguments of size s_max
  const double d = turning_half_width(400);
  CHECK(std::pow(4.0 * 400, 2.0 / 3.0) * d == doctest::Approx(8.0));
}

TEST_CASE("zeta") {
  CHECK(zeta(0.5) == 0.0);
  CHECK(zeta(1.0) == doctest::Approx(1.10790975542).epsilon(1e-10));
  CHECK(std::abs(zeta(1.0) - 1.10789) < 1e-4);
  CHECK(zeta(0.5001) == doctest::Approx(std::cbrt(16.0) * 1e-4).epsilon(0.01));
  // series and closed form agree across the switching point
  for (double t : {0.5 - 1.0001e-3, 0.5 + 1.0001e-3, 0.49, 0.52})
    CHECK(zeta(t) == doctest::Approx(zeta_direct(t)).epsilon(1e-12));
  Thresholds wide;
  wide.delta_series = 2e-2;
  for (double t : {0.485, 0.4999, 0.5003, 0.515}) CHECK(zeta(t, wide) == doctest::Approx(zeta_direct(t)).epsilon(1e-9));
  double prev = -1e300;
  for (int i = 0; i < 1000; ++i) {
    const double t = 0.05 + 2.95 * (i + 0.5) / 1000.0;
    const double z = zeta(t);
    CHECK(z > prev);
    CHECK((z > 0) == (t > 0.5));
    prev = z;
  }
  CHECK_THROWS_CODE(zeta(0.0), ErrorCode::DomainError);
}

TEST_CASE("phi_shift") {
  CHECK(phi_shift(1.0, half()) == Complex(0.0));
  CHECK(phi_shift(0.3, half()) == Complex(0.0));
  const double expect = (pi / 2 - pi / 6 - std::log(2.0 + std::sqrt(3.0))) / std::sqrt(zeta_direct(1.0));
  CHECK(phi_shift(1.0, v_one()).real() == doctest::Approx(expect).epsilon(1e-13));
  CHECK(std::abs(phi_shift(1.0, v_one()).real() + 0.25629) < 1e-5);
  for (double t : {0.5 - 1e-3, 0.5 + 1e-3}) {
    const double ratio = phi_shift(t, v_one()).real() / zeta(t);
    CHECK(ratio == doctest::Approx(-1.0 / 3.0).epsilon(0.05));
  }
  // continuity of the series branch
  for (double t : {0.5 - 1.0001e-3, 0.5 + 1.0001e-3}) {
    Thresholds off;
    off.delta_series = 0.0;
    CHECK(phi_shift(t, v_one()).real() == doctest::Approx(phi_shift(t, v_one(), off).real()).epsilon(1e-9));
  }
}

TEST_CASE("turning frame") {
  const TurningFrame f = turning_frame(30, 0.5, Side::Plus, v_one());
  CHECK(f.shift == Complex(30.0 + 2.0 - 1.0 - 0.5));
  CHECK(turning_shift(30, Side::Minus, v_one()) == Complex(30.0 + 2.0 + 1.0 - 0.5));
  CHECK(f.zeta == 0.0);
  CHECK(f.airy_argument == Complex(0.0));
}

TEST_CASE("outer approximation") {
  const Params p = half();
  const double e40 = relative_difference(monic_eval(40, 40.0, p).value, outer_approx(40, 1.0, p));
  const double e80 = relative_difference(monic_eval(80, 80.0, p).value, outer_approx(80, 1.0, p));
  CHECK(e40 <= 0.04);
  CHECK(e40 / e80 == doctest::Approx(2.0).epsilon(0.15));
  CHECK(std::abs((outer_approx(20, 100.0, p) / monic_eval(20, 2000.0, p).value).to_complex() - 1.0) < 1e-3);

  const Params q = v_one();
  for (Complex t : {Complex(1.0, 0.3), Complex(-0.8, 0.2), Complex(0.1, 0.9)}) {
    const ScaledValue a = outer_approx(50, t, q), b = outer_approx(50, std::conj(t), q);
    CHECK(relative_difference(a, b.conj()) < 1e-12);
    CHECK(relative_difference(monic_eval(50, 50.0 * t, q).value, a) < 0.05);
  }
  CHECK_THROWS_CODE(outer_approx(50, 0.3, p), ErrorCode::BranchCutHit);
  CHECK_THROWS_CODE(outer_approx(50, Complex(0.3, 1e-12), p), ErrorCode::BranchCutHit);
}

TEST_CASE("oscillatory approximation") {
  const Params p = half();
  const int n = 200;
  const double t = 0.3;
  const ScaledValue exact = monic_eval(n, n * t, p).value;
  const ScaledValue env = osc_envelope(n, t, Side::Plus, p);
  CHECK(magnitude((exact - osc_approx(n, t, Side::Plus, p)) / env) <= 5.0 / n);

  for (double tt : {0.12, 0.25, 0.4}) {
    const Complex ph = osc_phase(100, tt, Side::Plus, v_one());
    CHECK(std::abs(ph.imag()) <= 1e-12 * std::abs(ph));
  }

  // sign pattern on (0.1, 0.4) away from zeros
  const int m = 100;
  int compared = 0;
  for (int i = 0; i < 50; ++i) {
    const double tt = 0.1 + 0.3 * (i + 0.5) / 50.0;
    const ScaledValue ex = monic_eval(m, m * tt, p).value;
    const ScaledValue e = osc_envelope(m, tt, Side::Plus, p);
    if (magnitude(ex / e) < 0.05) continue;
    const double se = ex.mantissa().real(), sa = osc_approx(m, tt, Side::Plus, p).mantissa().real();
    CHECK((se > 0) == (sa > 0));
    ++compared;
  }
  CHECK(compared > 40);

  CHECK_THROWS_CODE(osc_approx(100, 0.6, Side::Plus, p), ErrorCode::WrongRegion);
  CHECK_THROWS_CODE(osc_approx(100, 0.3, Side::Minus, p), ErrorCode::WrongRegion);
  CHECK_THROWS_CODE(osc_approx(100, 0.01, Side::Plus, p), ErrorCode::WrongRegion);
}

TEST_CASE("oscillatory approximation on the negative strip") {
  const Params q = v_one();
  for (int n : {100, 200}) {
    const double e = harness::osc_window_error(n, -0.3, Side::Minus, q);
    CHECK(e <= 5.0 / n);
  }
}

TEST_CASE("branch pieces") {
  const Params q = make_params(Complex(0.7, 0.3), 1.2, Complex(0.7, -0.3), 1.2);
  for (double t : {0.1, 0.2, 0.3, 0.4}) {
    const int n = 60;
    const double eps = 1e-6;
    auto f = [&](Complex z) { return branch_plus(n, z, Side::Plus, q) + branch_minus(n, z, Side::Plus, q); };
    const ScaledValue up = f(Complex(t, eps)), dn = f(Complex(t, -eps)), on = f(t);
    // no jump: the probe mean matches the on-axis value to second order
    CHECK(relative_difference(on, (up + dn) * ScaledValue(0.5)) < 1e-6);
    // and the probe difference is the analytic i 2 eps f'(t)
    const ScaledValue across = (up - dn) / ScaledValue(Complex(0.0, 2.0 * eps));
    const ScaledValue along = (f(t + eps) - f(t - eps)) / ScaledValue(2.0 * eps);
    CHECK(relative_difference(along, across) < 1e-3);
    // the sum reproduces the cosine form on the real segment
    const ScaledValue sum = branch_plus(n, t, Side::Plus, q) + branch_minus(n, t, Side::Plus, q);
    CHECK(magnitude((sum - osc_approx(n, t, Side::Plus, q)) / osc_envelope(n, t, Side::Plus, q)) < 1e-12);
    const ScaledValue msum = branch_plus(n, -t, Side::Minus, q) + branch_minus(n, -t, Side::Minus, q);
    CHECK(magnitude((msum - osc_approx(n, -t, Side::Minus, q)) / osc_envelope(n, -t, Side::Minus, q)) < 1e-12);
  }
  const Complex t(0.3, 0.2);
  const ScaledValue ratio = branch_minus(200, t, Side::Plus, half()) / branch_plus(200, t, Side::Plus, half());
  CHECK(magnitude(ratio) < 1e-6);
  // the dominant piece is the outer formula in the upper half-plane
  CHECK(relative_difference(outer_approx(200, t, half()), branch_plus(200, t, Side::Plus, half())) < 1e-12);
}

TEST_CASE("uniform approximation") {
  const Params p = half();
  const int n = 100;
  const double t = 0.8;
  const Complex x = uniform_x(n, t, Side::Plus, p);
  CHECK(relative_difference(exact_normalized(n, x, p), uniform_approx(n, t, Side::Plus, p)) <= 10.0 / n);

  // at the turning point it is the Plancherel value at s = 0
  for (const Params& q : {p, v_one()})
    for (Side s : {Side::Plus, Side::Minus})
      CHECK(relative_difference(plancherel(n, 0.0, s, q), uniform_approx(n, 0.5, s, q)) < 1e-13);

  // agreement with the outer formula at t = 1.2, n = 80
  const int m = 80;
  const Complex x2 = uniform_x(m, 1.2, Side::Plus, p);
  const ScaledValue outer = outer_approx(m, x2 / static_cast<double>(m), p) *
                            ScaledValue::from_log(0.5 * log_weight(x2, p)) / kn_scale(m, p);
  CHECK(relative_difference(outer, uniform_approx(m, 1.2, Side::Plus, p)) <= 0.1);

  // Minus side, nonzero v
  for (int k : {40, 80, 160}) {
    const Params q = v_one();
    const Complex xm = uniform_x(k, 0.8, Side::Minus, q);
    CHECK(xm.real() < 0.0);
    CHECK(relative_difference(exact_normalized(k, xm, q), uniform_approx(k, 0.8, Side::Minus, q)) <= 10.0 / k);
  }

  CHECK_THROWS_CODE(uniform_approx(50, 0.04, Side::Plus, p), ErrorCode::DomainError);
  const Params g = make_params(Complex(0.5, 1.0), 1.5, Complex(0.7, -1.0), 1.5);
  CHECK_THROWS_CODE(uniform_approx(50, 0.8, Side::Plus, g), ErrorCode::WrongClass);
}

TEST_CASE("uniform convergence order") {
  const auto rows = harness::convergence_table(harness::Regime::Uniform, 0.8, {40, 80, 160}, half());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    REQUIRE(rows[i].empirical_order.has_value());
    CHECK(*rows[i].empirical_order >= 0.6);
    CHECK(*rows[i].empirical_order <= 1.4);
  }
}

TEST_CASE("Plancherel") {
  const Params p = half();
  CHECK(plancherel(60, specfun::airy_zero(1), Side::Plus, p).log_abs() < std::log(1e-13));
  for (int n : {60, 61})
    CHECK(relative_difference(plancherel(n, 0.7, Side::Plus, p),
                              plancherel(n, 0.7, Side::Minus, p) * ScaledValue(n % 2 ? -1.0 : 1.0)) == 0.0);
  for (int n : {60, 61}) {
    const Complex xp = plancherel_x(n, 0.7, Side::Plus, p), xm = plancherel_x(n, 0.7, Side::Minus, p);
    CHECK(xp == -xm);
  }
  // the exact normalized value tracks the Airy profile with O(1/nu) error
  auto err = [&](int n) {
    const Complex x = plancherel_x(n, 0.0, Side::Plus, p);
    return relative_difference(exact_normalized(n, x, p), plancherel(n, 0.0, Side::Plus, p));
  };
  const double ratio = err(60) / err(120);
  CHECK(ratio >= 1.6);
  CHECK(ratio <= 2.6);
  CHECK_THROWS_CODE(plancherel(60, 9.0, Side::Plus, p), ErrorCode::DomainError);
}

TEST_CASE("Stirling weight") {
  const Params p = half();
  auto ratio = [&](double x) {
    return (weight_asymp(x, p) / ScaledValue::from_log(0.5 * log_weight(x, p))).real();
  };
  CHECK(std::abs(ratio(30.0) - 1.0) <= 0.01);
  // for these parameters the correction is exponentially small; use ones
  // with a genuine 1/x tail for the monotone approach
  const Params q = make_params(1.5, 0.7, 1.5, 0.7);
  auto ratio_q = [&](double x) {
    return (weight_asymp(x, q) / ScaledValue::from_log(0.5 * log_weight(x, q))).real();
  };
  const double r10 = std::abs(ratio_q(10.0) - 1.0), r20 = std::abs(ratio_q(20.0) - 1.0), r40 = std::abs(ratio_q(40.0) - 1.0);
  CHECK(r10 > r20);
  CHECK(r20 > r40);
  // v = 0 reduces to 2 pi x^{u-1} e^{-pi x}; here u = 1
  CHECK(weight_asymp(7.0, p).log_abs() == doctest::Approx(std::log(2.0 * pi) - 7.0 * pi).epsilon(1e-15));
  CHECK_THROWS_CODE(weight_asymp(4.0, p), ErrorCode::DomainError);
}
