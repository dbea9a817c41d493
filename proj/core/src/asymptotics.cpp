#include "chahn/asymptotics.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "chahn/error.hpp"
#include "chahn/specfun.hpp"

namespace chahn::asymptotics {

namespace {

using std::numbers::ln2;
using std::numbers::pi;

const Complex kI{0.0, 1.0};

// zeta(t) / (4^{2/3} (t - 1/2)) as a series in tau = t - 1/2.
constexpr std::array<double, 7> kZetaSeries = {
    1.0, -1.0 / 3.0, 88.0 / 315.0, -124.0 / 405.0, 0.38564083770432976780, -0.52982085913302844516,
    0.77266500245117954096,
};
// Phi / (v zeta) in tau.
constexpr std::array<double, 7> kPhiSeries = {
    -1.0 / 3.0, 1.0 / 3.0, -47.0 / 105.0, 71.0 / 105.0, -1.0900597814883529166, 1.8312512883941455366,
    -3.1647899855246889927,
};

template <std::size_t N>
double horner(const std::array<double, N>& c, double x) {
  double acc = 0.0;
  for (std::size_t k = N; k-- > 0;) acc = acc * x + c[k];
  return acc;
}

const double kFourTwoThirds = std::cbrt(16.0);

// log of (n / 4e)^n, 0 for n = 0.
double log_leading(int n) {
  if (n == 0) return 0.0;
  const double k = n;
  return k * (std::log(k / 4.0) - 1.0);
}

void check_n(int n, const char* where) {
  if (n < 0) throw Error(ErrorCode::DomainError, std::string(where) + ": negative degree");
}

// (zeta / (4t^2 - 1))^{1/4}, continued through t = 1/2.
double airy_prefactor(double t, const Thresholds& th) {
  const double tau = t - 0.5;
  if (std::abs(tau) < th.delta_series) {
    return std::pow(horner(kZetaSeries, tau) / (std::cbrt(4.0) * (1.0 + tau)), 0.25);
  }
  return std::pow(zeta(t, th) / (4.0 * t * t - 1.0), 0.25);
}

Complex sign_pow(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

double turning_half_width(int n, const Thresholds& th) {
  return th.s_max * std::pow(4.0 * std::max(n, 1), -2.0 / 3.0);
}

Region classify(Complex t, int n, const Thresholds& th) {
  if (std::abs(t) < th.t_min) {
    throw Error(ErrorCode::TooCloseToOrigin, "classify: |t| below t_min");
  }
  if (t.imag() != 0.0) return Region::Outer;
  const double x = t.real();
  const double delta = turning_half_width(n, th);
  if (x > 0.0) {
    if (std::abs(x - 0.5) <= delta) return Region::TurnPlus;
    return x > 0.5 ? Region::Outer : Region::OscPlus;
  }
  if (std::abs(x + 0.5) <= delta) return Region::TurnMinus;
  return x < -0.5 ? Region::Outer : Region::OscMinus;
}

double zeta(double t, const Thresholds& th) {
  if (!(t > 0.0)) throw Error(ErrorCode::DomainError, "zeta: t must be positive");
  const double tau = t - 0.5;
  if (std::abs(tau) < th.delta_series) return kFourTwoThirds * tau * horner(kZetaSeries, tau);
  if (t > 0.5) {
    const double r = pi * t - 2.0 * t * std::asin(1.0 / (2.0 * t)) - std::log(2.0 * t + std::sqrt(4.0 * t * t - 1.0));
    return std::pow(1.5 * r, 2.0 / 3.0);
  }
  const double s = std::sqrt(1.0 - 4.0 * t * t);
  const double r = std::acos(2.0 * t) - 2.0 * t * std::log((1.0 + s) / (2.0 * t));
  return -std::pow(1.5 * r, 2.0 / 3.0);
}

Complex phi_shift(double t, const Params& p, const Thresholds& th) {
  if (!(t > 0.0)) throw Error(ErrorCode::DomainError, "phi_shift: t must be positive");
  const Complex v = p.v();
  if (v == Complex{}) return 0.0;
  const double tau = t - 0.5;
  const double z = zeta(t, th);
  if (std::abs(tau) < th.delta_series) return v * z * horner(kPhiSeries, tau);
  if (t > 0.5) {
    const double bracket = pi / 2 - std::asin(1.0 / (2.0 * t)) - std::log(2.0 * t + std::sqrt(4.0 * t * t - 1.0));
    return v * bracket / std::sqrt(z);
  }
  const double s = std::sqrt(1.0 - 4.0 * t * t);
  return v * (std::log((1.0 + s) / (2.0 * t)) - std::acos(2.0 * t)) / std::sqrt(-z);
}

Complex turning_shift(int n, Side side, const Params& p) {
  const Complex base = static_cast<double>(n) + p.u() - 0.5;
  return side == Side::Plus ? base - p.v() : base + p.v();
}

TurningFrame turning_frame(int n, double t, Side side, const Params& p, const Thresholds& th) {
  TurningFrame f;
  f.side = side;
  f.shift = turning_shift(n, side, p);
  f.t = t;
  f.zeta = zeta(t, th);
  f.phi = phi_shift(t, p, th);
  const Complex correction = std::pow(f.shift, -1.0 / 3.0) * f.phi;
  f.airy_argument = std::pow(f.shift, 2.0 / 3.0) * f.zeta + (side == Side::Plus ? correction : -correction);
  return f;
}

ScaledValue outer_approx(int n, Complex t, const Params& p) {
  check_n(n, "outer_approx");
  if (std::abs(t.imag()) <= 1e-10 && std::abs(t.real()) <= 0.5 + 1e-10) {
    throw Error(ErrorCode::BranchCutHit, "outer_approx: t on or next to [-1/2, 1/2]");
  }
  const Complex u = p.u(), v = p.v();
  const double k = n;
  // (4t^2-1)^{1/2} as the product of principal roots of 2t-1 and 2t+1: this
  // branch is analytic off [-1/2, 1/2] and behaves like 2t at infinity.
  const Complex rm = std::sqrt(2.0 * t - 1.0), rp = std::sqrt(2.0 * t + 1.0);
  const Complex root = rm * rp;
  const Complex log_quarter = 0.5 * (std::log(rm) + std::log(rp));
  const Complex exponent = (1.5 - 2.0 * u) * ln2 + log_leading(n) + (1.0 - u) * std::log(t) - log_quarter +
                           (2.0 * k * t + v) * std::asin(1.0 / (2.0 * t)) +
                           (k + u - 0.5) * std::log(2.0 * t + root);
  return ScaledValue::from_log(exponent);
}

namespace {

Complex log_t_for(Complex t, Side side, bool upper) {
  if (side == Side::Plus) return std::log(t);
  return std::log(-t) + Complex(0.0, upper ? pi : -pi);
}

// Pieces shared by both exponentials.
struct BranchParts {
  Complex log_t;
  Complex root;   // (1-4t^2)^{1/2}
  Complex ratio;  // log((1 + root)/(2t)) with the chosen log t
  Complex lg;     // log(2t + i root)
};

BranchParts branch_parts(Complex t, Side side, bool upper) {
  BranchParts b;
  b.log_t = log_t_for(t, side, upper);
  b.root = std::sqrt(1.0 - 4.0 * t * t);
  b.ratio = std::log((1.0 + b.root) * 0.5) - b.log_t;
  b.lg = std::log(2.0 * t + kI * b.root);
  return b;
}

}  // namespace

ScaledValue branch_plus(int n, Complex t, Side side, const Params& p) {
  check_n(n, "branch_plus");
  const Complex u = p.u(), v = p.v();
  const double k = n;
  const BranchParts b = branch_parts(t, side, true);
  const Complex e = (1.5 - 2.0 * u) * ln2 + log_leading(n) + (1.0 - u) * b.log_t -
                    0.25 * std::log(1.0 - 4.0 * t * t) - kI * (pi / 4) +
                    (2.0 * k * t + v) * (pi / 2 - kI * b.ratio) + (k + u - 0.5) * b.lg;
  return ScaledValue::from_log(e);
}

ScaledValue branch_minus(int n, Complex t, Side side, const Params& p) {
  check_n(n, "branch_minus");
  const Complex u = p.u(), v = p.v();
  const double k = n;
  const BranchParts b = branch_parts(t, side, false);
  const Complex e = (1.5 - 2.0 * u) * ln2 + log_leading(n) + (1.0 - u) * b.log_t -
                    0.25 * std::log(1.0 - 4.0 * t * t) + kI * (pi / 4) +
                    (2.0 * k * t + v) * (pi / 2 + kI * b.ratio) - (k + u - 0.5) * b.lg;
  return ScaledValue::from_log(e);
}

namespace {

void check_strip(double t, Side side, const Thresholds& th) {
  const bool ok = side == Side::Plus ? (t > th.t_min && t < 0.5) : (t < -th.t_min && t > -0.5);
  if (!ok) throw Error(ErrorCode::WrongRegion, "osc_approx: t = " + std::to_string(t) + " outside the strip");
}

}  // namespace

ScaledValue osc_envelope(int n, double t, Side side, const Params& p) {
  const Complex u = p.u(), v = p.v();
  const double k = n;
  const double sgn = side == Side::Plus ? 1.0 : -1.0;
  const Complex e = (2.5 - 2.0 * u) * ln2 + log_leading(n) + (1.0 - u) * std::log(sgn * t) -
                    0.25 * std::log(1.0 - 4.0 * t * t) + sgn * (2.0 * k * t + v) * (pi / 2);
  return ScaledValue::from_log(e);
}

Complex osc_phase(int n, double t, Side side, const Params& p) {
  const Complex u = p.u(), v = p.v();
  const double k = n;
  const double root = std::sqrt(1.0 - 4.0 * t * t);
  const Complex lg = std::log(Complex(2.0 * t, root));
  if (side == Side::Plus) {
    return (2.0 * k * t + v) * std::log((1.0 + root) / (2.0 * t)) + kI * (k + u - 0.5) * lg + pi / 4;
  }
  return (2.0 * k * t + v) * std::log((1.0 + root) / (-2.0 * t)) + kI * (k + u - 0.5) * lg +
         (4.0 * u - 3.0) * (pi / 4);
}

ScaledValue osc_approx(int n, double t, Side side, const Params& p, const Thresholds& th) {
  check_n(n, "osc_approx");
  check_strip(t, side, th);
  Complex phase;
  if (p.real_orthogonal()) {
    // log(2t + i sqrt(1-4t^2)) is i arccos(2t) on the unit circle.
    const double u = p.u().real(), v = p.v().real();
    const double k = n;
    const double root = std::sqrt(1.0 - 4.0 * t * t);
    const double base = -(k + u - 0.5) * std::acos(2.0 * t);
    phase = side == Side::Plus ? (2.0 * k * t + v) * std::log((1.0 + root) / (2.0 * t)) + base + pi / 4
                               : (2.0 * k * t + v) * std::log((1.0 + root) / (-2.0 * t)) + base +
                                     (4.0 * u - 3.0) * (pi / 4);
  } else {
    phase = osc_phase(n, t, side, p);
  }
  return osc_envelope(n, t, side, p) * ScaledValue(std::cos(phase));
}

Complex uniform_x(int n, double t, Side side, const Params& p) {
  const Complex shift = turning_shift(n, side, p);
  return side == Side::Plus ? shift * t : -shift * t;
}

ScaledValue uniform_approx(int n, double t, Side side, const Params& p, const Thresholds& th) {
  check_n(n, "uniform_approx");
  if (!(t > th.t_min)) throw Error(ErrorCode::DomainError, "uniform_approx: t must exceed t_min");
  const TurningFrame f = turning_frame(n, t, side, p, th);
  const Complex arg = f.airy_argument;
  if (std::abs(arg.imag()) > 1e-12 * (1.0 + std::abs(arg))) {
    throw Error(ErrorCode::WrongClass, "uniform_approx: complex Airy argument (complex nu or mu)");
  }
  // Leading term of the A_s sum carries shift^{1/6}.
  const Complex constant = std::pow(2.0, 1.0 - p.u()) * std::sqrt(2.0 * pi) * std::pow(f.shift, 1.0 / 6.0);
  ScaledValue out = ScaledValue(constant * airy_prefactor(t, th)) * specfun::airy_ai_scaled(arg.real());
  if (side == Side::Minus) out *= ScaledValue(sign_pow(n));
  return out;
}

ScaledValue plancherel(int n, double s, Side side, const Params& p, const Thresholds& th) {
  check_n(n, "plancherel");
  if (std::abs(s) > th.s_max) throw Error(ErrorCode::DomainError, "plancherel: |s| exceeds s_max");
  const Complex shift = turning_shift(n, side, p);
  const Complex constant = std::pow(2.0, 4.0 / 3.0 - p.u()) * std::sqrt(pi) * std::pow(shift, 1.0 / 6.0);
  ScaledValue out = ScaledValue(constant) * specfun::airy_ai_scaled(s);
  if (side == Side::Minus) out *= ScaledValue(sign_pow(n));
  return out;
}

Complex plancherel_x(int n, double s, Side side, const Params& p) {
  const Complex shift = turning_shift(n, side, p);
  const Complex x = shift * 0.5 + std::pow(shift, 1.0 / 3.0) * s / kFourTwoThirds;
  return side == Side::Plus ? x : -x;
}

ScaledValue weight_asymp(double x, const Params& p) {
  if (!(x >= 5.0)) throw Error(ErrorCode::DomainError, "weight_asymp: needs x >= 5");
  const Complex l = std::log(2.0 * pi) + (p.u() - 1.0) * std::log(x) - pi * x - pi * p.v() * 0.5;
  return ScaledValue::from_log(l);
}

}  // namespace chahn::asymptotics
