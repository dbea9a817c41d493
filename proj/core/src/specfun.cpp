#include "chahn/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "chahn/double_double.hpp"
#include "chahn/error.hpp"

namespace chahn::specfun {

namespace {

using std::numbers::pi;

// Lanczos approximation, g = 607/128, 15 terms (Godfrey).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4, .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,  -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4, .36899182659531622704e-5,
};

const double kHalfLog2Pi = 0.5 * std::log(2.0 * pi);

// Valid for Re z >= 1/2 (and used on the mirrored half after reflection).
Complex lanczos_log_gamma(Complex z) {
  z -= 1.0;
  Complex sum = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) sum += kLanczos[k] / (z + static_cast<double>(k));
  const Complex t = z + kLanczosG + 0.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(sum);
}

// A branch of log sin(pi z) that is analytic on Im z >= 0:
// log(1/2) + i pi/2 - i pi z + log(1 - e^{2 pi i z}).
Complex log_sin_pi_upper(Complex z) {
  const Complex i{0.0, 1.0};
  const Complex w = std::exp(2.0 * pi * i * z);
  const Complex branch = std::log(0.5) + i * (pi / 2) - i * pi * z + std::log(1.0 - w);
  if (z.imag() > 1.0) return branch;
  // Near the real axis the expression above loses the modulus to cancellation
  // close to integers; recompute sin(pi z) after exact argument reduction and
  // keep only the branch index from the formula.
  const double m = std::round(z.real());
  const double r = z.real() - m;
  const double sign = std::fmod(std::abs(m), 2.0) == 0.0 ? 1.0 : -1.0;
  const Complex s = sign * Complex(std::sin(pi * r) * std::cosh(pi * z.imag()),
                                   std::cos(pi * r) * std::sinh(pi * z.imag()));
  const Complex principal = std::log(s);
  const double turns = std::round((branch.imag() - principal.imag()) / (2.0 * pi));
  return principal + Complex(0.0, 2.0 * pi * turns);
}

Complex log_gamma_upper(Complex z) {
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  return std::log(pi) - log_sin_pi_upper(z) - lanczos_log_gamma(1.0 - z);
}

// Airy constants Ai(0) and -Ai'(0) and sqrt(3) as double-double pairs.
const dd::Real kAi0{0.3550280538878172, 2.05233632436212e-17};
const dd::Real kMinusAip0{0.2588194037928068, -2.522243111610832e-17};
const dd::Real kSqrt3{1.7320508075688772, 1.0035084221806903e-16};

constexpr double kSeriesLimit = 9.0;

AiryQuad airy_maclaurin(double x) {
  const dd::Real xd(x);
  const dd::Real x3 = xd * xd * xd;
  // f, g are the two standard Maclaurin solutions; fp, gp their derivatives.
  dd::Real tf(1.0), tg = xd, tfp = xd * xd * dd::Real(0.5), tgp(1.0);
  dd::Real f = tf, g = tg, fp = tfp, gp = tgp;
  double peak = std::max({1.0, std::abs(x), std::abs(x * x)});
  for (int k = 1; k < 400; ++k) {
    const double k3 = 3.0 * k;
    tf = tf * x3 / dd::Real((k3 - 1.0) * k3);
    tg = tg * x3 / dd::Real(k3 * (k3 + 1.0));
    tgp = tgp * x3 / dd::Real(k3 * (k3 - 2.0));
    if (k >= 2) tfp = tfp * x3 / dd::Real((k3 - 1.0) * (k3 - 3.0));
    f += tf;
    g += tg;
    gp += tgp;
    if (k >= 2) fp += tfp;
    const double mag = std::max({dd::abs(tf), dd::abs(tg), dd::abs(tfp), dd::abs(tgp)});
    peak = std::max(peak, mag);
    if (mag < 1e-34 * peak) break;
  }
  AiryQuad out;
  out.ai = (kAi0 * f - kMinusAip0 * g).to_double();
  out.ai_prime = (kAi0 * fp - kMinusAip0 * gp).to_double();
  out.bi = (kSqrt3 * (kAi0 * f + kMinusAip0 * g)).to_double();
  out.bi_prime = (kSqrt3 * (kAi0 * fp + kMinusAip0 * gp)).to_double();
  return out;
}

// Partial sums of the Poincare series with u_k / v_k coefficients.
struct AsymptoticSums {
  double u_alt = 0.0;   // sum (-1)^k u_k zeta^-k
  double v_alt = 0.0;   // sum (-1)^k v_k zeta^-k
  double u_plus = 0.0;  // sum u_k zeta^-k
  double v_plus = 0.0;
  double u_even = 0.0;  // sum (-1)^k u_{2k} zeta^-2k
  double u_odd = 0.0;   // sum (-1)^k u_{2k+1} zeta^-(2k+1)
  double v_even = 0.0;
  double v_odd = 0.0;
};

AsymptoticSums asymptotic_sums(double zeta) {
  AsymptoticSums s;
  double u = 1.0;
  double power = 1.0;
  double last = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 200; ++k) {
    if (k > 0) {
      u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
      power /= zeta;
    }
    const double v = k == 0 ? 1.0 : -(6.0 * k + 1.0) / (6.0 * k - 1.0) * u;
    const double tu = u * power;
    const double tv = v * power;
    const double size = std::max(std::abs(tu), std::abs(tv));
    if (size > last) break;  // asymptotic series started to diverge
    last = size;
    const double alt = (k % 2 == 0) ? 1.0 : -1.0;
    s.u_alt += alt * tu;
    s.v_alt += alt * tv;
    s.u_plus += tu;
    s.v_plus += tv;
    const double pair_sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      s.u_even += pair_sign * tu;
      s.v_even += pair_sign * tv;
    } else {
      s.u_odd += pair_sign * tu;
      s.v_odd += pair_sign * tv;
    }
    if (size < 1e-18) break;
  }
  return s;
}

AiryQuad airy_asymptotic_positive(double x) {
  const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
  const double q = std::sqrt(std::sqrt(x));
  const double log_bi_prime = zeta + std::log(q / std::sqrt(pi));
  if (log_bi_prime > 709.0) {
    throw Error(ErrorCode::RangeOverflow, "airy: Bi overflows for x = " + std::to_string(x));
  }
  const AsymptoticSums s = asymptotic_sums(zeta);
  const double decay = std::exp(-zeta) / (2.0 * std::sqrt(pi));
  const double growth = std::exp(zeta) / std::sqrt(pi);
  return {decay / q * s.u_alt, -q * decay * s.v_alt, growth / q * s.u_plus, q * growth * s.v_plus};
}

AiryQuad airy_asymptotic_negative(double x) {
  const double z = -x;
  const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
  const double q = std::sqrt(std::sqrt(z));
  const AsymptoticSums s = asymptotic_sums(zeta);
  const double c = std::cos(zeta - pi / 4);
  const double sn = std::sin(zeta - pi / 4);
  const double rsp = 1.0 / std::sqrt(pi);
  AiryQuad out;
  out.ai = rsp / q * (c * s.u_even + sn * s.u_odd);
  out.ai_prime = rsp * q * (sn * s.v_even - c * s.v_odd);
  out.bi = rsp / q * (-sn * s.u_even + c * s.u_odd);
  out.bi_prime = rsp * q * (c * s.v_even + sn * s.v_odd);
  return out;
}

}  // namespace

Complex log_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw Error(ErrorCode::DomainError, "log_gamma: non-finite argument");
  }
  const double nearest = std::round(z.real());
  if (nearest <= 0.0 && std::abs(z - Complex(nearest, 0.0)) <= 1e-14) {
    throw Error(ErrorCode::PoleAtNonpositiveInteger,
                "log_gamma: pole at " + std::to_string(static_cast<long long>(nearest)));
  }
  if (std::signbit(z.imag())) return std::conj(log_gamma_upper(std::conj(z)));
  return log_gamma_upper(z);
}

ScaledValue gamma_scaled(Complex z) { return ScaledValue::from_log(log_gamma(z)); }

AiryQuad airy(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::DomainError, "airy: non-finite argument");
  if (std::abs(x) <= kSeriesLimit) return airy_maclaurin(x);
  return x > 0 ? airy_asymptotic_positive(x) : airy_asymptotic_negative(x);
}

ScaledValue airy_ai_scaled(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::DomainError, "airy: non-finite argument");
  if (x <= kSeriesLimit) return airy(x).ai;
  const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
  const double q = std::sqrt(std::sqrt(x));
  const AsymptoticSums s = asymptotic_sums(zeta);
  return ScaledValue::from_log(-zeta) * ScaledValue(s.u_alt / (2.0 * std::sqrt(pi) * q));
}

double airy_zero(int k) {
  if (k < 1) throw Error(ErrorCode::DomainError, "airy_zero: k must be >= 1");
  if (k > 10000) throw Error(ErrorCode::ArgumentTooLarge, "airy_zero: k > 10^4");
  const double t = 3.0 * pi * (4.0 * k - 1.0) / 8.0;
  const double t2 = 1.0 / (t * t);
  double x = -std::pow(t, 2.0 / 3.0) *
             (1.0 + t2 * (5.0 / 48.0 + t2 * (-5.0 / 36.0 + t2 * (77125.0 / 82944.0))));
  for (int it = 0; it < 30; ++it) {
    const AiryQuad a = airy(x);
    const double step = a.ai / a.ai_prime;
    x -= step;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(x)) break;
  }
  return x;
}

}  // namespace chahn::specfun
