#pragma once

#include "chahn/params.hpp"
#include "chahn/scaled_value.hpp"

/// Large-n approximations of the monic continuous Hahn polynomials: the
/// zero-free and oscillatory formulas in the rescaled variable x = n t, the
/// Airy-type expansions around the turning points t = +-1/2, their
/// Plancherel-type limits and the Stirling form of the weight.
namespace chahn::asymptotics {

enum class Side { Plus, Minus };

enum class Region { Outer, OscPlus, OscMinus, TurnPlus, TurnMinus };

struct Thresholds {
  double t_min = 0.05;
  double s_max = 8.0;
  double delta_series = 1e-3;
};

/// Half-width of each turning window in t: s_max * (4n)^{-2/3}, i.e. the
/// Airy argument stays within s_max there.
double turning_half_width(int n, const Thresholds& th = {});

/// Throws TooCloseToOrigin for |t| < t_min.
Region classify(Complex t, int n, const Thresholds& th = {});

/// The Liouville-Green variable: zeta(1/2) = 0, increasing, sign(t - 1/2).
double zeta(double t, const Thresholds& th = {});

/// Phi(zeta(t)); real for real v, and identically 0 when v = 0.
Complex phi_shift(double t, const Params& p, const Thresholds& th = {});

/// nu = n+u-v-1/2 (Plus) or mu = n+u+v-1/2 (Minus).
Complex turning_shift(int n, Side side, const Params& p);

struct TurningFrame {
  Side side = Side::Plus;
  Complex shift;
  double t = 0.0;
  double zeta = 0.0;
  Complex phi;
  /// shift^{2/3} zeta +- shift^{-1/3} phi
  Complex airy_argument;
};

TurningFrame turning_frame(int n, double t, Side side, const Params& p, const Thresholds& th = {});

/// Zero-free region approximation of pi_n(n t), t off [-1/2, 1/2].
ScaledValue outer_approx(int n, Complex t, const Params& p);

/// The two exponential pieces whose sum is pi_n(n t) in the oscillatory strip.
/// side selects the strip: Minus continues the logarithm of t from the upper
/// (plus piece) and lower (minus piece) half-planes onto t < 0.
ScaledValue branch_plus(int n, Complex t, Side side, const Params& p);
ScaledValue branch_minus(int n, Complex t, Side side, const Params& p);

/// Prefactor in front of the cosine in the oscillatory formula.
ScaledValue osc_envelope(int n, double t, Side side, const Params& p);
/// Cosine argument from the complex-logarithm form.
Complex osc_phase(int n, double t, Side side, const Params& p);
/// Leading oscillatory approximation of pi_n(n t); Plus needs
/// t in (t_min, 1/2), Minus needs t in (-1/2, -t_min).
ScaledValue osc_approx(int n, double t, Side side, const Params& p, const Thresholds& th = {});

/// Leading uniform Airy approximation of [w(x)]^{1/2} pi_n(x) / K_n at
/// x = nu t (Plus) or x = -mu t (Minus), t > t_min.
ScaledValue uniform_approx(int n, double t, Side side, const Params& p, const Thresholds& th = {});
/// x at which uniform_approx is evaluated.
Complex uniform_x(int n, double t, Side side, const Params& p);

/// Plancherel-type value 2^{4/3-u} sqrt(pi) shift^{1/6} Ai(s), with (-1)^n on
/// the Minus side.
ScaledValue plancherel(int n, double s, Side side, const Params& p, const Thresholds& th = {});
/// x = nu/2 + 4^{-2/3} nu^{1/3} s (Plus) or -mu/2 - 4^{-2/3} mu^{1/3} s.
Complex plancherel_x(int n, double s, Side side, const Params& p);

/// Stirling form 2 pi x^{u-1} e^{-pi x - pi v/2} of [w(x)]^{1/2}, x >= 5.
ScaledValue weight_asymp(double x, const Params& p);

}  // namespace chahn::asymptotics
