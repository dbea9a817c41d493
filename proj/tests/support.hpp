#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "chahn/error.hpp"
#include "chahn/params.hpp"

// Asserts that expr throws chahn::Error carrying the given code.
#define CHECK_THROWS_CODE(expr, expected)                       \
  do {                                                          \
    bool thrown_ = false;                                       \
    try {                                                       \
      (void)(expr);                                             \
    } catch (const chahn::Error& e_) {                          \
      thrown_ = true;                                           \
      CHECK_MESSAGE(e_.code() == (expected), e_.what());        \
    }                                                           \
    CHECK_MESSAGE(thrown_, "expected chahn::Error from " #expr); \
  } while (0)

namespace testing {

using Complex = std::complex<double>;
using LComplex = std::complex<long double>;

inline chahn::Params half() { return chahn::make_params(0.5, 0.5, 0.5, 0.5); }

inline double rel(Complex exact, Complex approx) { return std::abs(exact - approx) / std::abs(exact); }

// p_n(x) from the hypergeometric sum, written out term by term in long
// double with no rescaling. Only for small n.
inline LComplex brute_force_pn(int n, Complex x, Complex a, Complex b, Complex c, Complex d) {
  const LComplex i(0.0L, 1.0L);
  const LComplex la(a), lb(b), lc(c), ld(d), lx(x);
  const LComplex s = la + lb + lc + ld;
  LComplex prefactor = 1.0L;
  for (int k = 0; k < n; ++k) prefactor *= (la + lc + static_cast<long double>(k)) * (la + ld + static_cast<long double>(k));
  for (int k = 1; k <= n; ++k) prefactor /= static_cast<long double>(k);
  prefactor *= std::pow(i, n);
  LComplex sum = 0.0L;
  for (int k = 0; k <= n; ++k) {
    LComplex term = 1.0L;
    for (int j = 0; j < k; ++j) {
      const long double jj = j;
      term *= (static_cast<long double>(-n) + jj) * (static_cast<long double>(n) + s - 1.0L + jj) * (la + i * lx + jj);
      term /= (la + lc + jj) * (la + ld + jj) * (jj + 1.0L);
    }
    sum += term;
  }
  return prefactor * sum;
}

// pi_n = n!/(n+s-1)_n p_n.
inline LComplex brute_force_monic(int n, Complex x, Complex a, Complex b, Complex c, Complex d) {
  const LComplex s = LComplex(a) + LComplex(b) + LComplex(c) + LComplex(d);
  LComplex f = 1.0L;
  for (int k = 0; k < n; ++k) f *= static_cast<long double>(k + 1) / (static_cast<long double>(n) + s - 1.0L + static_cast<long double>(k));
  return f * brute_force_pn(n, x, a, b, c, d);
}

struct RandomParams {
  Complex a, b, c, d;
};

// c = conj(a), d = conj(b) with real parts in (lo, hi) and |imag| <= im.
inline RandomParams random_real_orthogonal(std::mt19937_64& rng, double lo = 0.2, double hi = 2.0, double im = 1.0) {
  std::uniform_real_distribution<double> re(lo, hi), ip(-im, im);
  const Complex a(re(rng), ip(rng)), b(re(rng), ip(rng));
  return {a, b, std::conj(a), std::conj(b)};
}

}  // namespace testing
