#pragma once

// Complex special functions: gamma, zeta, xi, incomplete gamma, 1F1, 2F1,
// polylogarithm on the unit circle, rising factorials, Bernoulli numbers and
// divisor sums.
//
// Branch convention everywhere: principal logarithm, y^s := exp(s Log y)
// with Arg in (-pi, pi].

#include <cstdint>
#include <span>

#include "glf/types.hpp"

namespace glf::specfun {

Complex gamma(Complex s);
/// log Gamma on the principal sheet of the Stirling series (not the
/// branch-continuous loggamma); only exp(log_gamma) is meaningful.
Complex log_gamma(Complex s);
Complex digamma(Complex s);
Complex rgamma(Complex s);  ///< 1/Gamma(s), entire

Complex zeta(Complex s);
Complex xi(Complex s);

/// Gamma(s, y) for real y > 0.
Complex inc_gamma_upper(Complex s, double y);
/// gamma(s, y) = int_0^y e^{-t} t^{s-1} dt for real y > 0, Re s > 0 or s
/// off the non-positive integers.
Complex inc_gamma_lower(Complex s, double y);
/// Gamma(s, y1, y2) = int_{y1}^{y2} e^{-t} t^{s-1} dt, y1*y2 > 0.
Complex inc_gamma_generalized(Complex s, double y1, double y2);

enum class Hyp1f1Regime { Series, KummerSeries, IncompleteGamma, Asymptotic };

struct Hyp1f1Value {
  Complex value;
  Hyp1f1Regime regime;
};

/// 1F1(s; s+1; y).
Hyp1f1Value hyp1f1_s_splus1(Complex s, Complex y, const SeriesBudget& budget = {});

/// 2F1(w, w; 2w; x) for 0 < x < 1.
Complex hyp2f1_ww2w(Complex w, double x);
/// 2F1(a, b; a + b + m; x) for integer m >= 0 and 0 <= x < 1: Gauss series
/// for x <= 0.8, logarithmic connection at 1 - x beyond.
Complex hyp2f1_integer_excess(Complex a, Complex b, int m, double x);

/// Li_ell(e^{2 pi i x}) for integer ell >= 1 and x not an integer.
Complex polylog(int ell, double x);

Complex rising_factorial(Complex a, int ell);

/// Exact Bernoulli number B_k (B_1 = -1/2) as a double, 0 <= k <= 32.
double bernoulli(int k);
/// B_k for all k >= 0, exact table up to 32 and zeta-based beyond.
double bernoulli_any(int k);
/// Exact rational B_k = numerator / denominator, 0 <= k <= 32.
struct Rational {
  std::int64_t num;
  std::int64_t den;
};
Rational bernoulli_rational(int k);

/// sigma_ell(n) = sum_{d | n} d^ell; throws OverflowError rather than wrap.
std::uint64_t divisor_sigma(int ell, std::uint64_t n);

}  // namespace glf::specfun
