#include <cmath>
#include <limits>

#include "glf/specfun.hpp"

namespace glf::specfun {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSeriesRadius = 40.0;

bool is_nonpositive_integer(Complex s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

struct SeriesSum {
  Complex sum;
  double max_term;
};

// sum_n s/(s+n) y^n/n!
SeriesSum kummer_direct(Complex s, Complex y, const SeriesBudget& budget) {
  Complex power = 1.0;  // y^n / n!
  Complex sum = 1.0;
  double max_term = 1.0;
  for (int n = 1; n < budget.max_terms; ++n) {
    power *= y / static_cast<double>(n);
    const Complex term = power * s / (s + static_cast<double>(n));
    sum += term;
    max_term = std::max(max_term, std::abs(term));
    if (std::abs(term) <= budget.rel_tol * 1e-2 * std::abs(sum) && n > std::abs(y)) break;
  }
  return {sum, max_term};
}

// e^y 1F1(1; s+1; -y) = e^y sum_n (-y)^n / (s+1)_n
SeriesSum kummer_transformed(Complex s, Complex y, const SeriesBudget& budget) {
  Complex term = 1.0;
  Complex sum = 1.0;
  double max_term = 1.0;
  for (int n = 1; n < budget.max_terms; ++n) {
    term *= -y / (s + static_cast<double>(n));
    sum += term;
    max_term = std::max(max_term, std::abs(term));
    if (std::abs(term) <= budget.rel_tol * 1e-2 * std::abs(sum) && n > std::abs(y)) break;
  }
  const Complex ey = std::exp(y);
  return {ey * sum, max_term * std::abs(ey)};
}

// Large |y|, Re y > 0: s e^y y^{-1} sum_j (1-s)_j y^{-j} (optimally
// truncated) plus the algebraic part Gamma(s+1) e^{+-i pi s} y^{-s}.
Complex asymptotic(Complex s, Complex y, double& tail) {
  Complex term = 1.0;
  Complex sum = 1.0;
  double last = 1.0;
  for (int j = 1; j < 400; ++j) {
    Complex next = term * (1.0 - s + static_cast<double>(j - 1)) / y;
    if (std::abs(next) >= last) break;
    term = next;
    sum += term;
    last = std::abs(term);
    if (last < kEps * 1e-2 * std::abs(sum)) break;
  }
  tail = last;
  // On the positive real axis (a Stokes line) the two sector phases average.
  const Complex phase = y.imag() > 0   ? std::exp(kI * kPi * s)
                        : y.imag() < 0 ? std::exp(-kI * kPi * s)
                                       : std::cos(kPi * s);
  const Complex algebraic = gamma(s + 1.0) * phase * std::exp(-s * std::log(y));
  return s * std::exp(y) / y * sum + algebraic;
}

}  // namespace

Hyp1f1Value hyp1f1_s_splus1(Complex s, Complex y, const SeriesBudget& budget) {
  budget.validate();
  if (is_nonpositive_integer(s)) throw DomainError("hyp1f1_s_splus1: s is a non-positive integer");
  if (y == Complex(0.0)) return {1.0, Hyp1f1Regime::Series};
  const double ay = std::abs(y);

  auto accept = [&](const SeriesSum& r, Hyp1f1Regime regime) -> Hyp1f1Value {
    const double loss = r.max_term / std::abs(r.sum) * kEps;
    if (!(loss <= budget.rel_tol * 1e3) && !(loss <= 1e-11))
      throw AccuracyError("hyp1f1_s_splus1: cancellation exceeds tolerance in series regime");
    return {checked(r.sum, "hyp1f1_s_splus1"), regime};
  };

  if (ay <= kSeriesRadius) {
    if (y.real() >= 0) return accept(kummer_direct(s, y, budget), Hyp1f1Regime::Series);
    return accept(kummer_transformed(s, y, budget), Hyp1f1Regime::KummerSeries);
  }
  if (y.imag() == 0.0 && y.real() < 0) {
    // 1F1(s; s+1; -x) = s x^{-s} gamma(s, x)
    const double x = -y.real();
    const Complex v = s * std::exp(-s * std::log(x)) * inc_gamma_lower(s, x);
    return {checked(v, "hyp1f1_s_splus1"), Hyp1f1Regime::IncompleteGamma};
  }
  if (y.real() > 0) {
    double tail = 0;
    const Complex v = asymptotic(s, y, tail);
    if (tail > std::max(budget.rel_tol, 1e-12))
      throw AccuracyError("hyp1f1_s_splus1: asymptotic regime cannot reach tolerance");
    return {checked(v, "hyp1f1_s_splus1"), Hyp1f1Regime::Asymptotic};
  }
  return accept(kummer_transformed(s, y, budget), Hyp1f1Regime::KummerSeries);
}

Complex hyp2f1_integer_excess(Complex a, Complex b, int m, double x) {
  if (m < 0) throw DomainError("hyp2f1_integer_excess: m must be non-negative");
  if (!(x >= 0.0 && x < 1.0)) throw DomainError("hyp2f1_integer_excess: need 0 <= x < 1");
  const Complex c = a + b + static_cast<double>(m);
  if (x <= 0.8) {
    Complex term = 1.0;
    Complex sum = 1.0;
    for (int n = 0; n < 5000; ++n) {
      term *= (a + static_cast<double>(n)) * (b + static_cast<double>(n)) /
              ((c + static_cast<double>(n)) * static_cast<double>(n + 1)) * x;
      sum += term;
      if (std::abs(term) < kEps * 1e-2 * std::abs(sum)) break;
    }
    return sum;
  }

  // Logarithmic connection formulas at 1 - x (integer c - a - b = m).
  const double one_minus = 1.0 - x;
  const double log1mx = std::log(one_minus);
  if (m == 0) {
    const Complex pre = gamma(a + b) * rgamma(a) * rgamma(b);
    Complex coeff = 1.0;  // (a)_n (b)_n / (n!)^2
    Complex psi1 = digamma(1.0);
    Complex psia = digamma(a);
    Complex psib = digamma(b);
    double power = 1.0;
    Complex sum{};
    for (int n = 0; n < 400; ++n) {
      const Complex term = coeff * (2.0 * psi1 - psia - psib - log1mx) * power;
      sum += term;
      if (n > 2 && std::abs(term) < kEps * 1e-2 * std::abs(sum)) break;
      const double dn = static_cast<double>(n);
      coeff *= (a + dn) * (b + dn) / ((dn + 1.0) * (dn + 1.0));
      psi1 += 1.0 / (dn + 1.0);
      psia += 1.0 / (a + dn);
      psib += 1.0 / (b + dn);
      power *= one_minus;
    }
    return pre * sum;
  }

  // m >= 1: finite part plus logarithmic series.
  const double dm = static_cast<double>(m);
  Complex finite{};
  {
    Complex coeff = 1.0;  // (a)_n (b)_n / (n! (1-m)_n)
    double power = 1.0;
    for (int n = 0; n < m; ++n) {
      finite += coeff * power;
      const double dn = static_cast<double>(n);
      coeff *= (a + dn) * (b + dn) / ((dn + 1.0) * (1.0 - dm + dn));
      power *= one_minus;
    }
    finite *= gamma(dm) * gamma(c) * rgamma(a + dm) * rgamma(b + dm);
  }
  Complex coeff = 1.0;  // (a+m)_n (b+m)_n / (n! (n+m)!)
  for (int k = 1; k <= m; ++k) coeff /= static_cast<double>(k);
  Complex psi1 = digamma(1.0);
  Complex psim = digamma(dm + 1.0);
  Complex psia = digamma(a + dm);
  Complex psib = digamma(b + dm);
  double power = 1.0;
  Complex sum{};
  for (int n = 0; n < 400; ++n) {
    const Complex term = coeff * (log1mx - psi1 - psim + psia + psib) * power;
    sum += term;
    if (n > 2 && std::abs(term) < kEps * 1e-2 * std::abs(sum)) break;
    const double dn = static_cast<double>(n);
    coeff *= (a + dm + dn) * (b + dm + dn) / ((dn + 1.0) * (dn + dm + 1.0));
    psi1 += 1.0 / (dn + 1.0);
    psim += 1.0 / (dn + dm + 1.0);
    psia += 1.0 / (a + dm + dn);
    psib += 1.0 / (b + dm + dn);
    power *= one_minus;
  }
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;  // (x-1)^m = (-1)^m (1-x)^m
  return finite - sign * std::pow(one_minus, m) * gamma(c) * rgamma(a) * rgamma(b) * sum;
}

Complex hyp2f1_ww2w(Complex w, double x) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("hyp2f1_ww2w: need 0 < x < 1");
  return hyp2f1_integer_excess(w, w, 0, x);
}

}  // namespace glf::specfun
