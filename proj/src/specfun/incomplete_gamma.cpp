#include <cmath>
#include <limits>

#include "glf/quadrature.hpp"
#include "glf/specfun.hpp"

namespace glf::specfun {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

Complex y_pow(double y, Complex s) { return std::exp(s * std::log(y)); }

// gamma(s, y) = y^s e^{-y} sum_n y^n / (s)_{n+1}.
Complex lower_series(Complex s, double y) {
  Complex term = 1.0 / s;
  Complex sum = term;
  for (int n = 1; n < 100000; ++n) {
    term *= y / (s + static_cast<double>(n));
    sum += term;
    if (std::abs(term) < kEps * std::abs(sum) && static_cast<double>(n) > y) break;
  }
  return y_pow(y, s) * std::exp(-y) * sum;
}

// Legendre continued fraction for Gamma(s, y) (modified Lentz).
Complex upper_cf(Complex s, double y) {
  constexpr double tiny = 1e-300;
  Complex b = y + 1.0 - s;
  Complex c = 1.0 / tiny;
  Complex d = 1.0 / b;
  Complex h = d;
  for (int i = 1; i < 200000; ++i) {
    const Complex an = -static_cast<double>(i) * (static_cast<double>(i) - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const Complex del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 4.0 * kEps) return std::exp(-y + s * std::log(y)) * h;
  }
  throw AccuracyError("inc_gamma_upper: continued fraction did not converge");
}

bool is_nonpositive_integer(Complex s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

// E_1(y) = Gamma(0, y).
double exp_integral_e1(double y) {
  if (y > 1.0) return upper_cf(0.0, y).real();
  constexpr double euler_gamma = 0.57721566490153286061;
  double sum = 0.0;
  double term = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= -y / k;
    sum += term / k;
    if (std::abs(term) < kEps * 1e-2) break;
  }
  return -euler_gamma - std::log(y) - sum;
}

}  // namespace

Complex inc_gamma_lower(Complex s, double y) {
  if (!(y > 0)) throw DomainError("inc_gamma_lower: y must be positive");
  if (is_nonpositive_integer(s)) throw PoleError("inc_gamma_lower: s is a non-positive integer");
  if (y > 1.5 && y > s.real() + 1.0) return gamma(s) - upper_cf(s, y);
  return lower_series(s, y);
}

Complex inc_gamma_upper(Complex s, double y) {
  if (!(y > 0)) throw DomainError("inc_gamma_upper: y must be positive");
  if (is_nonpositive_integer(s)) {
    // Downward recurrence Gamma(s, y) = (Gamma(s+1, y) - y^s e^{-y}) / s from E_1.
    const int m = static_cast<int>(-s.real());
    double g = exp_integral_e1(y);
    for (int k = 1; k <= m; ++k) g = (g - std::pow(y, -k) * std::exp(-y)) / static_cast<double>(-k);
    return g;
  }
  if (y > 1.5 && y > s.real() + 1.0) return checked(upper_cf(s, y), "inc_gamma_upper");
  return checked(gamma(s) - lower_series(s, y), "inc_gamma_upper");
}

Complex inc_gamma_generalized(Complex s, double y1, double y2) {
  if (!(y1 * y2 > 0)) throw DomainError("inc_gamma_generalized: y1 * y2 must be positive");
  if (y1 == y2) return 0.0;
  if (y1 > 0) return inc_gamma_upper(s, y1) - inc_gamma_upper(s, y2);
  // Negative branch: t = -tau and (-tau)^{s-1} on the principal branch give
  // e^{i pi s} int_{|y1|}^{|y2|} e^{tau} tau^{s-1} dtau.
  const double a = -y1;
  const double b = -y2;
  auto f = [s](double tau) { return std::exp(tau + (s - 1.0) * std::log(tau)); };
  quad::Options opt;
  opt.abs_tol = 0.0;
  opt.rel_tol = 1e-14;
  const auto r = quad::integrate(f, std::min(a, b), std::max(a, b), opt);
  const Complex v = (a < b ? 1.0 : -1.0) * r.value;
  return checked(std::exp(kI * kPi * s) * v, "inc_gamma_generalized");
}

}  // namespace glf::specfun
