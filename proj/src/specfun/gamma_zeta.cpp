#include <array>
#include <cmath>

#include "glf/specfun.hpp"

namespace glf::specfun {
namespace {

bool is_nonpositive_integer(Complex s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

// Stirling series for log Gamma(w), valid for |w| >= 15 with Re w > 0.
Complex log_gamma_stirling(Complex w) {
  static const std::array<double, 10> coeff = [] {
    std::array<double, 10> c{};
    for (int k = 1; k <= 10; ++k) c[k - 1] = bernoulli(2 * k) / (2.0 * k * (2.0 * k - 1.0));
    return c;
  }();
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex series{};
  Complex p = inv;
  for (double c : coeff) {
    series += c * p;
    p *= inv2;
  }
  return (w - 0.5) * std::log(w) - w + 0.5 * std::log(kTwoPi) + series;
}

// Shift count n with |s + n| >= 15 and Re(s + n) >= 15.
int stirling_shift(Complex s) { return std::max(0, static_cast<int>(std::ceil(15.0 - s.real()))); }

}  // namespace

Complex gamma(Complex s) {
  if (is_nonpositive_integer(s)) throw PoleError("gamma: pole at non-positive integer");
  if (s.real() < 0.5) return checked(kPi / (std::sin(kPi * s) * gamma(1.0 - s)), "gamma");
  const int n = stirling_shift(s);
  Complex prod = 1.0;
  for (int k = 0; k < n; ++k) prod *= (s + static_cast<double>(k));
  return checked(std::exp(log_gamma_stirling(s + static_cast<double>(n))) / prod, "gamma");
}

Complex rgamma(Complex s) {
  if (is_nonpositive_integer(s)) return 0.0;
  if (s.real() < 0.5) return std::sin(kPi * s) * gamma(1.0 - s) / kPi;
  return 1.0 / gamma(s);
}

Complex log_gamma(Complex s) {
  if (is_nonpositive_integer(s)) throw PoleError("log_gamma: pole at non-positive integer");
  if (s.real() < 0.5) return std::log(kPi) - std::log(std::sin(kPi * s)) - log_gamma(1.0 - s);
  const int n = stirling_shift(s);
  Complex logs{};
  for (int k = 0; k < n; ++k) logs += std::log(s + static_cast<double>(k));
  return log_gamma_stirling(s + static_cast<double>(n)) - logs;
}

Complex digamma(Complex s) {
  if (is_nonpositive_integer(s)) throw PoleError("digamma: pole at non-positive integer");
  if (s.real() < 0.5) return digamma(1.0 - s) - kPi / std::tan(kPi * s);
  const int n = stirling_shift(s);
  Complex acc{};
  for (int k = 0; k < n; ++k) acc -= 1.0 / (s + static_cast<double>(k));
  const Complex w = s + static_cast<double>(n);
  const Complex inv2 = 1.0 / (w * w);
  Complex p = inv2;
  Complex series{};
  for (int k = 1; k <= 10; ++k) {
    series += bernoulli(2 * k) / (2.0 * k) * p;
    p *= inv2;
  }
  return acc + std::log(w) - 0.5 / w - series;
}

Complex zeta(Complex s) {
  if (s == Complex(1.0, 0.0)) throw PoleError("zeta: pole at s = 1");
  if (s.real() < 0.0) {
    // Functional equation; zeta(1 - s) lies in Re > 1.
    const Complex one_minus = 1.0 - s;
    return checked(std::pow(2.0, s) * std::pow(kPi, s - 1.0) * std::sin(0.5 * kPi * s) *
                       gamma(one_minus) * zeta(one_minus),
                   "zeta");
  }
  // Euler-Maclaurin with 8 Bernoulli corrections.
  const int n_cut = static_cast<int>(std::ceil(std::abs(s))) + 10;
  Complex sum{};
  for (int n = n_cut - 1; n >= 1; --n) sum += std::exp(-s * std::log(static_cast<double>(n)));
  const double log_n = std::log(static_cast<double>(n_cut));
  const Complex n_pow = std::exp(-s * log_n);  // N^{-s}
  sum += n_pow * static_cast<double>(n_cut) / (s - 1.0) + 0.5 * n_pow;
  Complex rising = s;  // (s)_{2k-1}
  Complex n_factor = n_pow / static_cast<double>(n_cut);  // N^{-s-2k+1}
  double fact = 2.0;  // (2k)!
  for (int k = 1; k <= 8; ++k) {
    sum += bernoulli(2 * k) / fact * rising * n_factor;
    rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
    n_factor /= static_cast<double>(n_cut) * n_cut;
    fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
  }
  return checked(sum, "zeta");
}

Complex xi(Complex s) {
  if (s.real() < 0.5) return xi(1.0 - s);
  const Complex pre = 0.5 * std::exp(-0.5 * s * std::log(kPi)) * s * gamma(0.5 * s);
  const Complex d = s - 1.0;
  if (std::abs(d) < 1e-5) {
    // (s-1) zeta(s) = 1 + gamma_E (s-1) - gamma_1 (s-1)^2 + ...
    constexpr double euler_gamma = 0.57721566490153286061;
    constexpr double stieltjes_1 = -0.07281584548367672486;
    return pre * (1.0 + euler_gamma * d - stieltjes_1 * d * d);
  }
  return checked(pre * d * zeta(s), "xi");
}

}  // namespace glf::specfun
