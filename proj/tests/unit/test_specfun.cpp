#include <cmath>

#include "glf/quadrature.hpp"
#include "glf/specfun.hpp"
#include "golden.hpp"
#include "support.hpp"

using namespace glf;
using namespace glf::specfun;

namespace {
Complex cpow(double t, Complex e) { return std::exp(e * std::log(t)); }
}  // namespace

TEST_CASE("gamma") {
  CHECK_REL(specfun::gamma(1.0), Complex(1.0), 1e-13);
  CHECK_REL(specfun::gamma(0.5), Complex(std::sqrt(kPi)), 1e-13);
  CHECK_REL(specfun::gamma({1.5, 0.5}), golden::gamma_1p5_0p5i, 1e-12);
  CHECK_REL(specfun::gamma({-2.5, 0.0}), Complex(-8.0 * std::sqrt(kPi) / 15.0), 1e-13);
  CHECK_REL(specfun::gamma({4.2, -7.0}) * rgamma({4.2, -7.0}), Complex(1.0), 1e-12);
  CHECK_THROWS_AS(specfun::gamma(-3.0), PoleError);
  CHECK(std::abs(rgamma(-3.0)) == 0.0);
}

TEST_CASE("zeta") {
  CHECK_REL(zeta(2.0), Complex(kPi * kPi / 6.0), 1e-14);
  CHECK_REL(zeta(0.0), Complex(-0.5), 1e-14);
  CHECK_REL(zeta(0.5), golden::zeta_0p5, 1e-12);
  CHECK_REL(zeta({0.7, -3.0}), golden::zeta_0p7_m3i, 1e-12);
  CHECK_REL(zeta(-1.0), Complex(-1.0 / 12.0), 1e-13);
  CHECK(std::abs(zeta(-2.0)) < 1e-15);
  CHECK_THROWS_AS(zeta(1.0), PoleError);
}

TEST_CASE("xi") {
  const Complex s(0.3, 2.0);
  CHECK_REL(xi(s), xi(1.0 - s), 1e-11);
  CHECK_REL(xi(s), golden::xi_0p3_2i, 1e-11);
  CHECK(std::abs(xi(0.5).imag()) <= 1e-13);
  CHECK_REL(xi(2.0), Complex(kPi / 6.0), 1e-14);
}

TEST_CASE("incomplete gamma") {
  for (double y : {0.1, 1.0, 7.5, 40.0}) CHECK_REL(inc_gamma_upper(1.0, y), Complex(std::exp(-y)), 1e-13);
  CHECK_REL(inc_gamma_upper({0.7, 0.2}, 1.5), golden::inc_gamma_upper_0p7_0p2i_1p5, 1e-10);

  SUBCASE("large-y expansion at s = 2.3, y = 30, N = 3") {
    const Complex s = 2.3;
    const double y = 30.0;
    const Complex g = inc_gamma_upper(s, y) / (std::pow(y, 1.3) * std::exp(-y));
    Complex sum = 0.0;
    for (int l = 0; l < 3; ++l) sum += rising_factorial(s - static_cast<double>(l), l) * std::pow(y, -l);
    const double next = std::abs(rising_factorial(s - 3.0, 3)) * std::pow(y, -3);
    CHECK(std::abs(g - sum) <= 2.0 * next);
  }

  SUBCASE("generalized") {
    CHECK(std::abs(inc_gamma_generalized(1.4, 2.0, 2.0)) == 0.0);
    CHECK_REL(inc_gamma_generalized(2.0, 1.0, 2.0), Complex(2.0 * std::exp(-1.0) - 3.0 * std::exp(-2.0)), 1e-13);
    const Complex s = 1.4;
    const Complex rhs = cpow(3.0, s) / s * hyp1f1_s_splus1(s, -3.0).value -
                        cpow(0.5, s) / s * hyp1f1_s_splus1(s, -0.5).value;
    CHECK(std::abs(inc_gamma_generalized(s, 0.5, 3.0) - rhs) <= 1e-10);
    CHECK_THROWS_AS(inc_gamma_generalized(s, -1.0, 1.0), DomainError);
  }

  SUBCASE("lower plus upper") {
    const Complex s(2.2, 1.3);
    CHECK_REL(inc_gamma_lower(s, 3.7) + inc_gamma_upper(s, 3.7), specfun::gamma(s), 1e-12);
  }
}

TEST_CASE("1F1(s; s + 1; y)") {
  CHECK_REL(hyp1f1_s_splus1(0.8, 0.0).value, Complex(1.0), 1e-15);
  CHECK_REL(hyp1f1_s_splus1(0.8, 5.0).value, golden::hyp1f1_0p8_5, 1e-11);

  SUBCASE("large-y expansion at s = 1.5, y = 60") {
    const Complex s = 1.5;
    const double y = 60.0;
    const Complex f = hyp1f1_s_splus1(s, y).value / (s * std::exp(y) / y);
    Complex sum = 0.0;
    for (int j = 0; j <= 3; ++j) sum += rising_factorial(1.0 - s, j) * std::pow(y, -j);
    const double next = std::abs(rising_factorial(1.0 - s, 4)) * std::pow(y, -4);
    CHECK(std::abs(f - sum) <= 2.0 * next);
  }

  CHECK_THROWS_AS(hyp1f1_s_splus1(-2.0, 1.0), DomainError);
}

TEST_CASE("2F1(w, w; 2w; x)") {
  CHECK_REL(hyp2f1_ww2w(1.3, 1e-12), Complex(1.0), 1e-11);
  CHECK_REL(hyp2f1_ww2w(1.0, 0.5), Complex(2.0 * std::log(2.0)), 1e-14);
  CHECK_REL(hyp2f1_ww2w(1.5, 0.9), golden::hyp2f1_1p5_0p9, 1e-9);
  // across the switch between the Gauss series and the connection formula
  for (double x : {0.79, 0.8, 0.81, 0.99, 0.999999})
    CHECK_REL(hyp2f1_ww2w(1.0, x), Complex(-std::log1p(-x) / x), 1e-12);
  CHECK_THROWS_AS(hyp2f1_ww2w(1.0, 1.0), DomainError);
}

TEST_CASE("polylog on the unit circle") {
  const double x = 0.3;
  const Complex e = std::exp(kTwoPi * kI * x);
  const Complex li1 = polylog(1, x);
  CHECK_REL(li1, -std::log(1.0 - e), 1e-14);
  CHECK_ABS(li1.imag(), -std::arg(1.0 - e), 1e-14);
  CHECK_REL(polylog(2, 0.5), Complex(-kPi * kPi / 12.0), 1e-14);
  CHECK_REL(polylog(2, x), golden::li2_0p3, 1e-12);
  CHECK_REL(polylog(3, x), golden::li3_0p3, 1e-11);
  for (int ell : {1, 3, 5}) CHECK(std::abs(polylog(ell, 0.5).imag()) <= 1e-15);
  CHECK_THROWS_AS(polylog(2, 3.0), BranchError);
  CHECK_THROWS_AS(polylog(0, 0.3), DomainError);
}

TEST_CASE("rising factorial") {
  CHECK(rising_factorial({2.7, -1.0}, 0) == Complex(1.0));
  CHECK_REL(rising_factorial(2.0, 3), Complex(24.0), 1e-15);
  const double s = 1.7;
  const int ell = 3;
  CHECK_REL(rising_factorial(s + 1.0 - ell, ell - 1), std::pow(-1.0, ell + 1) * rising_factorial(1.0 - s, ell - 1),
            1e-14);
  CHECK_THROWS_AS(rising_factorial(1.0, -1), DomainError);
}

TEST_CASE("divisor sums") {
  CHECK(divisor_sigma(1, 1) == 1);
  CHECK(divisor_sigma(1, 6) == 12);
  CHECK(divisor_sigma(3, 10) == 1134);
  CHECK(divisor_sigma(0, 12) == 6);
  CHECK_THROWS_AS(divisor_sigma(1, 0), DomainError);
}

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(0) == 1.0);
  CHECK(bernoulli(1) == -0.5);
  CHECK(bernoulli(2) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(bernoulli(12) == doctest::Approx(-691.0 / 2730.0).epsilon(1e-15));
  CHECK(bernoulli(13) == 0.0);
  // B_k = -k zeta(1 - k)
  CHECK(bernoulli_any(40) == doctest::Approx(-40.0 * zeta(-39.0).real()).epsilon(1e-12));
}

TEST_CASE("adaptive quadrature") {
  const auto r = quad::integrate([](double t) { return Complex(std::cos(t), std::sin(3 * t)); }, 0.0, 2.0);
  CHECK(r.converged);
  CHECK_REL(r.value, Complex(std::sin(2.0), (1.0 - std::cos(6.0)) / 3.0), 1e-14);
  // integrable endpoint singularity
  const auto s = quad::integrate([](double t) { return Complex(1.0 / std::sqrt(t)); }, 0.0, 1.0, {1e-12, 1e-12, 4000});
  CHECK_ABS(s.value.real(), 2.0, 1e-9);
  // break points outside the interval are ignored
  const double br[] = {-1.0, 0.5, 7.0};
  const auto b = quad::integrate([](double t) { return Complex(t * t); }, 0.0, 1.0, {}, br);
  CHECK_REL(b.value, Complex(1.0 / 3.0), 1e-15);
  CHECK_THROWS_AS(quad::integrate_or_throw([](double t) { return Complex(1.0 / t); }, 0.0, 1.0, {1e-14, 1e-14, 50}),
                  AccuracyError);
}
