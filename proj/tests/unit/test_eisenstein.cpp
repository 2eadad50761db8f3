#include <cmath>

#include "glf/eisenstein.hpp"
#include "glf/modforms.hpp"
#include "golden.hpp"
#include "support.hpp"

using namespace glf;
using namespace glf::eisenstein;
using modforms::UnimodularMatrix;

TEST_CASE("E_0(w) against its Fourier expansion") {
  CHECK_REL(eval_E_realanalytic(0, 1.5, HalfPlanePoint(0.0, 1.0)).value, golden::E0_1p5_i, 1e-5);
  CHECK_REL(eval_E_realanalytic(0, 1.5, HalfPlanePoint(0.2, 1.3)).value, golden::E0_1p5_0p2_1p3, 1e-5);
}

TEST_CASE("lattice radius convergence") {
  const HalfPlanePoint tau(0.2, 1.3);
  const Complex a = eval_E_realanalytic(0, 1.5, tau, {40, 1e-3}).value;
  const Complex b = eval_E_realanalytic(0, 1.5, tau, {80, 1e-3}).value;
  const Complex c = eval_E_realanalytic(0, 1.5, tau, {160, 1e-3}).value;
  CHECK(std::abs(c - b) <= std::abs(b - a));
  CHECK(std::abs(c - b) <= 1e-6);
  CHECK(lattice_tail_bound(0, 1.5, 1.3, 80) < lattice_tail_bound(0, 1.5, 1.3, 40));
}

TEST_CASE("modularity of E_k(w)") {
  const HalfPlanePoint tau(0.31, 0.83);
  const UnimodularMatrix g(2, 1, 1, 1);
  for (int k : {0, 2}) {
    const auto f = [k](const HalfPlanePoint& t) { return eval_E_realanalytic(k, 1.5, t).value; };
    CHECK_REL(modforms::slash(f, k, g, tau), f(tau), 1e-6);
  }
}

TEST_CASE("E_2(w) growth coefficient") {
  // E_2(w; it) - t^w ~ c t^{-w-1}
  const double w = 1.5;
  const double t = 8.0;
  const Complex e = eval_E_realanalytic(2, w, HalfPlanePoint(0.0, t)).value;
  const Complex coeff = (e - std::pow(t, w)) * std::pow(t, w + 1.0);
  CHECK_REL(coeff, golden::E2_growth_coeff_1p5, 1e-3);
}

TEST_CASE("Maass operators") {
  const HalfPlanePoint tau(0.1, 1.2);
  const double w = 1.7;
  const auto vw = [w](const HalfPlanePoint& t) { return Complex(std::pow(t.v(), w)); };
  const auto one = [](const HalfPlanePoint&) { return Complex(1.0); };
  CHECK_REL(raise(0, vw, tau, default_step(tau)), Complex(w * std::pow(tau.v(), w - 1.0)), 1e-8);
  CHECK_REL(raise(2, one, tau, default_step(tau)), Complex(2.0 / tau.v()), 1e-10);
  CHECK_REL(hyperbolic_laplacian(0, vw, tau, 1e-2 * tau.v()), Complex(w * (1.0 - w) * std::pow(tau.v(), w)), 1e-7);
  CHECK_THROWS_AS(raise(0, vw, tau, 2.0), StepError);

  SUBCASE("E_0 is a Laplace eigenfunction and R_0 E_0(w) = w E_2(w - 1)") {
    const Complex ww = 1.5;
    const auto e0 = [ww](const HalfPlanePoint& t) { return eval_E_realanalytic(0, ww, t).value; };
    const Complex lap = hyperbolic_laplacian(0, e0, tau, 1e-2 * tau.v());
    CHECK_REL(lap, ww * (1.0 - ww) * e0(tau), 1e-4);
    const Complex r = raise(0, e0, tau, default_step(tau), 1e-3);
    CHECK_REL(r, ww * eval_E_realanalytic(2, ww - 1.0, tau).value, 1e-4);
  }
}

TEST_CASE("residue of E_0 at w = 1") {
  const HalfPlanePoint z(0.2, 1.3);
  CHECK(residue_E0_at_1(z) == doctest::Approx(3.0 / kPi));
  const auto r = residue_E0_estimate(z);
  CHECK_REL(r.extrapolated, Complex(r.exact), 5e-2);
}

TEST_CASE("domain errors") {
  const HalfPlanePoint tau(0.0, 1.0);
  CHECK_THROWS_AS(eval_E_realanalytic(0, 0.9, tau), DomainError);
  CHECK_THROWS_AS(eval_E_realanalytic(3, 1.5, tau), ParameterError);
  CHECK_THROWS_AS(eval_E_realanalytic(0, 1.05, tau, {5, 1e-12}), ConvergenceError);
}
