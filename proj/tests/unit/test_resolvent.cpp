#include <cmath>

#include "glf/eisenstein.hpp"
#include "glf/modforms.hpp"
#include "glf/resolvent.hpp"
#include "glf/specfun.hpp"
#include "support.hpp"

using namespace glf;
using namespace glf::resolvent;

TEST_CASE("point-pair kernel") {
  const HalfPlanePoint z(0.2, 1.4);
  const HalfPlanePoint tau(-0.3, 0.8);
  CHECK_REL(gw(1.6, z, tau), gw(1.6, tau, z), 1e-14);

  // g_1 = log(1 - x)
  const double x = hyperbolic_distance(z, tau).x_arg;
  CHECK_REL(gw(1.0, z, tau), Complex(std::log1p(-x)), 1e-12);
  CHECK(x == doctest::Approx(4.0 * z.v() * tau.v() / std::norm(z.value() - std::conj(tau.value()))));

  // invariant under simultaneous action
  const UnimodularMatrix g(1, 2, 1, 3);
  CHECK_REL(gw(1.6, g.apply(z), g.apply(tau)), gw(1.6, z, tau), 1e-12);

  // closed-form tau-derivative
  const double h = 1e-5;
  const Complex fd = (gw(1.6, z, HalfPlanePoint(tau.u() + h, tau.v())) - gw(1.6, z, HalfPlanePoint(tau.u() - h, tau.v()))) /
                     (2.0 * h);
  const Complex fv = (gw(1.6, z, HalfPlanePoint(tau.u(), tau.v() + h)) - gw(1.6, z, HalfPlanePoint(tau.u(), tau.v() - h))) /
                     (2.0 * h);
  CHECK_REL(dgw(1.6, z, tau), 0.5 * (fd - kI * fv), 1e-8);
  CHECK_THROWS_AS(gw(1.6, z, z), SingularityError);
}

TEST_CASE("G_w") {
  const HalfPlanePoint z(0.27, 1.31);
  const HalfPlanePoint tau(-0.12, 1.05);
  const Complex w = 2.0;
  const Complex g = Gw_truncated(w, z, tau).value;

  const auto S = UnimodularMatrix::S();
  const auto T = UnimodularMatrix::T();
  CHECK_REL(Gw_truncated(w, T.apply(z), tau).value, g, 1e-10);
  CHECK_REL(Gw_truncated(w, S.apply(z), tau).value, g, 1e-8);
  CHECK_REL(Gw_truncated(w, z, S.apply(tau)).value, g, 1e-8);

  const Complex wide = Gw_truncated(w, z, tau, {120, 24, 1e-2, 1e-6}).value;
  CHECK_REL(Gw_truncated(w, z, tau, {60, 24, 1e-2, 1e-6}).value, wide, 1e-4);
  CHECK_THROWS_AS(Gw_truncated(0.9, z, tau), DomainError);
}

TEST_CASE("calG_w") {
  const HalfPlanePoint z(0.27, 1.31);
  const HalfPlanePoint tau(-0.12, 1.05);
  const Complex w = 1.8;
  const auto G = [&](const HalfPlanePoint& t) { return calGw(w, z, t).value; };

  // weight two in tau
  const auto S = UnimodularMatrix::S();
  CHECK_REL(modforms::slash(G, 2, S, tau), G(tau), 1e-7);

  // d/dtau G_w
  const double h = 1e-4;
  const auto Gt = [&](double du, double dv) {
    return Gw_truncated(w, z, HalfPlanePoint(tau.u() + du, tau.v() + dv)).value;
  };
  const Complex fd = 0.5 * ((Gt(h, 0) - Gt(-h, 0)) - kI * (Gt(0, h) - Gt(0, -h))) / (2.0 * h);
  CHECK_REL(G(tau), fd, 1e-6);

  // eigenfunction of the weight-two Laplacian in tau with eigenvalue w(1 - w)
  const double step = 1e-2 * tau.v();
  const Complex l1 = eisenstein::laplacian_stencil(2, G, tau, step);
  const Complex l2 = eisenstein::laplacian_stencil(2, G, tau, step / 2);
  CHECK_REL((4.0 * l2 - l1) / 3.0, w * (1.0 - w) * G(tau), 1e-2);
}

TEST_CASE("extrapolation to w = 1") {
  const std::vector<Complex> ws{1.5, 1.25, 1.125};
  std::vector<Complex> vals;
  for (auto w : ws) vals.push_back(3.0 + 2.0 * (w - 1.0) - (w - 1.0) * (w - 1.0));
  CHECK_REL(extrapolate_to_one(ws, vals), Complex(3.0), 1e-13);
  CHECK_THROWS_AS(extrapolate_to_one(ws, {1.0}), ParameterError);
}
