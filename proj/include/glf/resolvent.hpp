#pragma once

// Resolvent kernel G_w(z, tau) = sum_{M in PSL2(Z)} g_w(Mz, tau) and its
// tau-derivative calG_w = (1/2i) R_{0,tau} G_w = d/dtau G_w.

#include <vector>

#include "glf/eisenstein.hpp"
#include "glf/modforms.hpp"

namespace glf::resolvent {

using modforms::HalfPlanePoint;
using modforms::UnimodularMatrix;

struct HyperbolicDistanceData {
  double cosh_d;
  double x_arg;  ///< 2 / (1 + cosh d) = 4 v y / |z - conj(tau)|^2
};
HyperbolicDistanceData hyperbolic_distance(const HalfPlanePoint& z, const HalfPlanePoint& tau);

/// g_w(z, tau) = -Gamma(w)^2/Gamma(2w) x^w 2F1(w, w; 2w; x).
Complex gw(Complex w, const HalfPlanePoint& z, const HalfPlanePoint& tau);
/// d/dtau g_w(z, tau) in closed form.
Complex dgw(Complex w, const HalfPlanePoint& z, const HalfPlanePoint& tau);

struct PointPairKernelTerm {
  UnimodularMatrix matrix;
  Complex value;
  Complex raised_value;  ///< (1/2i) R_{0,tau} g_w(Mz, tau)
};
PointPairKernelTerm kernel_term(Complex w, const UnimodularMatrix& m, const HalfPlanePoint& z,
                                const HalfPlanePoint& tau);

/// Cosets c^2 + d^2 <= radius^2 of Gamma_inf \ PSL2(Z) acting on z are each
/// summed over all translations. The remaining cosets contribute through the
/// leading small-Im(Mz) behaviour, which is a multiple of the tail of
/// E_0(w; z). The radius keeps its meaning as a coset radius.
struct ResolventTruncation {
  int radius = 80;
  int translations = 24;  ///< direct translations per coset before the asymptotic tail
  double tolerance = 1e-2;
  double orbit_floor = 1e-6;  ///< OrbitProximityError when x_arg > 1 - floor
};

EvalResult Gw_truncated(Complex w, const HalfPlanePoint& z, const HalfPlanePoint& tau,
                        const ResolventTruncation& tr = {});
EvalResult calGw(Complex w, const HalfPlanePoint& z, const HalfPlanePoint& tau,
                 const ResolventTruncation& tr = {});

/// Lagrange extrapolation in w of f(w_i) to w = 1.
Complex extrapolate_to_one(const std::vector<Complex>& ws, const std::vector<Complex>& values);

struct PropDGsReport {
  std::vector<Complex> ladder;
  std::vector<Complex> values;
  Complex extrapolated;
  Complex expected;  ///< -2 pi i (H_z(tau) - E2hat(tau))
  double rel_deviation;
};
PropDGsReport verify_prop_dGs(const HalfPlanePoint& z, const HalfPlanePoint& tau,
                              const std::vector<Complex>& w_ladder = {1.5, 1.25, 1.125},
                              const ResolventTruncation& tr = {});

}  // namespace glf::resolvent
