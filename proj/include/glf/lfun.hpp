#pragma once

// Regularized Mellin transforms along the imaginary axis: L(E2hat, s), the
// H_z integrals, the generalized L-function L_z(s), the general-w family
// I_{w,s}(z) and the large-y limit experiment.

#include <vector>

#include "glf/modforms.hpp"
#include "glf/resolvent.hpp"

namespace glf::lfun {

using modforms::HalfPlanePoint;

struct QuadratureSpec {
  double t0 = 1.0;
  double abs_tol = 1e-13;
  double rel_tol = 1e-12;
  int max_subdiv = 4000;
  /// Upper truncation for integrals to infinity; <= 0 picks the default
  /// y + 3 + log(1 + |J(z)|) / (2 pi), extended until the analytic tail
  /// bound is below abs_tol.
  double tail_T = 0.0;
  bool near_pole_refine = true;

  void validate() const;
};

/// L(E2hat, s) for s not in {0, 1, 2}.
EvalResult L_E2hat(Complex s, const QuadratureSpec& q = {});
/// -24 (2 pi)^{-s} Gamma(s) zeta(s) zeta(s - 1).
Complex L_E2hat_closed_form(Complex s);

enum class Branch { AtZero, AtInfinity };

/// AtZero: int_{y1}^{y2} (H_z(it) + 1/t^2) t^{s-1} dt.
/// AtInfinity: int_{y1}^{y2} (H_z(it) - 1) t^{s-1} dt; y2 may be +infinity.
/// Pieces with t < 1 are mapped to t > 1 by t -> 1/t.
EvalResult J_integral(const HalfPlanePoint& z, Complex s, Branch branch, double y1, double y2,
                      const QuadratureSpec& q = {});

/// L_z(s) for z off the singular set and s not in {0, 1, 2}.
EvalResult L_z(const HalfPlanePoint& z, Complex s, const QuadratureSpec& q = {});

/// I_{w,s}(z) with calG_w from the resolvent sum; at w = 1 defers to L_z.
EvalResult I_ws(const HalfPlanePoint& z, Complex w, Complex s, double t0,
                const resolvent::ResolventTruncation& tr = {}, const QuadratureSpec& q = {});

/// Direct quadrature of int_0^inf calG_w(z, it) t^{s-1} dt (for large Re w).
EvalResult L_z_w_direct(const HalfPlanePoint& z, Complex w, Complex s,
                        const resolvent::ResolventTruncation& tr = {}, const QuadratureSpec& q = {});

/// r_z(tau) = |(tau - z) / (tau - conj z)|
double r_weight(const HalfPlanePoint& z, const HalfPlanePoint& tau);

/// L_z(w, s0; s) = int_0^inf calG_w(z,it) r_z(it)^{s0} r_z(i/t)^{s0} t^{s-1} dt.
EvalResult L_z_general(const HalfPlanePoint& z, Complex w, Complex s0, Complex s,
                       const resolvent::ResolventTruncation& tr = {}, const QuadratureSpec& q = {});

struct CorrectionCoefficients {
  Complex s;
  double x;
  std::vector<Complex> C;  ///< index l = 0 .. floor(Re s)
};
CorrectionCoefficients correction_coefficients(Complex s, double x);

struct LimitReport {
  Complex s;
  double x;
  std::vector<double> y;
  std::vector<Complex> Lz;
  std::vector<Complex> residual;  ///< R(y) after subtracting the y-power terms
  double alpha1, alpha2;          ///< fitted decay exponents
  Complex A, B, C;                ///< R(y) ~ A + B y^{-alpha1} + C y^{-alpha2}
  Complex target;                 ///< -24 i (2 pi)^{1-s} Gamma(s) zeta(s) zeta(s-1)
  double rel_error;
};
LimitReport limit_experiment(Complex s, double x, const std::vector<double>& y_ladder,
                             const QuadratureSpec& q = {});

}  // namespace glf::lfun
