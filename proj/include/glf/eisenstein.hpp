#pragma once

// Real-analytic Eisenstein series E_k(w; tau) = sum over Gamma_inf \ SL2(Z)
// of v^w |_k gamma, plus finite-difference Maass operators.

#include <functional>

#include "glf/modforms.hpp"
#include "glf/types.hpp"

namespace glf::eisenstein {

using modforms::HalfPlanePoint;

/// Rows c <= radius of the coset sum are summed completely in d (direct
/// terms plus an asymptotic Euler-Maclaurin tail per residue class mod c).
/// Rows c > radius contribute their mean value, which is exact up to terms
/// of size e^{-2 pi v} radius^{1 - k - 2 Re w}.
struct LatticeTruncation {
  int radius = 60;
  double tolerance = 1e-3;  ///< ConvergenceError above this tail bound
};

/// Size of the neglected fluctuating part for rows beyond the radius.
double lattice_tail_bound(int k, Complex w, double v, int radius);

/// E_k(w; tau), k even >= 0; Re w > 1 for k = 0 and Re(2w) + k > 2 otherwise.
EvalResult eval_E_realanalytic(int k, Complex w, const HalfPlanePoint& tau,
                               const LatticeTruncation& tr = {});

/// lim_{w -> 1} (w - 1) E_0(w; z) = 3/pi.
double residue_E0_at_1(const HalfPlanePoint& z);

struct ResidueEstimate {
  double exact;
  Complex extrapolated;  ///< quadratic extrapolation of (w-1)E_0(w;z) from w = 1.3, 1.2, 1.1
};
ResidueEstimate residue_E0_estimate(const HalfPlanePoint& z, const LatticeTruncation& tr = {});

using Function = std::function<Complex(const HalfPlanePoint&)>;

inline double default_step(const HalfPlanePoint& tau) { return 1e-3 * tau.v(); }

/// R_k f = 2i d/dtau f + (k/v) f by central differences at h and h/2 with one
/// Richardson step. StepError if the two levels differ by more than rel_tol.
Complex raise(int k, const Function& f, const HalfPlanePoint& tau, double h, double rel_tol = 1e-4);

/// Five-point cross stencil of -v^2 (f_uu + f_vv) + i k v (f_u + i f_v) at
/// step h, no extrapolation.
Complex laplacian_stencil(int k, const Function& f, const HalfPlanePoint& tau, double h);

/// Stencil at h and h/2 combined by Richardson; StepError as in raise.
Complex hyperbolic_laplacian(int k, const Function& f, const HalfPlanePoint& tau, double h,
                             double rel_tol = 1e-3);

}  // namespace glf::eisenstein
