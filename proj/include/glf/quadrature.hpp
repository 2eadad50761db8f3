#pragma once

// Globally adaptive Gauss-Kronrod (10/21) integration of complex integrands
// over finite intervals. Panels are bisected in order of largest error; the
// final sum is taken in panel order so the result is independent of the
// refinement history.

#include <functional>
#include <span>
#include <vector>

#include "glf/types.hpp"

namespace glf::quad {

using Integrand = std::function<Complex(double)>;

struct Options {
  double abs_tol = 1e-14;
  double rel_tol = 1e-13;
  int max_subdiv = 4000;
};

struct Result {
  Complex value{};
  double err_est = 0.0;
  int subdivisions = 0;
  int evaluations = 0;
  bool converged = false;
};

/// Integrates f over [a, b]; `breaks` are extra interior points that start a
/// separate panel (used to seed refinement near a near-pole).
Result integrate(const Integrand& f, double a, double b, const Options& opt = {},
                 std::span<const double> breaks = {});

/// Same as integrate() but throws AccuracyError if the tolerance is missed.
Result integrate_or_throw(const Integrand& f, double a, double b, const Options& opt = {},
                          std::span<const double> breaks = {});

}  // namespace glf::quad
