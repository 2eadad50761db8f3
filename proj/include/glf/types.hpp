#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <string>

#include "glf/errors.hpp"

namespace glf {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Throws AccuracyError if a NaN/Inf is about to escape `where`.
inline Complex checked(Complex z, const char* where) {
  if (!is_finite(z)) throw AccuracyError(std::string(where) + ": non-finite result");
  return z;
}

/// Budget for truncated series.
struct SeriesBudget {
  int max_terms = 100000;
  double abs_tol = 1e-300;
  double rel_tol = 1e-15;

  void validate() const {
    if (max_terms < 1 || !(abs_tol > 0) || !(rel_tol > 0))
      throw ParameterError("SeriesBudget: max_terms >= 1 and positive tolerances required");
  }
};

/// A value with a propagated error estimate and free-form diagnostics
/// (truncation radii, subdivision counts, regimes).
struct EvalResult {
  Complex value{};
  double err_est = 0.0;
  std::map<std::string, double> diagnostics;
};

}  // namespace glf
