#pragma once

#include <complex>
#include <doctest.h>

inline double rel_err(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

#define CHECK_REL(a, b, tol) CHECK(rel_err((a), (b)) <= (tol))
#define CHECK_ABS(a, b, tol) CHECK(std::abs((a) - (b)) <= (tol))
