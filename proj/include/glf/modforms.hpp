#pragma once

// Holomorphic and harmonic modular forms on SL2(Z) through truncated
// q-expansions, the group action, and the weight-two meromorphic form
// H_z(tau) = E4^2 E6 / (Delta (J(tau) - J(z))).

#include <cstdint>
#include <functional>
#include <vector>

#include "glf/types.hpp"

namespace glf::modforms {

/// A point u + iv of the upper half-plane (also used for z = x + iy).
class HalfPlanePoint {
public:
  HalfPlanePoint(double u, double v);
  explicit HalfPlanePoint(Complex tau) : HalfPlanePoint(tau.real(), tau.imag()) {}

  double u() const { return u_; }
  double v() const { return v_; }
  Complex value() const { return {u_, v_}; }

private:
  double u_;
  double v_;
};

/// (a b; c d) with ad - bc = 1.
class UnimodularMatrix {
public:
  UnimodularMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  static UnimodularMatrix identity() { return {1, 0, 0, 1}; }
  static UnimodularMatrix S() { return {0, -1, 1, 0}; }
  static UnimodularMatrix T() { return {1, 1, 0, 1}; }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }
  std::int64_t d() const { return d_; }

  HalfPlanePoint apply(const HalfPlanePoint& tau) const;
  /// j(gamma, tau) = c tau + d
  Complex automorphy(const HalfPlanePoint& tau) const;
  UnimodularMatrix operator*(const UnimodularMatrix& rhs) const;
  UnimodularMatrix inverse() const { return {d_, -b_, -c_, a_}; }

private:
  std::int64_t a_, b_, c_, d_;
};

/// Standard reduction: gamma * tau = point with |u| <= 1/2 and |point| >= 1.
struct Reduction {
  HalfPlanePoint point;
  UnimodularMatrix gamma;
};
Reduction reduce_to_fundamental_domain(const HalfPlanePoint& tau);

/// f |_k gamma (tau) = (c tau + d)^{-k} f(gamma tau).
using Function = std::function<Complex(const HalfPlanePoint&)>;
Complex slash(const Function& f, int k, const UnimodularMatrix& gamma, const HalfPlanePoint& tau);

/// Truncated q-expansion sum_{n <= N} c_n q^n. The remainder bound uses a
/// coefficient majorant given in log form: log |c_n| <= log_majorant(n).
class FourierSeries {
public:
  FourierSeries(int weight, std::vector<double> coeffs, std::function<double(int)> log_majorant,
                double v_min);

  int weight() const { return weight_; }
  int truncation_order() const { return static_cast<int>(coeffs_.size()) - 1; }
  double v_min() const { return v_min_; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  /// Bound on |sum_{n > N} c_n q^n| at Im tau = v; decreasing in v.
  double tail_bound(double v) const;
  /// Refuses v < v_min with DomainError.
  EvalResult eval(const HalfPlanePoint& tau) const;

private:
  int weight_;
  std::vector<double> coeffs_;
  std::function<double(int)> log_majorant_;
  double v_min_;
};

inline constexpr int kDefaultOrder = 80;
inline constexpr double kDefaultVmin = 0.5;

const FourierSeries& e2_series();
const FourierSeries& e4_series();
const FourierSeries& e6_series();
/// q J(tau) = 1 + 196884 q^2 + ...
const FourierSeries& qj_series();
/// q (E4^2 E6 / Delta - J) = O(q^2); the growth-free part of the H_z numerator.
const FourierSeries& qd_series();

EvalResult eval_E2(const HalfPlanePoint& tau);
EvalResult eval_E4(const HalfPlanePoint& tau);
EvalResult eval_E6(const HalfPlanePoint& tau);
EvalResult eval_E2hat(const HalfPlanePoint& tau);
/// Delta = q prod (1 - q^n)^24, product taken in log space.
EvalResult eval_Delta(const HalfPlanePoint& tau);
EvalResult eval_j(const HalfPlanePoint& tau);
EvalResult eval_J(const HalfPlanePoint& tau);

/// J(z) stored as q_z J(z) at the reduced representative so that values with
/// Im z up to the overflow cap stay representable in scaled form.
struct ScaledJ {
  Complex scaled;        ///< q J at the reduced point
  HalfPlanePoint point;  ///< reduced representative of z
  Complex value() const;  ///< J(z); throws OverflowError past the cap
  double log_abs() const;  ///< log |J(z)|
};
ScaledJ scaled_J(const HalfPlanePoint& z);

/// Largest admissible 2 pi Im(z) for J(z) evaluation.
inline constexpr double kMaxTwoPiY = 700.0;

/// H_z(tau) for fixed z, sharing the J(z) evaluation across many tau.
class HzKernel {
public:
  explicit HzKernel(const HalfPlanePoint& z, double pole_floor = 1e-8);

  const ScaledJ& jz() const { return jz_; }
  Complex operator()(const HalfPlanePoint& tau) const;
  /// H_z(tau) - 1 without cancellation for large Im tau.
  Complex minus_one(const HalfPlanePoint& tau) const;

private:
  struct Parts {
    Complex numerator_minus_denominator;  // qD + q J(z)
    Complex denominator;                  // qJ(tau) - q J(z)
    Complex automorphy;                   // (c tau + d)^{-2}
    bool reduced;
  };
  Parts parts(const HalfPlanePoint& tau) const;

  ScaledJ jz_;
  double pole_floor_;
};

Complex eval_Hz(const HalfPlanePoint& z, const HalfPlanePoint& tau);
/// H_z^*(tau) = H_z(tau) - E2hat(tau).
Complex eval_Hzstar(const HalfPlanePoint& z, const HalfPlanePoint& tau);

struct SingularSetDistance {
  Complex j_value;
  double distance_to_ray;  ///< distance from J(z) to [J(i), infinity) = [984, infinity)
};
SingularSetDistance singular_set_distance(const HalfPlanePoint& z);
/// True when z lies in the SL2(Z)-orbit of the imaginary axis, i.e. J(z) is
/// real and >= 984, up to a relative tolerance.
bool in_singular_set(const HalfPlanePoint& z, double rel_tol = 1e-10);

/// Exact integer q-expansions to a given order, for coefficient identities.
namespace exact {
using Int = __int128;
std::vector<Int> eisenstein(int k, int order);  ///< E_k with the -2k/B_k normalisation
std::vector<Int> delta(int order);
std::vector<Int> multiply(const std::vector<Int>& a, const std::vector<Int>& b);
}  // namespace exact

}  // namespace glf::modforms
