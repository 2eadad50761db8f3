#include <cmath>
#include <limits>

#include "glf/modforms.hpp"

namespace glf::modforms {

namespace {

// q-series for J lose about e^{4 pi sqrt n - 2 pi n v} digits at small v;
// past this threshold they are evaluated at the reduced point instead.
constexpr double kJVmin = 0.8;

struct Prepared {
  HalfPlanePoint point;
  Complex factor;  // (c tau + d)^{-k}
  bool reduced;
};

Prepared prepare(const HalfPlanePoint& tau, int k, double v_min) {
  if (tau.v() >= v_min) return {tau, 1.0, false};
  const auto red = reduce_to_fundamental_domain(tau);
  return {red.point, std::pow(red.gamma.automorphy(tau), -k), true};
}

EvalResult holomorphic(const FourierSeries& s, const HalfPlanePoint& tau) {
  const auto p = prepare(tau, s.weight(), s.v_min());
  EvalResult r = s.eval(p.point);
  r.value *= p.factor;
  r.err_est *= std::abs(p.factor);
  r.diagnostics["reduced"] = p.reduced ? 1.0 : 0.0;
  return r;
}

// log(1 - w) without cancellation for tiny w.
Complex log1m(Complex w) {
  if (std::abs(w) < 1e-4) return -w * (1.0 + w * (0.5 + w * (1.0 / 3.0 + w * 0.25)));
  return std::log(1.0 - w);
}

}  // namespace

EvalResult eval_E4(const HalfPlanePoint& tau) { return holomorphic(e4_series(), tau); }
EvalResult eval_E6(const HalfPlanePoint& tau) { return holomorphic(e6_series(), tau); }

EvalResult eval_E2hat(const HalfPlanePoint& tau) {
  const auto p = prepare(tau, 2, e2_series().v_min());
  EvalResult r = e2_series().eval(p.point);
  r.value = p.factor * (r.value - 3.0 / (kPi * p.point.v()));
  r.err_est *= std::abs(p.factor);
  r.diagnostics["reduced"] = p.reduced ? 1.0 : 0.0;
  return r;
}

EvalResult eval_E2(const HalfPlanePoint& tau) {
  if (tau.v() >= e2_series().v_min()) return e2_series().eval(tau);
  EvalResult r = eval_E2hat(tau);
  r.value += 3.0 / (kPi * tau.v());
  return r;
}

EvalResult eval_Delta(const HalfPlanePoint& tau) {
  const auto p = prepare(tau, 12, kDefaultVmin);
  const Complex q = std::exp(kTwoPi * kI * p.point.value());
  const double aq = std::abs(q);
  Complex lg = 0.0;
  Complex qn = 1.0;
  for (int n = 1; n <= kDefaultOrder; ++n) {
    qn *= q;
    lg += log1m(qn);
  }
  EvalResult r;
  r.value = p.factor * q * std::exp(24.0 * lg);
  const double tail = 48.0 * std::pow(aq, kDefaultOrder + 1) / (1.0 - aq);
  r.err_est = std::abs(r.value) * (std::expm1(tail) + 64.0 * std::numeric_limits<double>::epsilon());
  r.diagnostics["tail_bound"] = tail;
  r.diagnostics["reduced"] = p.reduced ? 1.0 : 0.0;
  return r;
}

EvalResult eval_J(const HalfPlanePoint& tau) {
  const auto p = prepare(tau, 0, kJVmin);
  EvalResult r = qj_series().eval(p.point);
  const Complex inv_q = std::exp(-kTwoPi * kI * p.point.value());
  r.value = checked(r.value * inv_q, "eval_J");
  r.err_est *= std::abs(inv_q);
  return r;
}

EvalResult eval_j(const HalfPlanePoint& tau) {
  EvalResult r = eval_J(tau);
  r.value += 744.0;
  return r;
}

ScaledJ scaled_J(const HalfPlanePoint& z) {
  const auto red = reduce_to_fundamental_domain(z);
  if (kTwoPi * red.point.v() > kMaxTwoPiY)
    throw OverflowError("J(z): 2 pi Im z exceeds the overflow cap");
  return {qj_series().eval(red.point).value, red.point};
}

Complex ScaledJ::value() const {
  return checked(scaled * std::exp(-kTwoPi * kI * point.value()), "ScaledJ::value");
}

double ScaledJ::log_abs() const { return std::log(std::abs(scaled)) + kTwoPi * point.v(); }

HzKernel::HzKernel(const HalfPlanePoint& z, double pole_floor)
    : jz_(scaled_J(z)), pole_floor_(pole_floor) {}

HzKernel::Parts HzKernel::parts(const HalfPlanePoint& tau) const {
  const auto p = prepare(tau, 2, kJVmin);
  const HalfPlanePoint& t = p.point;
  const Complex q = std::exp(kTwoPi * kI * t.value());
  const Complex qj = qj_series().eval(t).value;
  const Complex qd = qd_series().eval(t).value;
  // q_tau J(z) = (q_z J(z)) * q_tau / q_z
  const Complex qjz = jz_.scaled * std::exp(kTwoPi * kI * (t.value() - jz_.point.value()));
  const Complex den = qj - qjz;
  if (!is_finite(qjz)) throw OverflowError("H_z: J(z) e^{2 pi i tau} overflows");
  if (std::abs(den) < pole_floor_ * (std::abs(q) + std::abs(qj) + std::abs(qjz)))
    throw PoleProximityError("H_z: J(tau) too close to J(z)");
  return {qd + qjz, den, p.factor, p.reduced};
}

Complex HzKernel::operator()(const HalfPlanePoint& tau) const {
  const auto p = parts(tau);
  return p.automorphy * (1.0 + p.numerator_minus_denominator / p.denominator);
}

Complex HzKernel::minus_one(const HalfPlanePoint& tau) const {
  const auto p = parts(tau);
  const Complex rest = p.numerator_minus_denominator / p.denominator;
  if (!p.reduced) return rest;
  return p.automorphy * (1.0 + rest) - 1.0;
}

Complex eval_Hz(const HalfPlanePoint& z, const HalfPlanePoint& tau) { return HzKernel(z)(tau); }

Complex eval_Hzstar(const HalfPlanePoint& z, const HalfPlanePoint& tau) {
  return eval_Hz(z, tau) - eval_E2hat(tau).value;
}

SingularSetDistance singular_set_distance(const HalfPlanePoint& z) {
  const Complex j = scaled_J(z).value();
  const double d = j.real() >= 984.0 ? std::abs(j.imag()) : std::abs(j - 984.0);
  return {j, d};
}

bool in_singular_set(const HalfPlanePoint& z, double rel_tol) {
  const auto s = singular_set_distance(z);
  return s.distance_to_ray <= rel_tol * (1.0 + std::abs(s.j_value));
}

}  // namespace glf::modforms
