#include "glf/lfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "glf/eisenstein.hpp"
#include "glf/quadrature.hpp"
#include "glf/specfun.hpp"

namespace glf::lfun {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Complex cpow(double t, Complex e) { return std::exp(e * std::log(t)); }

quad::Options options(const QuadratureSpec& q) { return {q.abs_tol, q.rel_tol, q.max_subdiv}; }

void check_s(Complex s) {
  for (double p : {0.0, 1.0, 2.0})
    if (s == Complex(p, 0.0)) throw PoleError("L-function: s in {0, 1, 2} is excluded");
}

// int_T^inf e^{-2 pi t} t^{sigma - 1} dt
double exp_tail(double sigma, double T) {
  return std::pow(kTwoPi, -sigma) * specfun::inc_gamma_upper(Complex(sigma, 0.0), kTwoPi * T).real();
}

// E2(it) - 1 without the constant term cancellation.
Complex e2_minus_one(double t) {
  if (t < modforms::kDefaultVmin) return modforms::eval_E2({0.0, t}).value - 1.0;
  const auto& c = modforms::e2_series().coeffs();
  const double q = std::exp(-kTwoPi * t);
  double acc = 0.0;
  for (int n = static_cast<int>(c.size()) - 1; n >= 1; --n) acc = (acc + c[n]) * q;
  return acc;
}

// Integrals of H_z(it) along t >= 1 that are shared by all of the J pieces.
class AxisIntegrator {
public:
  AxisIntegrator(const HalfPlanePoint& z, const QuadratureSpec& q) : H_(z), q_(q) {
    const double y = H_.jz().point.v();
    log_j_ = H_.jz().log_abs();
    const double jabs1 = std::log1p(std::exp(std::min(log_j_, 700.0)));
    tail_default_ = q.tail_T > 0.0 ? q.tail_T : y + 3.0 + jabs1 / kTwoPi;
    log1pj_ = jabs1;
    if (q.near_pole_refine) {
      for (double c : {y, log_j_ / kTwoPi})
        for (double d : {-0.75, -0.25, 0.0, 0.25, 0.75})
          if (c + d > 1.0) breaks_.push_back(c + d);
      std::sort(breaks_.begin(), breaks_.end());
    }
  }

  const modforms::HzKernel& kernel() const { return H_; }

  // int_a^b (H(it) - 1) t^{s-1} dt, 1 <= a, b possibly infinite
  EvalResult at_infinity(Complex s, double a, double b) const {
    EvalResult r;
    if (!(b > a)) return r;
    double top = b;
    double tail = 0.0;
    if (std::isinf(b)) {
      top = std::max(tail_default_, a);
      // |H(it) - 1| <= 2 e^{-2 pi t} (1 + |J(z)|) past the default cut
      auto bound = [&](double T) { return 2.0 * std::exp(log1pj_) * exp_tail(s.real(), T); };
      while (bound(top) > 0.1 * q_.abs_tol && top < 1e4) top += 0.5;
      tail = bound(top);
      r.diagnostics["tail_T"] = top;
    }
    const auto f = [&](double t) { return H_.minus_one({0.0, t}) * cpow(t, s - 1.0); };
    const auto res = quad::integrate_or_throw(f, a, top, options(q_), breaks_);
    r.value = res.value;
    r.err_est = res.err_est + tail;
    r.diagnostics["subdivisions"] = res.subdivisions;
    return r;
  }

  // int_a^b (H(it) + t^{-2}) t^{s-1} dt, 1 <= a <= b < inf
  EvalResult at_zero(Complex s, double a, double b) const {
    EvalResult r;
    if (!(b > a)) return r;
    if (std::isinf(b)) throw DomainError("J_integral: the AtZero integrand does not decay at infinity");
    const auto f = [&](double t) { return (H_({0.0, t}) + 1.0 / (t * t)) * cpow(t, s - 1.0); };
    const auto res = quad::integrate_or_throw(f, a, b, options(q_), breaks_);
    r.value = res.value;
    r.err_est = res.err_est;
    r.diagnostics["subdivisions"] = res.subdivisions;
    return r;
  }

  EvalResult integral(Complex s, Branch branch, double y1, double y2) const {
    if (!(y1 >= 0.0) || !(y2 > y1)) throw ParameterError("J_integral: need 0 <= y1 < y2");
    EvalResult hi, lo;
    const double h1 = std::max(y1, 1.0);
    if (branch == Branch::AtInfinity) {
      hi = at_infinity(s, h1, y2);
      if (y1 < 1.0) {
        if (y1 == 0.0) throw DomainError("J_integral: AtInfinity integrand is not integrable at 0");
        lo = at_zero(2.0 - s, 1.0 / std::min(y2, 1.0), 1.0 / y1);
      }
    } else {
      if (y2 > 1.0) hi = at_zero(s, h1, y2);
      if (y1 < 1.0) lo = at_infinity(2.0 - s, 1.0 / std::min(y2, 1.0), y1 == 0.0 ? kInf : 1.0 / y1);
    }
    EvalResult r;
    r.value = hi.value - lo.value;
    r.err_est = hi.err_est + lo.err_est;
    for (const auto& [k, v] : hi.diagnostics) r.diagnostics["upper_" + k] = v;
    for (const auto& [k, v] : lo.diagnostics) r.diagnostics["lower_" + k] = v;
    return r;
  }

private:
  modforms::HzKernel H_;
  QuadratureSpec q_;
  double log_j_;
  double log1pj_;
  double tail_default_;
  std::vector<double> breaks_;
};

void require_off_singular_set(const HalfPlanePoint& z) {
  if (modforms::in_singular_set(z, 1e-12))
    throw SingularSetError("z lies on the SL2(Z)-orbit of the imaginary axis");
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(t0 > 0.0)) throw ParameterError("QuadratureSpec: t0 must be positive");
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw ParameterError("QuadratureSpec: tolerances must be positive");
  if (max_subdiv < 1) throw ParameterError("QuadratureSpec: max_subdiv must be >= 1");
  if (tail_T > 0.0 && !(tail_T > t0)) throw ParameterError("QuadratureSpec: tail_T must exceed t0");
}

Complex L_E2hat_closed_form(Complex s) {
  return -24.0 * cpow(kTwoPi, -s) * specfun::gamma(s) * specfun::zeta(s) * specfun::zeta(s - 1.0);
}

EvalResult L_E2hat(Complex s, const QuadratureSpec& q) {
  q.validate();
  check_s(s);
  const double t0 = q.t0;
  // int_a^inf (E2(it) - 1) t^{e-1} dt with an analytic tail
  auto piece = [&](Complex e, double a, int& subdiv) {
    double top = std::max(a, 6.0);
    auto bound = [&](double T) {
      const double r = std::exp(-kTwoPi * T);
      return 48.0 / std::pow(1.0 - r, 3) * exp_tail(e.real(), T);
    };
    while (bound(top) > 0.1 * q.abs_tol && top < 1e4) top += 0.5;
    const auto f = [&](double t) { return e2_minus_one(t) * cpow(t, e - 1.0); };
    const auto res = quad::integrate_or_throw(f, a, top, options(q));
    subdiv += res.subdivisions;
    return std::pair{res.value, res.err_est + bound(top)};
  };
  int subdiv = 0;
  const auto [upper, e_up] = piece(s, t0, subdiv);
  // the 0..t0 integral mapped by t -> 1/t and the weight-two reflection
  const auto [lower, e_lo] = piece(2.0 - s, 1.0 / t0, subdiv);
  EvalResult r;
  r.value = upper - lower - cpow(t0, s) / s - cpow(t0, s - 2.0) / (s - 2.0) +
            (6.0 / kPi) * cpow(t0, s - 1.0) / (s - 1.0);
  r.err_est = e_up + e_lo;
  r.diagnostics["subdivisions"] = subdiv;
  return r;
}

EvalResult J_integral(const HalfPlanePoint& z, Complex s, Branch branch, double y1, double y2,
                      const QuadratureSpec& q) {
  q.validate();
  require_off_singular_set(z);
  return AxisIntegrator(z, q).integral(s, branch, y1, y2);
}

EvalResult L_z(const HalfPlanePoint& z, Complex s, const QuadratureSpec& q) {
  q.validate();
  check_s(s);
  require_off_singular_set(z);
  const double t0 = q.t0;
  const AxisIntegrator ax(z, q);
  const EvalResult le2 = L_E2hat(s, q);
  const EvalResult j0 = ax.integral(s, Branch::AtZero, 0.0, t0);
  const EvalResult ji = ax.integral(s, Branch::AtInfinity, t0, kInf);
  const Complex tpi = kTwoPi * kI;
  EvalResult r;
  r.value = tpi * (le2.value - j0.value - ji.value + cpow(t0, s) / s + cpow(t0, s - 2.0) / (s - 2.0));
  r.err_est = kTwoPi * (le2.err_est + j0.err_est + ji.err_est);
  double subdiv = 0.0;
  for (const auto* part : {&le2, &j0, &ji})
    for (const auto& [k, v] : part->diagnostics)
      if (k.ends_with("subdivisions")) subdiv += v;
  r.diagnostics["subdivisions"] = subdiv;
  return r;
}

namespace {

// calG_w along the imaginary axis together with the constants of its
// growth c E_0(w; z) t^{-w} towards i infinity.
struct AxisResolvent {
  Complex w;
  HalfPlanePoint z;
  resolvent::ResolventTruncation tr;
  Complex c_e0;  // 2 pi i (w-1)/(1-2w) E_0(w; z)
  double y_red;

  AxisResolvent(const HalfPlanePoint& z_in, Complex w_in, const resolvent::ResolventTruncation& t)
      : w(w_in), z(z_in), tr(t) {
    const Complex e0 = eisenstein::eval_E_realanalytic(0, w, z, {60, 1.0}).value;
    c_e0 = 2.0 * kPi * kI * (w - 1.0) / (1.0 - 2.0 * w) * e0;
    y_red = modforms::reduce_to_fundamental_domain(z).point.v();
  }

  Complex G(double t) const { return resolvent::calGw(w, z, {0.0, t}, tr).value; }
  // beyond this height calG_w differs from c E_0 t^{-w} by O(e^{-2 pi (t - y)})
  double flat_height() const { return y_red + 6.0; }
};

quad::Options resolvent_options(const QuadratureSpec& q) {
  return {std::max(q.abs_tol, 1e-10), std::max(q.rel_tol, 1e-8), q.max_subdiv};
}

// int_a^inf (calG_w(z,iu) - c E0 u^{-w}) u^{sigma-1} du
EvalResult phi(const AxisResolvent& ar, Complex sigma, double a, const QuadratureSpec& q) {
  const double top = std::max(ar.flat_height(), a);
  const auto f = [&](double u) { return (ar.G(u) - ar.c_e0 * cpow(u, -ar.w)) * cpow(u, sigma - 1.0); };
  const auto res = quad::integrate_or_throw(f, a, top, resolvent_options(q));
  EvalResult r;
  r.value = res.value;
  r.err_est = res.err_est + std::abs(ar.c_e0) * std::exp(-kTwoPi * (top - ar.y_red)) * std::pow(top, sigma.real());
  r.diagnostics["subdivisions"] = res.subdivisions;
  return r;
}

// int_a^inf calG_w(z,it) weight(t) t^{sigma-1} dt for Re w > Re sigma
template <class Weight>
EvalResult calJ(const AxisResolvent& ar, Complex sigma, double a, const Weight& weight,
                const QuadratureSpec& q) {
  if (!(ar.w.real() > sigma.real()))
    throw ConvergenceError("L_z(w, s0; s): need Re w > max(Re s, 2 - Re s)");
  const double top = std::max(ar.flat_height(), a);
  const auto f = [&](double t) { return ar.G(t) * weight(t) * cpow(t, sigma - 1.0); };
  const auto head = quad::integrate_or_throw(f, a, top, resolvent_options(q));
  // t = top / x on (0, 1]
  const auto g = [&](double x) {
    const double t = top / x;
    return ar.c_e0 * cpow(t, sigma - 1.0 - ar.w) * weight(t) * (top / (x * x));
  };
  const auto tail = quad::integrate_or_throw(g, 0.0, 1.0, resolvent_options(q));
  EvalResult r;
  r.value = head.value + tail.value;
  r.err_est = head.err_est + tail.err_est +
              std::abs(ar.c_e0) * std::exp(-kTwoPi * (top - ar.y_red)) * std::pow(top, sigma.real());
  return r;
}

}  // namespace

EvalResult I_ws(const HalfPlanePoint& z, Complex w, Complex s, double t0,
                const resolvent::ResolventTruncation& tr, const QuadratureSpec& q) {
  if (w == Complex(1.0, 0.0)) {
    QuadratureSpec q1 = q;
    q1.t0 = t0;
    return L_z(z, s, q1);
  }
  if (w == Complex(0.5, 0.0) || w == s || w == 2.0 - s)
    throw ParameterError("I_ws: w in {1/2, s, 2 - s} is excluded");
  require_off_singular_set(z);
  const AxisResolvent ar(z, w, tr);
  const EvalResult p1 = phi(ar, s, t0, q);
  const EvalResult p2 = phi(ar, 2.0 - s, 1.0 / t0, q);
  const Complex e1 = ar.c_e0 * cpow(t0, s + w - 2.0) / (s + w - 2.0);
  const Complex e2 = ar.c_e0 * cpow(t0, s - w) / (s - w);
  EvalResult r;
  // I_1 = -phi(2 - s, 1/t0) by t -> 1/t and weight-two modularity
  r.value = p1.value - p2.value - e1 - e2;
  r.err_est = p1.err_est + p2.err_est;
  return r;
}

double r_weight(const HalfPlanePoint& z, const HalfPlanePoint& tau) {
  return std::abs(tau.value() - z.value()) / std::abs(tau.value() - std::conj(z.value()));
}

EvalResult L_z_general(const HalfPlanePoint& z, Complex w, Complex s0, Complex s,
                       const resolvent::ResolventTruncation& tr, const QuadratureSpec& q) {
  q.validate();
  if (s0 == Complex(0.0, 0.0)) require_off_singular_set(z);
  const AxisResolvent ar(z, w, tr);
  const auto weight = [&](double t) {
    if (s0 == Complex(0.0, 0.0)) return Complex(1.0, 0.0);
    const double r1 = r_weight(z, {0.0, t});
    const double r2 = r_weight(z, {0.0, 1.0 / t});
    return std::exp(s0 * std::log(r1 * r2));
  };
  const EvalResult a = calJ(ar, s, q.t0, weight, q);
  const EvalResult b = calJ(ar, 2.0 - s, 1.0 / q.t0, weight, q);
  EvalResult r;
  r.value = a.value - b.value;
  r.err_est = a.err_est + b.err_est;
  return r;
}

EvalResult L_z_w_direct(const HalfPlanePoint& z, Complex w, Complex s,
                        const resolvent::ResolventTruncation& tr, const QuadratureSpec& q) {
  return L_z_general(z, w, 0.0, s, tr, q);
}

CorrectionCoefficients correction_coefficients(Complex s, double x) {
  if (x == std::floor(x)) throw BranchError("C_{l,s}(x): x must not be an integer");
  CorrectionCoefficients cc{s, x, {}};
  const int top = static_cast<int>(std::floor(s.real()));
  for (int l = 0; l <= top; ++l) {
    if (l == 0) {
      cc.C.push_back(kTwoPi * kI / s);
      continue;
    }
    const Complex pref = specfun::rising_factorial(1.0 - s, l - 1) * std::pow(kTwoPi, -l);
    const Complex li = specfun::polylog(l, x);
    if (l % 2 == 0)
      cc.C.push_back(4.0 * kPi * kI * pref * li.real());
    else
      cc.C.push_back(-4.0 * kPi * pref * li.imag());
  }
  return cc;
}

namespace {

// Solves the small complex system m x = b by Gaussian elimination with
// partial pivoting (m is n-by-n, row major).
std::vector<Complex> solve(std::vector<Complex> m, std::vector<Complex> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r * n + col]) > std::abs(m[piv * n + col])) piv = r;
    if (std::abs(m[piv * n + col]) == 0.0) throw FitError("limit fit: singular design matrix");
    for (std::size_t k = 0; k < n; ++k) std::swap(m[col * n + k], m[piv * n + k]);
    std::swap(b[col], b[piv]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = m[r * n + col] / m[col * n + col];
      for (std::size_t k = col; k < n; ++k) m[r * n + k] -= f * m[col * n + k];
      b[r] -= f * b[col];
    }
  }
  std::vector<Complex> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Complex acc = b[i];
    for (std::size_t k = i + 1; k < n; ++k) acc -= m[i * n + k] * x[k];
    x[i] = acc / m[i * n + i];
  }
  return x;
}

// The two slowest-decaying powers y^e left after the subtraction: the next
// terms of the y^{s-l} and y^{2-s-l} families, with coincident ones merged.
std::pair<Complex, Complex> residual_exponents(Complex s) {
  std::vector<Complex> e;
  const int f1 = static_cast<int>(std::floor(s.real()));
  const int f2 = static_cast<int>(std::floor(2.0 - s.real()));
  for (int k = 1; k <= 3; ++k) {
    e.push_back(s - static_cast<double>(f1 + k));
    e.push_back(2.0 - s - static_cast<double>(f2 + k));
  }
  std::sort(e.begin(), e.end(), [](Complex a, Complex b) { return a.real() > b.real(); });
  std::vector<Complex> uniq;
  for (const Complex c : e)
    if (uniq.empty() || std::abs(c - uniq.back()) > 1e-12) uniq.push_back(c);
  return {uniq[0], uniq[1]};
}

}  // namespace

LimitReport limit_experiment(Complex s, double x, const std::vector<double>& y_ladder,
                             const QuadratureSpec& q) {
  if (s.real() < 1.0) throw ParameterError("limit_experiment: need Re s >= 1");
  if (s.imag() == 0.0 && s.real() == std::floor(s.real()))
    throw ParameterError("limit_experiment: s must not be an integer");
  if (y_ladder.size() < 3) throw ParameterError("limit_experiment: need at least three heights");
  for (double y : y_ladder)
    if (!(y > 0.0 && y <= 100.0)) throw ParameterError("limit_experiment: heights must lie in (0, 100]");

  LimitReport rep;
  rep.s = s;
  rep.x = x;
  rep.y = y_ladder;
  const auto cs = correction_coefficients(s, x);
  const auto cs2 = correction_coefficients(2.0 - s, x);
  for (double y : y_ladder) {
    const Complex L = L_z({x, y}, s, q).value;
    Complex R = L;
    for (std::size_t l = 0; l < cs.C.size(); ++l) R -= cs.C[l] * cpow(y, s - static_cast<double>(l));
    for (std::size_t l = 0; l < cs2.C.size(); ++l)
      R += cs2.C[l] * cpow(y, 2.0 - s - static_cast<double>(l));
    rep.Lz.push_back(L);
    rep.residual.push_back(R);
  }
  for (std::size_t i = 2; i < rep.residual.size(); ++i)
    if (std::abs(rep.residual[i] - rep.residual[i - 1]) >
        std::abs(rep.residual[i - 1] - rep.residual[i - 2]))
      throw FitError("limit_experiment: residuals do not settle monotonically");

  const auto [e1, e2] = residual_exponents(s);
  rep.alpha1 = -e1.real();
  rep.alpha2 = -e2.real();
  // least squares through the normal equations of [1, y^e1, y^e2]
  std::vector<Complex> ata(9, 0.0), atb(3, 0.0);
  for (std::size_t i = 0; i < rep.y.size(); ++i) {
    const Complex row[3] = {1.0, cpow(rep.y[i], e1), cpow(rep.y[i], e2)};
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) ata[a * 3 + b] += std::conj(row[a]) * row[b];
      atb[a] += std::conj(row[a]) * rep.residual[i];
    }
  }
  const auto sol = solve(ata, atb);
  rep.A = sol[0];
  rep.B = sol[1];
  rep.C = sol[2];
  rep.target = kTwoPi * kI * L_E2hat_closed_form(s);
  rep.rel_error = std::abs(rep.A - rep.target) / std::abs(rep.target);
  return rep;
}

}  // namespace glf::lfun
