#include "glf/eisenstein.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "glf/specfun.hpp"

namespace glf::eisenstein {

namespace {

constexpr int kAsymptoticTerms = 60;

void check_region(int k, Complex w) {
  if (k < 0 || k % 2 != 0) throw ParameterError("E_k(w): k must be even and >= 0");
  if (k == 0 && !(w.real() > 1.0)) throw DomainError("E_0(w): need Re w > 1");
  if (k > 0 && !(2.0 * w.real() + k > 2.0)) throw DomainError("E_k(w): need 2 Re w + k > 2");
}

// int_R (x + i)^{-k} (x^2 + 1)^{-w} dx
Complex mean_constant(int k, Complex w) {
  using specfun::gamma;
  const double sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;
  return sign * kPi * std::pow(2.0, 2.0 - 2.0 * w - static_cast<double>(k)) *
         gamma(2.0 * w + (k - 1.0)) / (gamma(w + static_cast<double>(k)) * gamma(w));
}

int totient(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

// Full sum over m of g(u + m) = (u + m + iv)^{-k} ((u+m)^2 + v^2)^{-w}.
class RowKernel {
public:
  RowKernel(int k, Complex w, double v) : k_(k), w_(w), v_(v), p_(2.0 * w + static_cast<double>(k)) {
    m_ = static_cast<int>(std::ceil(4.0 * v)) + 8;
    // (1 + iy)^{-k} (1 + y^2)^{-w} = sum a_j y^j
    std::vector<Complex> b(kAsymptoticTerms + 1), c(kAsymptoticTerms / 2 + 1);
    b[0] = 1.0;
    for (int i = 1; i <= kAsymptoticTerms; ++i)
      b[i] = b[i - 1] * kI * (-static_cast<double>(k + i - 1)) / static_cast<double>(i);
    c[0] = 1.0;
    for (int l = 1; l < static_cast<int>(c.size()); ++l)
      c[l] = c[l - 1] * (-(w + static_cast<double>(l - 1))) / static_cast<double>(l);
    coeff_.assign(kAsymptoticTerms + 1, 0.0);
    for (int i = 0; i <= kAsymptoticTerms; ++i)
      for (int l = 0; i + 2 * l <= kAsymptoticTerms; ++l) coeff_[i + 2 * l] += b[i] * c[l];
    double vj = 1.0;
    for (auto& a : coeff_) {
      a *= vj;
      vj *= v;
    }
  }

  Complex g(double x) const {
    return std::pow(Complex(x, v_), -k_) * std::exp(-w_ * std::log(x * x + v_ * v_));
  }

  Complex sum(double u) const {
    u -= std::floor(u + 0.5);
    Complex s = 0.0;
    for (int m = -m_; m <= m_; ++m) s += g(u + m);
    s += tail(m_ + 0.5 + u, false) + tail(m_ + 0.5 - u, true);
    return s;
  }

private:
  // Midpoint Euler-Maclaurin for sum_{n >= 0} g(x0 + 1/2 + n) via the
  // expansion of g in v / X; `negative` mirrors X -> -X.
  Complex tail(double x0, bool negative) const {
    const double lx = std::log(x0);
    Complex s = 0.0;
    for (int j = 0; j <= kAsymptoticTerms; ++j) {
      const Complex a = (negative && (j % 2 == 1)) ? -coeff_[j] : coeff_[j];
      const Complex e = p_ + static_cast<double>(j);
      const Complex xp = std::exp(-e * lx);  // x0^{-p-j}
      const Complex t = a * (xp * x0 / (e - 1.0) - e * xp / (24.0 * x0) +
                             7.0 * e * (e + 1.0) * (e + 2.0) * xp / (5760.0 * x0 * x0 * x0));
      s += t;
      if (j > 4 && std::abs(t) < 1e-18 * std::abs(s)) break;
    }
    return s;
  }

  int k_;
  Complex w_;
  double v_;
  Complex p_;
  int m_;
  std::vector<Complex> coeff_;
};

}  // namespace

double lattice_tail_bound(int k, Complex w, double v, int radius) {
  const double sigma = 2.0 * w.real() + k;
  const double q = std::exp(-kTwoPi * v);
  return 2.0 * std::abs(mean_constant(k, w)) * std::pow(v, 1.0 - sigma + w.real()) *
         std::pow(1.0 + kTwoPi * v, w.real() + k) * q / ((1.0 - q) * (1.0 - q)) *
         std::pow(static_cast<double>(radius), 1.0 - sigma) / (sigma - 1.0);
}

EvalResult eval_E_realanalytic(int k, Complex w, const HalfPlanePoint& tau,
                               const LatticeTruncation& tr) {
  check_region(k, w);
  if (tr.radius < 1) throw ParameterError("LatticeTruncation: radius must be >= 1");
  const auto red = modforms::reduce_to_fundamental_domain(tau);
  const double u = red.point.u();
  const double v = red.point.v();
  const Complex sigma = 2.0 * w + static_cast<double>(k);

  const RowKernel row(k, w, v);
  Complex rows = 0.0;
  Complex phi_partial = 0.0;
  for (int c = 1; c <= tr.radius; ++c) {
    Complex rs = 0.0;
    for (int r = 0; r < c; ++r)
      if (std::gcd(r, c) == 1) rs += row.sum(u + static_cast<double>(r) / c);
    const Complex cpow = std::exp(-sigma * std::log(static_cast<double>(c)));
    rows += cpow * rs;
    phi_partial += static_cast<double>(totient(c)) * cpow;
  }
  const Complex mean_rest = mean_constant(k, w) * std::exp((1.0 - sigma) * std::log(v)) *
                            (specfun::zeta(sigma - 1.0) / specfun::zeta(sigma) - phi_partial);
  const Complex vw = std::exp(w * std::log(v));
  EvalResult r;
  const Complex factor = std::pow(red.gamma.automorphy(tau), -k);
  r.value = factor * vw * (1.0 + rows + mean_rest);
  r.err_est = std::abs(factor) * lattice_tail_bound(k, w, v, tr.radius);
  r.diagnostics["radius"] = tr.radius;
  r.diagnostics["tail_bound"] = r.err_est;
  if (r.err_est > tr.tolerance)
    throw ConvergenceError("E_k(w): lattice tail bound exceeds tolerance at this radius");
  checked(r.value, "eval_E_realanalytic");
  return r;
}

double residue_E0_at_1(const HalfPlanePoint&) { return 3.0 / kPi; }

ResidueEstimate residue_E0_estimate(const HalfPlanePoint& z, const LatticeTruncation& tr) {
  const double ws[3] = {1.3, 1.2, 1.1};
  Complex f[3];
  for (int i = 0; i < 3; ++i) f[i] = (ws[i] - 1.0) * eval_E_realanalytic(0, ws[i], z, tr).value;
  // Lagrange weights at w = 1 for nodes 1.3, 1.2, 1.1
  const Complex ex = 1.0 * f[0] - 3.0 * f[1] + 3.0 * f[2];
  return {3.0 / kPi, ex};
}

namespace {

struct Derivs {
  Complex f, fu, fv, fuu, fvv;
};

Derivs cross(const Function& f, const HalfPlanePoint& tau, double h) {
  const double u = tau.u(), v = tau.v();
  if (!(h > 0.0) || h >= v) throw StepError("finite differences: need 0 < h < Im tau");
  const Complex f0 = f(tau);
  const Complex fe = f({u + h, v}), fw = f({u - h, v});
  const Complex fn = f({u, v + h}), fs = f({u, v - h});
  return {f0, (fe - fw) / (2.0 * h), (fn - fs) / (2.0 * h), (fe + fw - 2.0 * f0) / (h * h),
          (fn + fs - 2.0 * f0) / (h * h)};
}

Complex raise_at(int k, const Function& f, const HalfPlanePoint& tau, double h) {
  const double u = tau.u(), v = tau.v();
  if (!(h > 0.0) || h >= v) throw StepError("raise: need 0 < h < Im tau");
  const Complex fu = (f({u + h, v}) - f({u - h, v})) / (2.0 * h);
  const Complex fv = (f({u, v + h}) - f({u, v - h})) / (2.0 * h);
  return kI * fu + fv + (static_cast<double>(k) / v) * f(tau);
}

}  // namespace

Complex raise(int k, const Function& f, const HalfPlanePoint& tau, double h, double rel_tol) {
  const Complex d1 = raise_at(k, f, tau, h);
  const Complex d2 = raise_at(k, f, tau, 0.5 * h);
  const Complex rich = (4.0 * d2 - d1) / 3.0;
  if (std::abs(d2 - d1) > rel_tol * std::max(std::abs(rich), 1e-300))
    throw StepError("raise: Richardson levels disagree");
  return rich;
}

Complex laplacian_stencil(int k, const Function& f, const HalfPlanePoint& tau, double h) {
  const auto d = cross(f, tau, h);
  const double v = tau.v();
  return -v * v * (d.fuu + d.fvv) + kI * static_cast<double>(k) * v * (d.fu + kI * d.fv);
}

Complex hyperbolic_laplacian(int k, const Function& f, const HalfPlanePoint& tau, double h,
                             double rel_tol) {
  const Complex l1 = laplacian_stencil(k, f, tau, h);
  const Complex l2 = laplacian_stencil(k, f, tau, 0.5 * h);
  const Complex rich = (4.0 * l2 - l1) / 3.0;
  const double scale = std::max(std::abs(rich), std::abs(f(tau)));
  if (std::abs(l2 - l1) > rel_tol * std::max(scale, 1e-300))
    throw StepError("hyperbolic_laplacian: Richardson levels disagree");
  return rich;
}

}  // namespace glf::eisenstein
