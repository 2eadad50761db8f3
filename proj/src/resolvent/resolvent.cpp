#include "glf/resolvent.hpp"

#include <cmath>
#include <numeric>

#include "glf/specfun.hpp"

namespace glf::resolvent {

namespace {

constexpr int kMaxSeries = 40;

struct Pair {
  double x;
  double one_minus_x;
  Complex zbar_minus_tau;
};

Pair make_pair(const HalfPlanePoint& z, const HalfPlanePoint& tau) {
  const Complex zt = z.value() - tau.value();
  const Complex ztb = z.value() - std::conj(tau.value());
  const double den = std::norm(ztb);
  return {4.0 * z.v() * tau.v() / den, std::norm(zt) / den, std::conj(z.value()) - tau.value()};
}

Complex prefactor(Complex w) {
  return -std::exp(2.0 * specfun::log_gamma(w) - specfun::log_gamma(2.0 * w));
}

// x^w 2F1(w,w;2w;x) and x d/dx of it.
void kernel_parts(Complex w, double x, Complex& f, Complex& xdf) {
  const Complex xw = std::exp(w * std::log(x));
  const Complex h0 = specfun::hyp2f1_ww2w(w, x);
  // d/dx 2F1(w,w;2w;x) = (w/2) 2F1(w+1,w+1;2w+1;x) = (w/2) (1-x)^{-1} 2F1(w,w;2w+1;x)
  const Complex h1 = specfun::hyp2f1_integer_excess(w, w, 1, x) / (1.0 - x);
  f = xw * h0;
  xdf = w * xw * h0 + xw * x * 0.5 * w * h1;
}

enum class Mode { Kernel, Raised };

// Sum over all translations n of g_w(Z + n, tau), or of its tau-derivative.
class TranslationSum {
public:
  TranslationSum(Complex w, const HalfPlanePoint& tau, const ResolventTruncation& tr, Mode mode)
      : w_(w), tau_(tau), tr_(tr), mode_(mode), pre_(prefactor(w)) {
    // Taylor coefficients of 2F1(w,w;2w;x): (w)_m^2 / ((2w)_m m!)
    coeff_.resize(kMaxSeries + 1);
    coeff_[0] = 1.0;
    for (int m = 1; m <= kMaxSeries; ++m) {
      const Complex a = w + static_cast<double>(m - 1);
      coeff_[m] = coeff_[m - 1] * a * a / ((2.0 * w + static_cast<double>(m - 1)) * static_cast<double>(m));
    }
  }

  Complex operator()(const HalfPlanePoint& Z) const {
    const double v = tau_.v();
    const double rho = Z.v() + v;
    const int N = std::max(tr_.translations, static_cast<int>(std::ceil(4.0 * rho)) + 8);
    const double shift = std::round(tau_.u() - Z.u());
    const double xi0 = Z.u() + shift - tau_.u();
    Complex s = 0.0;
    for (int k = -N; k <= N; ++k) {
      const HalfPlanePoint Zk(Z.u() + shift + k, Z.v());
      s += term(Zk);
    }
    s += tail(Z.v(), rho, xi0 + N + 0.5, xi0 - N - 0.5);
    return s;
  }

  Complex term(const HalfPlanePoint& Z) const {
    const Pair p = make_pair(Z, tau_);
    if (p.one_minus_x < tr_.orbit_floor)
      throw OrbitProximityError("resolvent: a translate of Mz is too close to tau");
    Complex f, xdf;
    kernel_parts(w_, p.x, f, xdf);
    if (mode_ == Mode::Kernel) return pre_ * f;
    const Complex dlog = 1.0 / (2.0 * kI * tau_.v()) + 1.0 / p.zbar_minus_tau;
    return pre_ * xdf * dlog;
  }

private:
  // sum_{k >= 0} (A + 1/2 + k)^{-p} by midpoint Euler-Maclaurin, p = 2w + j.
  static Complex T(Complex a_pow, double A, Complex p) {
    // a_pow = A^{-p}
    return a_pow * (A / (p - 1.0) - p / (24.0 * A) +
                    7.0 * p * (p + 1.0) * (p + 2.0) / (5760.0 * A * A * A));
  }

  // Translations beyond the direct window on both sides, through the
  // expansion of g_w in powers of x and of (xi^2 + rho^2)^{-a} in rho/xi.
  Complex tail(double Y, double rho, double A_plus, double A_minus_signed) const {
    const double Ap = A_plus;
    const double Am = -A_minus_signed;
    const double v = tau_.v();
    const double r2 = rho * rho;
    const double lx = std::log(4.0 * Y * v);
    const Complex inv2iv = 1.0 / (2.0 * kI * v);
    Complex total = 0.0;
    const double xmax = 4.0 * Y * v / (std::min(Ap, Am) * std::min(Ap, Am) + r2);
    for (int m = 0; m <= kMaxSeries; ++m) {
      const Complex a = w_ + static_cast<double>(m);
      const Complex scale = coeff_[m] * std::exp(a * lx);
      // S1 = sum (xi^2 + rho^2)^{-a} over both tails
      Complex S1 = 0.0, S2 = 0.0;
      Complex bin1 = 1.0, bin2 = 1.0;  // binom(-a, l), binom(-a-1, l)
      double rl = 1.0;
      for (int l = 0; l < 60; ++l) {
        const Complex p1 = 2.0 * a + 2.0 * l;
        const Complex tp1 = T(std::exp(-p1 * std::log(Ap)), Ap, p1);
        const Complex tm1 = T(std::exp(-p1 * std::log(Am)), Am, p1);
        const Complex d1 = bin1 * rl * (tp1 + tm1);
        S1 += d1;
        Complex d2 = 0.0;
        if (mode_ == Mode::Raised) {
          const Complex q1 = p1 + 1.0, q2 = p1 + 2.0;
          const Complex tp_a = T(std::exp(-q1 * std::log(Ap)), Ap, q1);
          const Complex tp_b = T(std::exp(-q2 * std::log(Ap)), Ap, q2);
          const Complex tm_a = T(std::exp(-q1 * std::log(Am)), Am, q1);
          const Complex tm_b = T(std::exp(-q2 * std::log(Am)), Am, q2);
          d2 = bin2 * rl * ((tp_a + kI * rho * tp_b) - (tm_a - kI * rho * tm_b));
          S2 += d2;
        }
        if (l > 2 && std::abs(d1) + std::abs(d2) < 1e-18 * (std::abs(S1) + std::abs(S2))) break;
        bin1 *= (-a - static_cast<double>(l)) / static_cast<double>(l + 1);
        bin2 *= (-a - 1.0 - static_cast<double>(l)) / static_cast<double>(l + 1);
        rl *= r2;
      }
      Complex t;
      if (mode_ == Mode::Kernel)
        t = scale * S1;
      else
        t = scale * a * (inv2iv * S1 + S2);
      total += t;
      if (m > 1 && std::abs(t) < 1e-17 * std::abs(total)) break;
      if (m > 1 && std::pow(xmax, m) < 1e-18) break;
    }
    return pre_ * total;
  }

  Complex w_;
  HalfPlanePoint tau_;
  ResolventTruncation tr_;
  Mode mode_;
  Complex pre_;
  std::vector<Complex> coeff_;
};

// a d - b c = 1 for coprime (c, d)
UnimodularMatrix complete(std::int64_t c, std::int64_t d) {
  if (c == 0) return UnimodularMatrix::identity();
  // extended Euclid on (d, c): s d + t c = 1
  std::int64_t r0 = d, r1 = c, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 < 0) {
    s0 = -s0;
    t0 = -t0;
  }
  return {s0, -t0, c, d};
}

EvalResult resolvent_sum(Complex w, const HalfPlanePoint& z_in, const HalfPlanePoint& tau_in,
                         const ResolventTruncation& tr, Mode mode) {
  if (!(w.real() > 1.0)) throw DomainError("resolvent: direct sum needs Re w > 1");
  if (tr.radius < 1 || tr.translations < 1) throw ParameterError("ResolventTruncation: bad radius");
  const auto zr = modforms::reduce_to_fundamental_domain(z_in);
  const auto tr_tau = modforms::reduce_to_fundamental_domain(tau_in);
  const HalfPlanePoint z = zr.point;
  const HalfPlanePoint tau = tr_tau.point;
  const TranslationSum sum(w, tau, tr, mode);

  Complex total = 0.0;
  Complex ypow = 0.0;  // partial E_0 over the same cosets
  int cosets = 0;
  const auto R = static_cast<std::int64_t>(tr.radius);
  for (std::int64_t c = 0; c <= R; ++c) {
    for (std::int64_t d = -R; d <= R; ++d) {
      if (c == 0 && d != 1) continue;
      if (c * c + d * d > R * R) continue;
      if (c > 0 && std::gcd(c, d) != 1) continue;
      const HalfPlanePoint Z = complete(c, d).apply(z);
      total += sum(Z);
      ypow += std::exp(w * std::log(Z.v()));
      ++cosets;
    }
  }
  const Complex e0 = eisenstein::eval_E_realanalytic(0, w, z, {60, 1.0}).value;
  const double v = tau.v();
  const Complex rest = e0 - ypow;
  Complex corr;
  if (mode == Mode::Kernel)
    corr = -4.0 * kPi / (2.0 * w - 1.0) * std::exp((1.0 - w) * std::log(v)) * rest;
  else
    corr = 2.0 * kPi * kI * (w - 1.0) / (1.0 - 2.0 * w) * std::exp(-w * std::log(v)) * rest;

  EvalResult r;
  Complex value = total + corr;
  double err = std::abs(corr) * (4.0 * std::exp(-kTwoPi * v) + 4.0 * z.v() / static_cast<double>(R * R));
  if (mode == Mode::Raised) {
    const Complex f = std::pow(tr_tau.gamma.automorphy(tau_in), -2);
    value *= f;
    err *= std::abs(f);
  }
  r.value = checked(value, "resolvent");
  r.err_est = err;
  r.diagnostics["cosets"] = cosets;
  r.diagnostics["radius"] = tr.radius;
  r.diagnostics["tail_correction"] = std::abs(corr);
  if (err > tr.tolerance * std::max(1.0, std::abs(value)))
    throw ConvergenceError("resolvent: coset tail estimate exceeds tolerance");
  return r;
}

}  // namespace

HyperbolicDistanceData hyperbolic_distance(const HalfPlanePoint& z, const HalfPlanePoint& tau) {
  const double cosh_d = 1.0 + std::norm(z.value() - tau.value()) / (2.0 * z.v() * tau.v());
  return {cosh_d, make_pair(z, tau).x};
}

Complex gw(Complex w, const HalfPlanePoint& z, const HalfPlanePoint& tau) {
  const Pair p = make_pair(z, tau);
  if (p.one_minus_x <= 0.0) throw SingularityError("g_w: z = tau");
  Complex f, xdf;
  kernel_parts(w, p.x, f, xdf);
  return prefactor(w) * f;
}

Complex dgw(Complex w, const HalfPlanePoint& z, const HalfPlanePoint& tau) {
  const Pair p = make_pair(z, tau);
  if (p.one_minus_x <= 0.0) throw SingularityError("g_w: z = tau");
  Complex f, xdf;
  kernel_parts(w, p.x, f, xdf);
  return prefactor(w) * xdf * (1.0 / (2.0 * kI * tau.v()) + 1.0 / p.zbar_minus_tau);
}

PointPairKernelTerm kernel_term(Complex w, const UnimodularMatrix& m, const HalfPlanePoint& z,
                                const HalfPlanePoint& tau) {
  const HalfPlanePoint mz = m.apply(z);
  return {m, gw(w, mz, tau), dgw(w, mz, tau)};
}

EvalResult Gw_truncated(Complex w, const HalfPlanePoint& z, const HalfPlanePoint& tau,
                        const ResolventTruncation& tr) {
  return resolvent_sum(w, z, tau, tr, Mode::Kernel);
}

EvalResult calGw(Complex w, const HalfPlanePoint& z, const HalfPlanePoint& tau,
                 const ResolventTruncation& tr) {
  return resolvent_sum(w, z, tau, tr, Mode::Raised);
}

Complex extrapolate_to_one(const std::vector<Complex>& ws, const std::vector<Complex>& values) {
  if (ws.size() != values.size() || ws.empty())
    throw ParameterError("extrapolate_to_one: mismatched ladder");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    Complex li = 1.0;
    for (std::size_t j = 0; j < ws.size(); ++j)
      if (j != i) li *= (1.0 - ws[j]) / (ws[i] - ws[j]);
    acc += li * values[i];
  }
  return acc;
}

PropDGsReport verify_prop_dGs(const HalfPlanePoint& z, const HalfPlanePoint& tau,
                              const std::vector<Complex>& w_ladder, const ResolventTruncation& tr) {
  PropDGsReport rep;
  rep.ladder = w_ladder;
  for (const Complex w : w_ladder) rep.values.push_back(calGw(w, z, tau, tr).value);
  rep.extrapolated = extrapolate_to_one(rep.ladder, rep.values);
  rep.expected = -2.0 * kPi * kI * modforms::eval_Hzstar(z, tau);
  rep.rel_deviation = std::abs(rep.extrapolated - rep.expected) / std::abs(rep.expected);
  return rep;
}

}  // namespace glf::resolvent
