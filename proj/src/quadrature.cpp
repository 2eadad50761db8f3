#include "glf/quadrature.hpp"

#include <algorithm>
#include <array>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cassert>
#include <queue>
#include <sstream>

namespace glf::quad {
namespace {

struct Rule {
  std::array<double, 11> x{};   // Kronrod abscissae, x[0] = 0
  std::array<double, 11> wk{};  // Kronrod weights
  std::array<double, 11> wg{};  // Gauss weights on the odd Kronrod nodes, 0 elsewhere
};

const Rule& rule() {
  static const Rule r = [] {
    Rule out;
    const auto& kx = boost::math::quadrature::gauss_kronrod<double, 21>::abscissa();
    const auto& kw = boost::math::quadrature::gauss_kronrod<double, 21>::weights();
    const auto& gx = boost::math::quadrature::gauss<double, 10>::abscissa();
    const auto& gw = boost::math::quadrature::gauss<double, 10>::weights();
    for (std::size_t i = 0; i < 11; ++i) {
      out.x[i] = kx[i];
      out.wk[i] = kw[i];
    }
    for (std::size_t j = 0; j < gx.size(); ++j) {
      for (std::size_t i = 0; i < 11; ++i) {
        if (std::abs(kx[i] - gx[j]) < 1e-14) out.wg[i] = gw[j];
      }
    }
    return out;
  }();
  return r;
}

struct Panel {
  double a, b;
  Complex value;
  double err;
};

Panel eval_panel(const Integrand& f, double a, double b, int& evals) {
  const Rule& r = rule();
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  Complex fc = f(c);
  Complex k = r.wk[0] * fc;
  Complex g = r.wg[0] * fc;
  for (std::size_t i = 1; i < 11; ++i) {
    const double dx = h * r.x[i];
    const Complex s = f(c - dx) + f(c + dx);
    k += r.wk[i] * s;
    g += r.wg[i] * s;
  }
  evals += 21;
  k *= h;
  g *= h;
  if (!is_finite(k)) throw AccuracyError("quadrature: non-finite integrand value");
  // QUADPACK-style sharpening of the raw |K - G| estimate.
  double raw = std::abs(k - g);
  double err = raw;
  double scale = std::abs(k);
  if (raw > 0 && scale > 0) {
    err = scale * std::min(1.0, std::pow(200.0 * raw / scale, 1.5));
    err = std::max(err, 50.0 * std::numeric_limits<double>::epsilon() * scale);
  }
  return {a, b, k, err};
}

}  // namespace

Result integrate(const Integrand& f, double a, double b, const Options& opt,
                 std::span<const double> breaks) {
  Result res;
  if (a == b) {
    res.converged = true;
    return res;
  }
  double sign = 1.0;
  if (b < a) {
    std::swap(a, b);
    sign = -1.0;
  }
  std::vector<double> pts{a};
  for (double p : breaks)
    if (p > a && p < b) pts.push_back(p);
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<Panel> panels;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    panels.push_back(eval_panel(f, pts[i], pts[i + 1], res.evaluations));

  auto totals = [&] {
    Complex v{};
    double e = 0;
    for (const auto& p : panels) {
      v += p.value;
      e += p.err;
    }
    return std::pair{v, e};
  };

  auto [value, err] = totals();
  while (err > std::max(opt.abs_tol, opt.rel_tol * std::abs(value))) {
    if (res.subdivisions >= opt.max_subdiv) break;
    auto worst = std::max_element(panels.begin(), panels.end(),
                                  [](const Panel& x, const Panel& y) { return x.err < y.err; });
    const double mid = 0.5 * (worst->a + worst->b);
    if (!(mid > worst->a && mid < worst->b)) break;
    Panel left = eval_panel(f, worst->a, mid, res.evaluations);
    Panel right = eval_panel(f, mid, worst->b, res.evaluations);
    *worst = left;
    panels.insert(worst + 1, right);
    ++res.subdivisions;
    std::tie(value, err) = totals();
  }
  res.value = sign * value;
  res.err_est = err;
  res.converged = err <= std::max(opt.abs_tol, opt.rel_tol * std::abs(value));
  return res;
}

Result integrate_or_throw(const Integrand& f, double a, double b, const Options& opt,
                          std::span<const double> breaks) {
  Result r = integrate(f, a, b, opt, breaks);
  if (!r.converged) {
    std::ostringstream os;
    os << "quadrature on [" << a << ", " << b << "] missed tolerance: err " << r.err_est
       << " after " << r.subdivisions << " subdivisions";
    throw AccuracyError(os.str());
  }
  return r;
}

}  // namespace glf::quad
