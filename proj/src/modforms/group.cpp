#include <cmath>
#include <string>

#include "glf/modforms.hpp"

namespace glf::modforms {

HalfPlanePoint::HalfPlanePoint(double u, double v) : u_(u), v_(v) {
  if (!std::isfinite(u) || !std::isfinite(v) || !(v > 0.0))
    throw DomainError("HalfPlanePoint: need finite u and v > 0, got v = " + std::to_string(v));
}

UnimodularMatrix::UnimodularMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
  const __int128 det = static_cast<__int128>(a) * d - static_cast<__int128>(b) * c;
  if (det != 1) throw ParameterError("UnimodularMatrix: determinant must be 1");
}

Complex UnimodularMatrix::automorphy(const HalfPlanePoint& tau) const {
  return static_cast<double>(c_) * tau.value() + static_cast<double>(d_);
}

HalfPlanePoint UnimodularMatrix::apply(const HalfPlanePoint& tau) const {
  // Im(gamma tau) = v / |c tau + d|^2 keeps the image strictly in H.
  const Complex den = automorphy(tau);
  const double n2 = std::norm(den);
  const Complex num = static_cast<double>(a_) * tau.value() + static_cast<double>(b_);
  const double u = (num * std::conj(den)).real() / n2;
  return {u, tau.v() / n2};
}

UnimodularMatrix UnimodularMatrix::operator*(const UnimodularMatrix& r) const {
  return {a_ * r.a_ + b_ * r.c_, a_ * r.b_ + b_ * r.d_, c_ * r.a_ + d_ * r.c_,
          c_ * r.b_ + d_ * r.d_};
}

Reduction reduce_to_fundamental_domain(const HalfPlanePoint& tau) {
  UnimodularMatrix gamma = UnimodularMatrix::identity();
  HalfPlanePoint p = tau;
  for (int iter = 0; iter < 10000; ++iter) {
    const double n = std::floor(p.u() + 0.5);
    if (n != 0.0) {
      const auto shift = static_cast<std::int64_t>(n);
      const UnimodularMatrix t{1, -shift, 0, 1};
      p = HalfPlanePoint(p.u() - n, p.v());
      gamma = t * gamma;
    }
    if (std::norm(p.value()) >= 1.0 - 1e-15) return {p, gamma};
    p = UnimodularMatrix::S().apply(p);
    gamma = UnimodularMatrix::S() * gamma;
  }
  throw ConvergenceError("reduce_to_fundamental_domain: no convergence");
}

Complex slash(const Function& f, int k, const UnimodularMatrix& gamma, const HalfPlanePoint& tau) {
  return std::pow(gamma.automorphy(tau), -k) * f(gamma.apply(tau));
}

}  // namespace glf::modforms
