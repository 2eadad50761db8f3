#include <cmath>
#include <limits>

#include "glf/specfun.hpp"

namespace glf::specfun {

Complex polylog(int ell, double x) {
  if (ell < 1) throw DomainError("polylog: only integer orders ell >= 1 are supported");
  const double frac = x - std::round(x);
  if (frac == 0.0) throw BranchError("polylog: e^{2 pi i x} = 1 is the branch point");
  const Complex zpt = std::exp(kI * (kTwoPi * frac));
  if (ell == 1) return -std::log(1.0 - zpt);

  // Li_ell(e^mu) = mu^{ell-1}/(ell-1)! (H_{ell-1} - log(-mu))
  //              + sum_{k != ell-1} zeta(ell-k) mu^k / k!,   |mu| <= pi.
  const Complex mu = kI * (kTwoPi * frac);
  double harmonic = 0.0;
  for (int k = 1; k < ell; ++k) harmonic += 1.0 / k;
  Complex sum{};
  Complex power = 1.0;  // mu^k / k!
  for (int k = 0; k < 200; ++k) {
    Complex term{};
    if (k == ell - 1) {
      term = power * (harmonic - std::log(-mu));
    } else {
      const int arg = ell - k;
      double z;
      if (arg >= 2) {
        z = zeta(static_cast<double>(arg)).real();
      } else if (arg == 0) {
        z = -0.5;
      } else {
        const int n = -arg;  // zeta(-n) = -B_{n+1}/(n+1), zero for even n >= 2
        z = (n % 2 == 0) ? 0.0 : -bernoulli_any(n + 1) / (n + 1);
      }
      term = z * power;
    }
    sum += term;
    if (k > ell + 4 && std::abs(term) < std::numeric_limits<double>::epsilon() * 1e-3 * std::abs(sum) &&
        (k - ell) % 2 == 1)
      break;
    power *= mu / static_cast<double>(k + 1);
  }
  return sum;
}

}  // namespace glf::specfun
