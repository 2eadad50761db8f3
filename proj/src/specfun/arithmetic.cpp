#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

#include "glf/specfun.hpp"

namespace glf::specfun {
namespace {

constexpr int kMaxExactBernoulli = 32;

struct BernoulliTable {
  std::array<Rational, kMaxExactBernoulli + 1> exact{};
  std::array<double, kMaxExactBernoulli + 1> value{};
};

// Akiyama-Tanigawa in exact rationals.
const BernoulliTable& bernoulli_table() {
  static const BernoulliTable table = [] {
    using boost::multiprecision::cpp_rational;
    BernoulliTable t;
    std::array<cpp_rational, kMaxExactBernoulli + 1> a;
    for (int m = 0; m <= kMaxExactBernoulli; ++m) {
      a[m] = cpp_rational(1, m + 1);
      for (int j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
      cpp_rational b = a[0];
      if (m == 1) b = -b;  // B_1 = -1/2
      t.exact[m] = {static_cast<std::int64_t>(boost::multiprecision::numerator(b)),
                    static_cast<std::int64_t>(boost::multiprecision::denominator(b))};
      t.value[m] = static_cast<double>(t.exact[m].num) / static_cast<double>(t.exact[m].den);
    }
    return t;
  }();
  return table;
}

}  // namespace

Rational bernoulli_rational(int k) {
  if (k < 0 || k > kMaxExactBernoulli) throw DomainError("bernoulli_rational: 0 <= k <= 32");
  return bernoulli_table().exact[k];
}

double bernoulli(int k) {
  if (k < 0 || k > kMaxExactBernoulli) throw DomainError("bernoulli: 0 <= k <= 32");
  return bernoulli_table().value[k];
}

double bernoulli_any(int k) {
  if (k < 0) throw DomainError("bernoulli_any: k >= 0");
  if (k <= kMaxExactBernoulli) return bernoulli(k);
  if (k % 2 == 1) return 0.0;
  // B_{2j} = (-1)^{j+1} 2 (2j)! zeta(2j) / (2 pi)^{2j}
  double zeta_k = 0.0;
  for (int n = 40; n >= 1; --n) zeta_k += std::pow(static_cast<double>(n), -k);
  const double log_mag = std::log(2.0) + std::lgamma(k + 1.0) + std::log(zeta_k) - k * std::log(kTwoPi);
  const double sign = ((k / 2) % 2 == 1) ? 1.0 : -1.0;
  return sign * std::exp(log_mag);
}

Complex rising_factorial(Complex a, int ell) {
  if (ell < 0) throw DomainError("rising_factorial: ell >= 0");
  Complex p = 1.0;
  for (int j = 0; j < ell; ++j) p *= a + static_cast<double>(j);
  return p;
}

std::uint64_t divisor_sigma(int ell, std::uint64_t n) {
  if (n < 1) throw DomainError("divisor_sigma: n >= 1");
  if (ell < 0) throw DomainError("divisor_sigma: ell >= 0");
  auto power = [ell](std::uint64_t d) {
    std::uint64_t p = 1;
    for (int i = 0; i < ell; ++i)
      if (__builtin_mul_overflow(p, d, &p)) throw OverflowError("divisor_sigma: d^ell overflows 64 bits");
    return p;
  };
  std::uint64_t total = 0;
  auto add = [&total](std::uint64_t v) {
    if (__builtin_add_overflow(total, v, &total)) throw OverflowError("divisor_sigma: sum overflows 64 bits");
  };
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    add(power(d));
    if (d != n / d) add(power(n / d));
  }
  return total;
}

}  // namespace glf::specfun
