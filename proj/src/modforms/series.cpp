#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <limits>

#include "glf/modforms.hpp"
#include "glf/specfun.hpp"

namespace glf::modforms {

using boost::multiprecision::cpp_int;

FourierSeries::FourierSeries(int weight, std::vector<double> coeffs,
                             std::function<double(int)> log_majorant, double v_min)
    : weight_(weight), coeffs_(std::move(coeffs)), log_majorant_(std::move(log_majorant)),
      v_min_(v_min) {
  if (weight < 0 || weight % 2 != 0) throw ParameterError("FourierSeries: weight must be even >= 0");
  if (coeffs_.empty() || !(v_min > 0.0)) throw ParameterError("FourierSeries: empty or bad v_min");
}

double FourierSeries::tail_bound(double v) const {
  const int N = truncation_order();
  double sum = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  for (int n = N + 1; n < N + 200000; ++n) {
    const double term = std::exp(log_majorant_(n) - kTwoPi * n * v);
    sum += term;
    if (term < prev && term <= 1e-18 * sum) break;
    if (term == 0.0 && prev == 0.0) break;
    prev = term;
  }
  return sum;
}

EvalResult FourierSeries::eval(const HalfPlanePoint& tau) const {
  if (tau.v() < v_min_)
    throw DomainError("FourierSeries::eval: Im tau below v_min of the series");
  const Complex q = std::exp(kTwoPi * kI * tau.value());
  Complex acc = 0.0;
  double mag = 0.0;
  for (int n = truncation_order(); n >= 0; --n) {
    acc = acc * q + coeffs_[n];
    mag = mag * std::abs(q) + std::abs(coeffs_[n]);
  }
  EvalResult r;
  r.value = acc;
  const double tail = tail_bound(tau.v());
  r.err_est = tail + 4.0 * std::numeric_limits<double>::epsilon() * mag;
  r.diagnostics["tail_bound"] = tail;
  r.diagnostics["truncation_order"] = truncation_order();
  if (tail > 1e-12 * std::max(1.0, std::abs(acc)))
    throw AccuracyError("FourierSeries::eval: truncation tail exceeds tolerance");
  return r;
}

namespace {

std::vector<cpp_int> eisenstein_big(int k, int order) {
  const auto b = specfun::bernoulli_rational(k);
  // -2k / B_k is an integer for k in {2, 4, 6}
  const std::int64_t scale = -2 * k * b.den / b.num;
  std::vector<cpp_int> c(order + 1);
  c[0] = 1;
  for (int n = 1; n <= order; ++n) {
    cpp_int s = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) s += boost::multiprecision::pow(cpp_int(d), k - 1);
    c[n] = scale * s;
  }
  return c;
}

std::vector<cpp_int> mul(const std::vector<cpp_int>& a, const std::vector<cpp_int>& b, int order) {
  std::vector<cpp_int> c(order + 1, 0);
  for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// sum p(n) q^n = prod (1 - q^n)^{-1}
std::vector<cpp_int> partitions(int order) {
  std::vector<cpp_int> p(order + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= order; ++part)
    for (int n = part; n <= order; ++n) p[n] += p[n - part];
  return p;
}

std::vector<double> to_double(const std::vector<cpp_int>& c) {
  std::vector<double> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i].convert_to<double>();
  return out;
}

// Exact q J coefficients: E4^3 prod (1 - q^n)^{-24} - 744 q.
std::vector<cpp_int> qj_big(int order) {
  const auto e4 = eisenstein_big(4, order);
  auto num = mul(mul(e4, e4, order), e4, order);
  const auto p = partitions(order);
  std::vector<cpp_int> inv = {1};
  std::vector<cpp_int> p2 = mul(p, p, order);        // ^2
  std::vector<cpp_int> p8 = mul(mul(p2, p2, order), mul(p2, p2, order), order);
  inv = mul(mul(p8, p8, order), p8, order);          // ^24
  auto c = mul(num, inv, order);
  c[1] -= 744;
  if (c[1] != 0) throw AccuracyError("qj_series: constant term of J is not zero");
  return c;
}

}  // namespace

const FourierSeries& e2_series() {
  static const FourierSeries s(2, to_double(eisenstein_big(2, kDefaultOrder)),
                               [](int n) {
                                 const double ln = std::log(static_cast<double>(n));
                                 return std::log(24.0) + ln + std::log1p(ln);
                               },
                               kDefaultVmin);
  return s;
}

const FourierSeries& e4_series() {
  static const FourierSeries s(4, to_double(eisenstein_big(4, kDefaultOrder)),
                               [](int n) {
                                 return std::log(240.0 * 1.2020569031595942) +
                                        3.0 * std::log(static_cast<double>(n));
                               },
                               kDefaultVmin);
  return s;
}

const FourierSeries& e6_series() {
  static const FourierSeries s(6, to_double(eisenstein_big(6, kDefaultOrder)),
                               [](int n) {
                                 return std::log(504.0 * 1.0369277551433699) +
                                        5.0 * std::log(static_cast<double>(n));
                               },
                               kDefaultVmin);
  return s;
}

// Coefficients of J satisfy c(m) <= exp(4 pi sqrt m); checked on the table in
// the unit tests.
const FourierSeries& qj_series() {
  static const FourierSeries s(0, to_double(qj_big(kDefaultOrder)),
                               [](int n) { return 4.0 * kPi * std::sqrt(static_cast<double>(n)); },
                               kDefaultVmin);
  return s;
}

// q (E4^2 E6/Delta - J) = -theta(q J) with theta = q d/dq, so its n-th
// coefficient is -n times that of q J.
const FourierSeries& qd_series() {
  static const FourierSeries s = [] {
    const auto big = qj_big(kDefaultOrder);
    std::vector<cpp_int> c(big.size());
    for (std::size_t n = 0; n < big.size(); ++n) c[n] = -static_cast<long>(n) * big[n];
    return FourierSeries(0, to_double(c),
                         [](int n) {
                           return std::log(static_cast<double>(n)) +
                                  4.0 * kPi * std::sqrt(static_cast<double>(n));
                         },
                         kDefaultVmin);
  }();
  return s;
}

namespace exact {

namespace {
std::vector<Int> narrow(const std::vector<cpp_int>& c) {
  static const cpp_int lim = (cpp_int(1) << 126);
  std::vector<Int> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (abs(c[i]) >= lim) throw OverflowError("exact q-series: coefficient exceeds 128 bits");
    const bool neg = c[i] < 0;
    cpp_int m = neg ? cpp_int(-c[i]) : c[i];
    const auto lo = static_cast<unsigned long long>(m & cpp_int(0xFFFFFFFFFFFFFFFFull));
    const auto hi = static_cast<unsigned long long>(m >> 64);
    Int v = (static_cast<Int>(hi) << 64) | static_cast<Int>(lo);
    out[i] = neg ? -v : v;
  }
  return out;
}
}  // namespace

std::vector<Int> eisenstein(int k, int order) {
  if (k < 2 || k % 2 != 0 || k > 14) throw ParameterError("exact::eisenstein: k in {2,...,14}");
  return narrow(eisenstein_big(k, order));
}

std::vector<Int> delta(int order) {
  // q prod (1 - q^n)^24 by repeated multiplication of the full product.
  std::vector<cpp_int> p(order + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= order; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (int i = order; i >= n; --i) p[i] -= p[i - n];
  std::vector<cpp_int> d(order + 1, 0);
  for (int i = 1; i <= order; ++i) d[i] = p[i - 1];
  return narrow(d);
}

std::vector<Int> multiply(const std::vector<Int>& a, const std::vector<Int>& b) {
  const std::size_t order = std::min(a.size(), b.size());
  std::vector<Int> c(order, 0);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; i + j < order; ++j) {
      Int t;
      if (__builtin_mul_overflow(a[i], b[j], &t) || __builtin_add_overflow(c[i + j], t, &c[i + j]))
        throw OverflowError("exact::multiply: 128-bit overflow");
    }
  return c;
}

}  // namespace exact

}  // namespace glf::modforms
