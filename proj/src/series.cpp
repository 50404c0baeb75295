#include "tamaripop/series.hpp"

#include <stdexcept>

namespace tamaripop {
namespace {

void require_same_order(const IntSeries& a, const IntSeries& b, const char* what) {
  if (a.order() != b.order())
    throw std::invalid_argument(std::string(what) + ": truncation orders differ (" + std::to_string(a.order()) +
                                " vs " + std::to_string(b.order()) + ")");
}

}  // namespace

IntSeries::IntSeries(std::size_t order, std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != order + 1)
    throw std::invalid_argument("IntSeries: expected " + std::to_string(order + 1) + " coefficients");
}

IntSeries IntSeries::one(std::size_t order) { return monomial(order, 0); }

IntSeries IntSeries::monomial(std::size_t order, std::size_t e, BigInt c) {
  IntSeries s(order);
  if (e <= order) s[e] = std::move(c);
  return s;
}

IntSeries add(const IntSeries& a, const IntSeries& b) {
  require_same_order(a, b, "add");
  IntSeries out(a.order());
  for (std::size_t e = 0; e <= a.order(); ++e) out[e] = a[e] + b[e];
  return out;
}

IntSeries subtract(const IntSeries& a, const IntSeries& b) {
  require_same_order(a, b, "subtract");
  IntSeries out(a.order());
  for (std::size_t e = 0; e <= a.order(); ++e) out[e] = a[e] - b[e];
  return out;
}

IntSeries multiply(const IntSeries& a, const IntSeries& b) {
  require_same_order(a, b, "multiply");
  IntSeries out(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= a.order(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

IntSeries reciprocal_one_minus(const IntSeries& s) {
  if (s[0] != 0) throw std::invalid_argument("reciprocal_one_minus: constant term must be zero");
  // r = 1 + s r, solved coefficient by coefficient.
  IntSeries r(s.order());
  r[0] = 1;
  for (std::size_t m = 1; m <= s.order(); ++m) {
    BigInt acc = 0;
    for (std::size_t j = 1; j <= m; ++j) acc += s[j] * r[m - j];
    r[m] = acc;
  }
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt catalan(unsigned n) { return binomial(2 * n, n) / (n + 1); }

BigInt motzkin(unsigned n) {
  std::vector<BigInt> m(n + 1);
  m[0] = 1;
  for (unsigned k = 0; k < n; ++k) {
    BigInt next = m[k];
    for (unsigned j = 0; j + 1 <= k; ++j) next += m[j] * m[k - 1 - j];
    m[k + 1] = next;
  }
  return m[n];
}

BigInt a055151(int n, int k) {
  if (n < 0 || k < 0 || 2 * k > n) return 0;
  const BigInt num = binomial(static_cast<unsigned>(2 * k), static_cast<unsigned>(k)) *
                     binomial(static_cast<unsigned>(n), static_cast<unsigned>(2 * k));
  if (num % (k + 1) != 0)
    throw std::logic_error("a055151: binom(2k,k) binom(n,2k) not divisible by k+1 at n=" + std::to_string(n) +
                           ", k=" + std::to_string(k));
  return num / (k + 1);
}

IntSeries h_series(int t, std::size_t order) {
  if (t < 1) throw std::invalid_argument("h_series: t must be at least 1");
  IntSeries h(order);
  for (std::size_t n = 1; n <= order; ++n) {
    if (n == 1) {
      h[1] = 1;
      continue;
    }
    BigInt v = 2 * h[n - 1];
    for (int j = 2; j <= t && static_cast<std::size_t>(j) < n; ++j) v += catalan(static_cast<unsigned>(j - 1)) * h[n - static_cast<std::size_t>(j)];
    h[n] = v;
  }
  return h;
}

IntSeries h_series_rational(int t, std::size_t order) {
  if (t < 1) throw std::invalid_argument("h_series_rational: t must be at least 1");
  IntSeries denom_tail = IntSeries::monomial(order, 1, 2);
  for (int j = 2; j <= t; ++j)
    denom_tail = add(denom_tail, IntSeries::monomial(order, static_cast<std::size_t>(j), catalan(static_cast<unsigned>(j - 1))));
  return multiply(IntSeries::monomial(order, 1), reciprocal_one_minus(denom_tail));
}

IntSeries g_series(int t, std::size_t order) {
  if (t < 1) throw std::invalid_argument("g_series: t must be at least 1");
  IntSeries tail(order);
  for (int n = 1; n <= t; ++n)
    tail = add(tail, IntSeries::monomial(order, static_cast<std::size_t>(n), catalan(static_cast<unsigned>(n - 1))));
  return multiply(IntSeries::monomial(order, 1), reciprocal_one_minus(tail));
}

IntSeries h_tilde_series(int t, std::size_t order) {
  IntSeries s(order);
  for (int n = 1; n <= t - 1; ++n)
    if (static_cast<std::size_t>(n) <= order) s[static_cast<std::size_t>(n)] = catalan(static_cast<unsigned>(n));
  return s;
}

std::vector<std::string> to_decimal_strings(const IntSeries& s) {
  std::vector<std::string> out;
  out.reserve(s.order() + 1);
  for (const auto& c : s.coeffs()) out.push_back(c.str());
  return out;
}

}  // namespace tamaripop
