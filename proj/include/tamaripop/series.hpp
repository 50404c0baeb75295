#pragma once

// Exact integer sequences and truncated power series.

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tamaripop {

using BigInt = boost::multiprecision::cpp_int;

/// A power series in z truncated after z^order. Operands of every binary
/// operation must share the order; nothing is ever re-truncated implicitly.
class IntSeries {
 public:
  explicit IntSeries(std::size_t order) : coeffs_(order + 1) {}
  IntSeries(std::size_t order, std::vector<BigInt> coeffs);

  static IntSeries zero(std::size_t order) { return IntSeries(order); }
  static IntSeries one(std::size_t order);
  /// c * z^e (zero if e > order).
  static IntSeries monomial(std::size_t order, std::size_t e, BigInt c = 1);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const BigInt& operator[](std::size_t e) const { return coeffs_.at(e); }
  BigInt& operator[](std::size_t e) { return coeffs_.at(e); }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

  friend bool operator==(const IntSeries&, const IntSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Throws std::invalid_argument on an order mismatch.
IntSeries add(const IntSeries& a, const IntSeries& b);
IntSeries subtract(const IntSeries& a, const IntSeries& b);
IntSeries multiply(const IntSeries& a, const IntSeries& b);

/// 1 / (1 - s). Throws std::invalid_argument unless s has zero constant term.
IntSeries reciprocal_one_minus(const IntSeries& s);

BigInt binomial(unsigned n, unsigned k);

/// binom(2n, n) / (n + 1).
BigInt catalan(unsigned n);

/// M_{n+1} = M_n + sum_{k<n} M_k M_{n-1-k}, M_0 = 1.
BigInt motzkin(unsigned n);

/// binom(2k, k) binom(n, 2k) / (k + 1); zero outside 0 <= 2k <= n.
BigInt a055151(int n, int k);

/// sum_{n>=1} h_t(n) z^n from h(n) = 2h(n-1) + sum_{j=2}^{t} C_{j-1} h(n-j), h(1) = 1.
IntSeries h_series(int t, std::size_t order);

/// The same series expanded as z / (1 - 2z - sum_{j=2}^{t} C_{j-1} z^j).
IntSeries h_series_rational(int t, std::size_t order);

/// z / (1 - sum_{n=1}^{t} C_{n-1} z^n).
IntSeries g_series(int t, std::size_t order);

/// sum_{n=1}^{t-1} C_n z^n.
IntSeries h_tilde_series(int t, std::size_t order);

std::vector<std::string> to_decimal_strings(const IntSeries& s);

}  // namespace tamaripop
