#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace quotcount {

/// Truncated formal power series in one variable q with exact integer
/// coefficients. A series of order N stores the coefficients of
/// q^0, ..., q^N and nothing else; every operation truncates its result
/// to the smaller operand order, so precision is never silently extended.
///
/// Values are immutable after construction and all operations are pure,
/// so series can be shared freely across threads.
class PowerSeries {
 public:
  /// The constant zero series of the given order.
  explicit PowerSeries(int order);

  /// Build a series from the coefficients of q^0.. (padded with zeros up
  /// to the order). Throws std::invalid_argument if order is negative or
  /// more than order+1 coefficients are supplied.
  static PowerSeries make(std::vector<mpz_class> coeffs, int order);

  /// The constant series 1 at the given order.
  static PowerSeries one(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of q^n. Throws std::out_of_range unless 0 <= n <= order.
  const mpz_class& coefficient(int n) const;

  const std::vector<mpz_class>& coefficients() const { return coeffs_; }

  bool operator==(const PowerSeries& other) const = default;

  /// "c0 + c1*q + c2*q^2 + ..." with explicit signs, for diagnostics.
  std::string str() const;

 private:
  std::vector<mpz_class> coeffs_;
};

/// Coefficient-wise sum, truncated to min(order(a), order(b)).
PowerSeries add(const PowerSeries& a, const PowerSeries& b);

/// Cauchy product, truncated to min(order(a), order(b)).
PowerSeries mul(const PowerSeries& a, const PowerSeries& b);

/// Exact e-th power for any integer e; e = 0 gives the constant 1.
/// Negative exponents require constant term +1 or -1 and throw
/// std::domain_error otherwise.
PowerSeries pow_int(const PowerSeries& a, long long e);

/// Multiplicative inverse up to the truncation order. Requires constant
/// term +1 or -1 (throws std::domain_error otherwise).
PowerSeries inverse(const PowerSeries& a);

/// The substitution q -> -q: negates every odd coefficient. An involution
/// and a ring homomorphism.
PowerSeries substitute_neg(const PowerSeries& a);

/// MacMahon's function M(q) = prod_{k>=1} (1 - q^k)^{-k}, truncated at
/// the given order. Coefficient n is the number of plane partitions of n.
PowerSeries macmahon(int order);

/// (1 + sign*q)^exponent for sign = +1 or -1 and any integer exponent.
PowerSeries binomial_series(int sign, long long exponent, int order);

/// Exact conversion covering the full long long range (gmpxx itself only
/// converts from long).
mpz_class to_mpz(long long value);

inline PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) { return add(a, b); }
inline PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) { return mul(a, b); }

}  // namespace quotcount
