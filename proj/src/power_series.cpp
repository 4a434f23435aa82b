#include "quotcount/power_series.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace quotcount {

PowerSeries::PowerSeries(int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, mpz_class(0));
}

PowerSeries PowerSeries::make(std::vector<mpz_class> coeffs, int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  if (coeffs.size() > static_cast<std::size_t>(order) + 1)
    throw std::invalid_argument("more coefficients than order+1");
  PowerSeries s(order);
  std::move(coeffs.begin(), coeffs.end(), s.coeffs_.begin());
  return s;
}

PowerSeries PowerSeries::one(int order) {
  PowerSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

const mpz_class& PowerSeries::coefficient(int n) const {
  if (n < 0 || n > order()) throw std::out_of_range("coefficient index out of range");
  return coeffs_[static_cast<std::size_t>(n)];
}

std::string PowerSeries::str() const {
  std::ostringstream out;
  for (int n = 0; n <= order(); ++n) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(n)];
    if (n == 0) {
      out << c.get_str();
    } else {
      out << (c >= 0 ? " + " : " - ") << mpz_class(abs(c)).get_str() << "*q^" << n;
    }
  }
  return out.str();
}

PowerSeries add(const PowerSeries& a, const PowerSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<mpz_class> c(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) c[n] = a.coefficient(n) + b.coefficient(n);
  return PowerSeries::make(std::move(c), order);
}

PowerSeries mul(const PowerSeries& a, const PowerSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<mpz_class> c(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) {
    const mpz_class& ai = a.coefficient(i);
    if (ai == 0) continue;
    for (int j = 0; i + j <= order; ++j) c[i + j] += ai * b.coefficient(j);
  }
  return PowerSeries::make(std::move(c), order);
}

PowerSeries inverse(const PowerSeries& a) {
  const mpz_class& c0 = a.coefficient(0);
  if (c0 != 1 && c0 != -1)
    throw std::domain_error("series is not invertible over the integers (constant term must be +1 or -1)");
  const int order = a.order();
  std::vector<mpz_class> b(static_cast<std::size_t>(order) + 1);
  b[0] = c0;  // 1/c0 == c0 for a unit
  for (int n = 1; n <= order; ++n) {
    mpz_class acc = 0;
    for (int k = 1; k <= n; ++k) acc += a.coefficient(k) * b[n - k];
    b[n] = -c0 * acc;
  }
  return PowerSeries::make(std::move(b), order);
}

PowerSeries pow_int(const PowerSeries& a, long long e) {
  PowerSeries result = PowerSeries::one(a.order());
  PowerSeries base = e < 0 ? inverse(a) : a;
  // Two's-complement negation in unsigned arithmetic also covers LLONG_MIN.
  unsigned long long k = e < 0 ? 0ULL - static_cast<unsigned long long>(e)
                               : static_cast<unsigned long long>(e);
  while (k > 0) {
    if (k & 1ULL) result = mul(result, base);
    k >>= 1ULL;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

PowerSeries substitute_neg(const PowerSeries& a) {
  std::vector<mpz_class> c(a.coefficients());
  for (std::size_t n = 1; n < c.size(); n += 2) c[n] = -c[n];
  return PowerSeries::make(std::move(c), a.order());
}

PowerSeries macmahon(int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  PowerSeries result = PowerSeries::one(order);
  // Factors with k > order are 1 at this truncation.
  for (int k = 1; k <= order; ++k) {
    std::vector<mpz_class> f(static_cast<std::size_t>(order) + 1);
    f[0] = 1;
    f[static_cast<std::size_t>(k)] = -1;
    result = mul(result, pow_int(PowerSeries::make(std::move(f), order), -static_cast<long long>(k)));
  }
  return result;
}

PowerSeries binomial_series(int sign, long long exponent, int order) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  std::vector<mpz_class> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1;
  if (order >= 1) c[1] = sign;
  return pow_int(PowerSeries::make(std::move(c), order), exponent);
}

mpz_class to_mpz(long long value) {
  // Routed through a decimal string: gmpxx has no long long constructor.
  return mpz_class(std::to_string(value), 10);
}

}  // namespace quotcount
