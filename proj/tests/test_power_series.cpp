#include <catch2/catch.hpp>

#include <climits>
#include <vector>

#include "oracles.hpp"
#include "quotcount/power_series.hpp"

using quotcount::PowerSeries;

namespace {

PowerSeries from_ints(const std::vector<int>& values, int order) {
  std::vector<mpz_class> coeffs(values.begin(), values.end());
  return PowerSeries::make(std::move(coeffs), order);
}

std::vector<int> ints_of(const PowerSeries& s) {
  std::vector<int> out;
  for (const mpz_class& c : s.coefficients()) out.push_back(static_cast<int>(c.get_si()));
  return out;
}

}  // namespace

TEST_CASE("series construction and coefficient access") {
  const PowerSeries zero(3);
  CHECK(zero.order() == 3);
  CHECK(zero.coefficients() == std::vector<mpz_class>(4, mpz_class(0)));

  const PowerSeries padded = from_ints({1, 2}, 3);
  CHECK(padded.order() == 3);
  CHECK(padded.coefficient(1) == 2);
  CHECK(padded.coefficient(3) == 0);

  CHECK(PowerSeries::one(0).coefficient(0) == 1);

  CHECK_THROWS_AS(PowerSeries(-1), std::invalid_argument);
  CHECK_THROWS_AS(from_ints({1, 2, 3}, 1), std::invalid_argument);
  CHECK_THROWS_AS(padded.coefficient(-1), std::out_of_range);
  CHECK_THROWS_AS(padded.coefficient(4), std::out_of_range);

  CHECK(from_ints({1, -2, 0}, 2).str() == "1 - 2*q^1 + 0*q^2");
}

TEST_CASE("operations truncate to the smaller operand") {
  const PowerSeries a = from_ints({1, 1, 1, 1, 1, 1}, 5);
  const PowerSeries b = from_ints({1, 2, 3}, 2);
  CHECK(add(a, b).order() == 2);
  CHECK(mul(a, b).order() == 2);
  CHECK(ints_of(add(a, b)) == std::vector<int>{2, 3, 4});
  CHECK(ints_of(mul(a, b)) == std::vector<int>{1, 3, 6});
}

TEST_CASE("macmahon matches the plane-partition numbers") {
  CHECK(ints_of(quotcount::macmahon(5)) == std::vector<int>{1, 1, 3, 6, 13, 24});
  CHECK(ints_of(quotcount::macmahon(0)) == std::vector<int>{1});
  // First four coefficients, as independently fixed by the box enumerator.
  const PowerSeries m3 = quotcount::macmahon(3);
  for (int n = 0; n <= 3; ++n)
    CHECK(m3.coefficient(n) == quotcount::to_mpz(quotcount::count_plane_partitions(n)));
  CHECK_THROWS_AS(quotcount::macmahon(-1), std::invalid_argument);
}

TEST_CASE("inverse solves the triangular system") {
  const PowerSeries m = quotcount::macmahon(3);
  CHECK(ints_of(inverse(m)) == std::vector<int>{1, -1, -2, -1});
  CHECK(mul(m, inverse(m)) == PowerSeries::one(3));

  const PowerSeries negative_unit = from_ints({-1, 4, 7}, 2);
  CHECK(mul(negative_unit, inverse(negative_unit)) == PowerSeries::one(2));

  CHECK_THROWS_AS(inverse(from_ints({2, 1}, 1)), std::domain_error);
  CHECK_THROWS_AS(inverse(from_ints({0, 1}, 1)), std::domain_error);
}

TEST_CASE("integer powers") {
  CHECK(ints_of(pow_int(from_ints({1, 1}, 2), 2)) == std::vector<int>{1, 2, 1});
  CHECK(ints_of(pow_int(from_ints({1, -1}, 3), -2)) == std::vector<int>{1, 2, 3, 4});
  CHECK(pow_int(from_ints({5, 3}, 1), 0) == PowerSeries::one(1));
  CHECK_THROWS_AS(pow_int(from_ints({2, 1}, 1), -1), std::domain_error);
  // The most negative exponent must not overflow on negation.
  CHECK(pow_int(PowerSeries::one(0), LLONG_MIN) == PowerSeries::one(0));
}

TEST_CASE("binomial series") {
  CHECK(ints_of(quotcount::binomial_series(+1, 2, 2)) == std::vector<int>{1, 2, 1});
  CHECK(ints_of(quotcount::binomial_series(-1, -2, 3)) == std::vector<int>{1, 2, 3, 4});
  CHECK(ints_of(quotcount::binomial_series(-1, 0, 2)) == std::vector<int>{1, 0, 0});
  CHECK_THROWS_AS(quotcount::binomial_series(2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(quotcount::binomial_series(1, 1, -1), std::invalid_argument);
}

TEST_CASE("to_mpz covers the full long long range") {
  CHECK(quotcount::to_mpz(0) == 0);
  CHECK(quotcount::to_mpz(LLONG_MAX).get_str() == std::to_string(LLONG_MAX));
  CHECK(quotcount::to_mpz(LLONG_MIN).get_str() == std::to_string(LLONG_MIN));
}

TEST_CASE("ring axioms hold on randomized series") {
  auto rng = oracles::fixed_rng(1);
  for (int i = 0; i < 1000; ++i) {
    const PowerSeries a = oracles::random_series(rng);
    const PowerSeries b = oracles::random_series(rng);
    const PowerSeries c = oracles::random_series(rng);
    INFO("instance " << i << ": a=" << a.str() << " b=" << b.str() << " c=" << c.str());
    REQUIRE(add(a, b) == add(b, a));
    REQUIRE(add(add(a, b), c) == add(a, add(b, c)));
    REQUIRE(mul(a, b) == mul(b, a));
    REQUIRE(mul(mul(a, b), c) == mul(a, mul(b, c)));
    REQUIRE(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    REQUIRE(mul(a, PowerSeries::one(a.order())) == a);
    REQUIRE(add(a, PowerSeries(a.order())) == a);
  }
}

TEST_CASE("inverse is a two-sided inverse on randomized units") {
  auto rng = oracles::fixed_rng(2);
  for (int i = 0; i < 1000; ++i) {
    const PowerSeries u = oracles::random_unit_series(rng);
    INFO("instance " << i << ": u=" << u.str());
    REQUIRE(mul(u, inverse(u)) == PowerSeries::one(u.order()));
    REQUIRE(mul(inverse(u), u) == PowerSeries::one(u.order()));
    REQUIRE(inverse(inverse(u)) == u);
  }
}

TEST_CASE("substitute_neg is an involution and a ring homomorphism") {
  auto rng = oracles::fixed_rng(3);
  for (int i = 0; i < 1000; ++i) {
    const PowerSeries a = oracles::random_series(rng);
    const PowerSeries b = oracles::random_series(rng);
    INFO("instance " << i << ": a=" << a.str() << " b=" << b.str());
    REQUIRE(substitute_neg(substitute_neg(a)) == a);
    REQUIRE(substitute_neg(add(a, b)) == add(substitute_neg(a), substitute_neg(b)));
    REQUIRE(substitute_neg(mul(a, b)) == mul(substitute_neg(a), substitute_neg(b)));
  }
}
