#include "quotcount/invariants.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "quotcount/partitions.hpp"

namespace quotcount {

CurveSetup::CurveSetup(long long chi_y, int genus, int order, long long bps)
    : chi_y(chi_y), genus(genus), bps(bps), order(order) {
  if (genus < 0) throw std::invalid_argument("genus must be non-negative");
  if (order < 0) throw std::invalid_argument("order must be non-negative");
}

PowerSeries hilb_series(long long chi, int order) {
  return pow_int(macmahon(order), chi);
}

mpz_class config_space_euler(long long e, int r) {
  if (r < 0) throw std::invalid_argument("point count must be non-negative");
  mpz_class value = 1;
  for (int i = 0; i < r; ++i) value *= to_mpz(e - i);
  return value;
}

mpz_class chi_F(int j) {
  if (j < 0) throw std::invalid_argument("chi_F: negative index");
  static std::mutex guard;
  static std::vector<mpz_class> cache;
  std::lock_guard<std::mutex> lock(guard);
  if (static_cast<int>(cache.size()) <= j) {
    const int order = std::max(j, 16);
    const PowerSeries one_minus_q = PowerSeries::make({1, -1}, order);
    cache = mul(macmahon(order), inverse(one_minus_q)).coefficients();
  }
  return cache[static_cast<std::size_t>(j)];
}

mpz_class chi_quot_stratified(const CurveSetup& setup, int n) {
  if (n < 0 || n > setup.order)
    throw std::invalid_argument("n must lie in [0, order]");
  // Points away from the curve land in Y minus C.
  const PowerSeries hilb = hilb_series(setup.chi_y - setup.chi_curve(), n);
  mpq_class total = 0;
  for (int j = 0; j <= n; ++j) {
    const mpz_class& off_curve = hilb.coefficient(n - j);
    if (off_curve == 0) continue;
    for (const Partition& alpha : partitions_of(j)) {
      mpz_class term = off_curve * config_space_euler(setup.chi_curve(),
                                                      alpha.part_count());
      for (int part : alpha.parts()) term *= chi_F(part);
      total += mpq_class(term) / mpq_class(alpha.aut_order());
    }
  }
  if (total.get_den() != 1)
    throw std::logic_error("stratified sum failed to be integral");
  return total.get_num();
}

PowerSeries chi_quot_series(const CurveSetup& setup) {
  const long long exponent = 2 * static_cast<long long>(setup.genus) - 2;
  return mul(pow_int(macmahon(setup.order), setup.chi_y),
             binomial_series(-1, exponent, setup.order));
}

namespace {

PowerSeries scale(const PowerSeries& a, const mpz_class& factor) {
  std::vector<mpz_class> c = a.coefficients();
  for (mpz_class& x : c) x *= factor;
  return PowerSeries::make(std::move(c), a.order());
}

}  // namespace

PowerSeries weighted_chi_quot_series(const CurveSetup& setup) {
  const long long exponent = 2 * static_cast<long long>(setup.genus) - 2;
  const PowerSeries direct =
      mul(pow_int(substitute_neg(macmahon(setup.order)), setup.chi_y),
          binomial_series(+1, exponent, setup.order));
  if (direct != substitute_neg(chi_quot_series(setup)))
    throw std::logic_error("weighted series disagrees with its sign flip");
  return direct;
}

PowerSeries pt_series(const CurveSetup& setup) {
  const long long exponent = 2 * static_cast<long long>(setup.genus) - 2;
  return scale(binomial_series(+1, exponent, setup.order), to_mpz(setup.bps));
}

PowerSeries sym_series(const CurveSetup& setup) {
  const long long exponent = 2 * static_cast<long long>(setup.genus) - 2;
  return binomial_series(-1, exponent, setup.order);
}

PowerSeries dt_series_conjectural(const CurveSetup& setup) {
  return mul(pow_int(substitute_neg(macmahon(setup.order)), setup.chi_y),
             pt_series(setup));
}

InvariantReport check_wallcross(const CurveSetup& setup) {
  const PowerSeries route_a = dt_series_conjectural(setup);
  const PowerSeries route_b =
      scale(weighted_chi_quot_series(setup), to_mpz(setup.bps));
  InvariantReport report{setup, "wallcross", route_a.coefficients(), CrossCheck{}};
  CrossCheck& check = *report.cross_check;
  check.coefficients = route_b.coefficients();
  check.verdict = true;
  for (int n = 0; n <= setup.order; ++n) {
    const bool same = route_a.coefficient(n) == route_b.coefficient(n);
    check.agree.push_back(same);
    check.verdict = check.verdict && same;
  }
  return report;
}

PowerSeries local_model_series(int order) {
  if (order < 1) throw std::invalid_argument("order must be at least 1");
  const PowerSeries body =
      mul(substitute_neg(macmahon(order - 1)),
          inverse(PowerSeries::make({1, 1}, order - 1)));
  std::vector<mpz_class> shifted(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i < order; ++i)
    shifted[static_cast<std::size_t>(i) + 1] = body.coefficient(i);
  return PowerSeries::make(std::move(shifted), order);
}

}  // namespace quotcount
