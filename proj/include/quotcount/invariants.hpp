#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "quotcount/power_series.hpp"

namespace quotcount {

/// Input bundle for the curve-counting operations: an ambient threefold
/// with Euler characteristic chi_y containing a smooth curve of the given
/// genus, together with the BPS number of the curve (1 in the rigid case)
/// and the truncation order shared by all series.
struct CurveSetup {
  long long chi_y;
  int genus;
  long long bps;
  int order;

  /// Throws std::invalid_argument unless genus >= 0 and order >= 0.
  CurveSetup(long long chi_y, int genus, int order, long long bps = 1);

  /// chi(C) = 2 - 2g, used everywhere the curve's Euler characteristic
  /// enters a formula.
  long long chi_curve() const { return 2 - 2 * static_cast<long long>(genus); }
};

/// Second route through a computation: its coefficients, the per-index
/// comparison against the primary route, and the conjunction of those.
struct CrossCheck {
  std::vector<mpz_class> coefficients;
  std::vector<bool> agree;
  bool verdict = false;
};

/// A labelled coefficient sequence for n = 0..order, optionally paired
/// with an independently computed second route.
struct InvariantReport {
  CurveSetup params;
  std::string label;
  std::vector<mpz_class> coefficients;
  std::optional<CrossCheck> cross_check;
};

/// Generating series of Hilbert-scheme Euler characteristics of a space
/// with Euler characteristic chi: M(q)^chi truncated at order.
PowerSeries hilb_series(long long chi, int order);

/// Euler characteristic of the configuration space of r distinct labelled
/// points on a space with Euler characteristic e: the falling factorial
/// e(e-1)...(e-r+1), with value 1 at r = 0.
mpz_class config_space_euler(long long e, int r);

/// Number of torus-fixed points of the j-th punctual Quot scheme of the
/// local model: coefficient j of M(q)/(1-q).  Cached; matches the direct
/// box enumeration.
mpz_class chi_F(int j);

/// chi(Q^n_C) as the stratified sum over the boxes carried away from the
/// curve: partitions alpha of j weight the configuration spaces of their
/// support points, the punctual contributions multiply, and the leftover
/// n-j points roam the open complement of the curve.  Accumulated as exact
/// rationals; the total is asserted integral (std::logic_error otherwise,
/// which would indicate a bug, never bad input).  Requires 0 <= n <= order.
mpz_class chi_quot_stratified(const CurveSetup& setup, int n);

/// Closed form of the same numbers: M(q)^{chi_y} (1-q)^{2g-2}.
PowerSeries chi_quot_series(const CurveSetup& setup);

/// Behrend-weighted counterpart M(-q)^{chi_y} (1+q)^{2g-2}, computed both
/// directly and as the sign flip of chi_quot_series; the two routes are
/// asserted equal (std::logic_error on mismatch).
PowerSeries weighted_chi_quot_series(const CurveSetup& setup);

/// Local stable-pairs series bps * (1+q)^{2g-2}.
PowerSeries pt_series(const CurveSetup& setup);

/// Symmetric-product series sum chi(Sym^n C) q^n = (1-q)^{2g-2}.
PowerSeries sym_series(const CurveSetup& setup);

/// Local Donaldson-Thomas series M(-q)^{chi_y} * pt_series; conjectural in
/// general, a theorem for rigid curves.
PowerSeries dt_series_conjectural(const CurveSetup& setup);

/// Wall-crossing verifier: route A is dt_series_conjectural, route B is
/// bps times the weighted series.  The report carries both sequences and
/// per-coefficient verdicts; all-true exactly when the identity holds.
InvariantReport check_wallcross(const CurveSetup& setup);

/// q * M(-q)/(1+q): signed counts of the punctual local model, with the
/// variable shifted by one.  Requires order >= 1.
PowerSeries local_model_series(int order);

}  // namespace quotcount
