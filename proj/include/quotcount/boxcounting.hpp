#pragma once

#include <functional>
#include <string>
#include <vector>

namespace quotcount {

/// One recorded column of boxes: h boxes stacked at quadrant position (a,b).
struct Cell {
  int a = 0;
  int b = 0;
  int h = 0;

  bool operator==(const Cell&) const = default;
};

/// A box configuration given by its height function on the quadrant.
///
/// With leg=false this is a plain plane partition: heights weakly decrease
/// along both axes and the origin is an ordinary finite position.  With
/// leg=true the origin carries an infinite column (the leg) and is excluded
/// from the map; it imposes no bound on its neighbours (1,0) and (0,1).
/// Only positive heights are recorded, and volume() counts exactly the
/// boxes outside the leg.
class HeightConfig {
 public:
  /// Normalizes cells to the canonical (b,a) order and validates positivity,
  /// uniqueness and monotonicity; throws std::invalid_argument on violation.
  HeightConfig(bool leg, std::vector<Cell> cells);

  bool leg() const { return leg_; }
  int volume() const { return volume_; }

  /// Cells sorted by (b,a), the canonical serialization order.
  const std::vector<Cell>& cells() const { return cells_; }

  /// Height at (a,b); 0 when no entry is recorded.
  int height_at(int a, int b) const;

  /// Canonical text form: header "n=<volume> leg=<0|1>", then one line
  /// "a b h" per cell in (b,a) order, each line newline-terminated.
  std::string to_text() const;

  bool operator==(const HeightConfig&) const = default;

 private:
  bool leg_ = true;
  int volume_ = 0;
  std::vector<Cell> cells_;
};

/// Streams every one-leg configuration of volume n in the canonical
/// deterministic DFS order.  Throws std::invalid_argument for n < 0.
void for_each_one_leg(int n, const std::function<void(const HeightConfig&)>& visit);

/// Streams every plane partition of size n in the canonical order.
void for_each_plane_partition(int n, const std::function<void(const HeightConfig&)>& visit);

std::vector<HeightConfig> enumerate_one_leg(int n);
std::vector<HeightConfig> enumerate_plane_partitions(int n);

/// Leaf counts of the same searches; no configurations are materialized.
long long count_one_leg(int n);
long long count_plane_partitions(int n);

/// Signed local count (-1)^n * count_one_leg(n).
long long local_model_dt(int n);

}  // namespace quotcount
