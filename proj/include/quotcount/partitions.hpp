#pragma once

#include <vector>

#include <gmpxx.h>

namespace quotcount {

/// An integer partition: a weakly decreasing sequence of positive parts.
/// The empty partition (weight zero) is allowed.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless parts are positive and weakly
  /// decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }

  /// Sum of the parts.
  int weight() const;

  /// Number of parts, counted with multiplicity.
  int part_count() const { return static_cast<int>(parts_.size()); }

  /// Order of the automorphism group permuting equal parts: the product of
  /// m! over the multiplicities m of the distinct part values.
  mpz_class aut_order() const;

  bool operator==(const Partition&) const = default;

  /// Renders as "(3,1,1)"; the empty partition as "()".
  std::string str() const;

 private:
  std::vector<int> parts_;
};

/// All partitions of j in reverse-lexicographic order, so partitions_of(4)
/// starts with (4) and ends with (1,1,1,1).  partitions_of(0) is {()}.
/// Throws std::invalid_argument for negative j.
std::vector<Partition> partitions_of(int j);

}  // namespace quotcount
