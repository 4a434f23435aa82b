#include "quotcount/boxcounting.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace quotcount {

namespace {

// Stands in for the infinite origin column of the one-leg model; every
// bound it enters is capped by the remaining budget before use.
constexpr int k_unbounded = std::numeric_limits<int>::max();

bool by_row_then_column(const Cell& x, const Cell& y) {
  return std::tie(x.b, x.a) < std::tie(y.b, y.a);
}

}  // namespace

HeightConfig::HeightConfig(bool leg, std::vector<Cell> cells)
    : leg_(leg), cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end(), by_row_then_column);
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const Cell& c = cells_[i];
    if (c.a < 0 || c.b < 0)
      throw std::invalid_argument("cell outside the quadrant");
    if (c.h <= 0) throw std::invalid_argument("recorded heights must be positive");
    if (leg_ && c.a == 0 && c.b == 0)
      throw std::invalid_argument("origin is the leg and carries no entry");
    if (i > 0 && cells_[i - 1].a == c.a && cells_[i - 1].b == c.b)
      throw std::invalid_argument("duplicate cell");
    volume_ += c.h;
  }
  for (const Cell& c : cells_) {
    const bool left_is_origin = leg_ && c.a == 1 && c.b == 0;
    if (c.a >= 1 && !left_is_origin && c.h > height_at(c.a - 1, c.b))
      throw std::invalid_argument("heights must weakly decrease along a");
    const bool below_is_origin = leg_ && c.a == 0 && c.b == 1;
    if (c.b >= 1 && !below_is_origin && c.h > height_at(c.a, c.b - 1))
      throw std::invalid_argument("heights must weakly decrease along b");
  }
}

int HeightConfig::height_at(int a, int b) const {
  for (const Cell& c : cells_)
    if (c.a == a && c.b == b) return c.h;
  return 0;
}

std::string HeightConfig::to_text() const {
  std::ostringstream out;
  out << "n=" << volume_ << " leg=" << (leg_ ? 1 : 0) << '\n';
  for (const Cell& c : cells_) out << c.a << ' ' << c.b << ' ' << c.h << '\n';
  return out.str();
}

namespace {

// Column-major DFS over height functions.  columns[a][b] holds the heights
// fixed so far; in the one-leg model columns[0][0] is the k_unbounded
// sentinel for the leg.  Heights at each position are tried ascending from
// zero, and zero closes the column, so the emission order is deterministic.
template <typename Sink>
class Search {
 public:
  Search(bool leg, Sink& sink) : leg_(leg), sink_(sink) {}

  void run(int budget) { column(0, budget); }

 private:
  void column(int a, int budget) {
    columns_.emplace_back();
    int first_b = 0;
    if (leg_ && a == 0) {
      columns_.back().push_back(k_unbounded);
      first_b = 1;
    }
    cell(a, first_b, k_unbounded, budget);
    columns_.pop_back();
  }

  void cell(int a, int b, int below, int budget) {
    int left = k_unbounded;
    if (a >= 1) {
      const std::vector<int>& prev = columns_[static_cast<std::size_t>(a) - 1];
      left = b < static_cast<int>(prev.size()) ? prev[static_cast<std::size_t>(b)] : 0;
    }
    const int hi = std::min({budget, left, below});
    for (int h = 0; h <= hi; ++h) {
      if (h == 0) {
        close_column(a, budget);
        continue;
      }
      columns_.back().push_back(h);
      cell(a, b + 1, h, budget - h);
      columns_.back().pop_back();
    }
  }

  void close_column(int a, int budget) {
    if (budget == 0) {
      sink_.leaf(leg_, columns_);
      return;
    }
    // An empty column pins every later one to zero: dead end while budget
    // remains.  The one-leg column 0 never reads as empty (it carries the
    // sentinel) and indeed does not constrain (1,0).
    if (columns_.back().empty()) return;
    column(a + 1, budget);
  }

  bool leg_;
  Sink& sink_;
  std::vector<std::vector<int>> columns_;
};

struct CountSink {
  long long count = 0;
  void leaf(bool, const std::vector<std::vector<int>>&) { ++count; }
};

struct EmitSink {
  const std::function<void(const HeightConfig&)>& visit;
  void leaf(bool leg, const std::vector<std::vector<int>>& columns) {
    std::vector<Cell> cells;
    for (std::size_t a = 0; a < columns.size(); ++a)
      for (std::size_t b = 0; b < columns[a].size(); ++b)
        if (columns[a][b] != k_unbounded)
          cells.push_back({static_cast<int>(a), static_cast<int>(b), columns[a][b]});
    visit(HeightConfig(leg, std::move(cells)));
  }
};

void check_volume(int n) {
  if (n < 0) throw std::invalid_argument("volume must be non-negative");
}

}  // namespace

void for_each_one_leg(int n, const std::function<void(const HeightConfig&)>& visit) {
  check_volume(n);
  EmitSink sink{visit};
  Search<EmitSink>(true, sink).run(n);
}

void for_each_plane_partition(int n,
                              const std::function<void(const HeightConfig&)>& visit) {
  check_volume(n);
  EmitSink sink{visit};
  Search<EmitSink>(false, sink).run(n);
}

std::vector<HeightConfig> enumerate_one_leg(int n) {
  std::vector<HeightConfig> all;
  for_each_one_leg(n, [&](const HeightConfig& c) { all.push_back(c); });
  return all;
}

std::vector<HeightConfig> enumerate_plane_partitions(int n) {
  std::vector<HeightConfig> all;
  for_each_plane_partition(n, [&](const HeightConfig& c) { all.push_back(c); });
  return all;
}

long long count_one_leg(int n) {
  check_volume(n);
  CountSink sink;
  Search<CountSink>(true, sink).run(n);
  return sink.count;
}

long long count_plane_partitions(int n) {
  check_volume(n);
  CountSink sink;
  Search<CountSink>(false, sink).run(n);
  return sink.count;
}

long long local_model_dt(int n) {
  const long long c = count_one_leg(n);
  return n % 2 == 0 ? c : -c;
}

}  // namespace quotcount
