#include "quotcount/partitions.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace quotcount {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

mpz_class Partition::aut_order() const {
  mpz_class order = 1;
  std::size_t i = 0;
  while (i < parts_.size()) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    mpz_class factorial;
    mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(j - i));
    order *= factorial;
    i = j;
  }
  return order;
}

std::string Partition::str() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out << ',';
    out << parts_[i];
  }
  out << ')';
  return out.str();
}

namespace {

void extend(std::vector<int>& stack, int remaining, int cap,
            std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(stack);
    return;
  }
  for (int part = std::min(cap, remaining); part >= 1; --part) {
    stack.push_back(part);
    extend(stack, remaining - part, part, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int j) {
  if (j < 0) throw std::invalid_argument("partitions_of: negative weight");
  std::vector<Partition> out;
  std::vector<int> stack;
  extend(stack, j, j, out);
  return out;
}

}  // namespace quotcount
