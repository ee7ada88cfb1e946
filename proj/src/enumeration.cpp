#include "blattice/enumeration.hpp"

#include <string>

namespace blattice {

namespace {

void check_bound(int n, int bound) {
  if (n < 0) throw std::invalid_argument("enumeration: n must be >= 0");
  if (n > bound)
    throw BoundError("enumeration: n = " + std::to_string(n) + " exceeds bound " +
                     std::to_string(bound));
}

struct BGenerator {
  int n;
  bool allow_zero;
  const PartitionVisitor& visit;
  std::vector<int> zero;
  std::vector<std::vector<int>> pairs;

  void run() { place(1); }

  void place(int a) {
    if (a > n) {
      visit(SignedPartition::make(n, zero, pairs));
      return;
    }
    if (allow_zero) {
      zero.push_back(a);
      place(a + 1);
      zero.pop_back();
    }
    // index-based: recursion appends to `pairs`, which may reallocate
    for (size_t i = 0; i < pairs.size(); ++i) {
      pairs[i].push_back(a);
      place(a + 1);
      pairs[i].back() = -a;
      place(a + 1);
      pairs[i].pop_back();
    }
    pairs.push_back({a});
    place(a + 1);
    pairs.pop_back();
  }
};

}  // namespace

void for_each_b_partition(int n, const PartitionVisitor& visit, int bound) {
  check_bound(n, bound);
  BGenerator{n, true, visit, {}, {}}.run();
}

void for_each_b_partition_no_zero(int n, const PartitionVisitor& visit, int bound) {
  check_bound(n, bound);
  BGenerator{n, false, visit, {}, {}}.run();
}

void for_each_a_partition(int n, const PartitionVisitor& visit, int bound) {
  check_bound(n, bound);
  std::vector<std::vector<int>> blocks;
  auto place = [&](auto&& self, int a) -> void {
    if (a > n) {
      visit(SignedPartition::make(n, {}, blocks));
      return;
    }
    for (size_t i = 0; i < blocks.size(); ++i) {
      blocks[i].push_back(a);
      self(self, a + 1);
      blocks[i].pop_back();
    }
    blocks.push_back({a});
    self(self, a + 1);
    blocks.pop_back();
  };
  place(place, 1);
}

std::vector<SignedPartition> enumerate_b(int n, int bound) {
  std::vector<SignedPartition> out;
  for_each_b_partition(n, [&](const SignedPartition& p) { out.push_back(p); }, bound);
  return out;
}

std::vector<SignedPartition> enumerate_b_no_zero(int n, int bound) {
  std::vector<SignedPartition> out;
  for_each_b_partition_no_zero(n, [&](const SignedPartition& p) { out.push_back(p); }, bound);
  return out;
}

std::vector<SignedPartition> enumerate_a(int n, int bound) {
  std::vector<SignedPartition> out;
  for_each_a_partition(n, [&](const SignedPartition& p) { out.push_back(p); }, bound);
  return out;
}

std::vector<SignedPartition> enumerate_by_shape(const PartitionShape& shape, int bound) {
  if (!shape.consistent()) throw std::invalid_argument("enumerate_by_shape: inconsistent shape");
  std::vector<SignedPartition> out;
  for_each_b_partition(
      shape.n, [&](const SignedPartition& p) { if (p.shape() == shape) out.push_back(p); },
      bound);
  return out;
}

}  // namespace blattice
