#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "blattice/signed_partition.hpp"

namespace blattice {

/// Thrown when an enumeration or oracle request exceeds its configured bound.
class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultEnumerationBound = 7;

using PartitionVisitor = std::function<void(const SignedPartition&)>;

/// Visit every partition of {+-1..+-n} once, in canonical generation order
/// (element a = 1..n goes to the zero-block, an existing pair with either
/// sign, or a fresh pair). Throws BoundError when n > bound.
void for_each_b_partition(int n, const PartitionVisitor& visit,
                          int bound = kDefaultEnumerationBound);
void for_each_b_partition_no_zero(int n, const PartitionVisitor& visit,
                                  int bound = kDefaultEnumerationBound);

/// Ordinary partitions of {1..n} in restricted-growth order, embedded as
/// zero-block-free partitions with all-positive representatives.
void for_each_a_partition(int n, const PartitionVisitor& visit,
                          int bound = kDefaultEnumerationBound);

std::vector<SignedPartition> enumerate_b(int n, int bound = kDefaultEnumerationBound);
std::vector<SignedPartition> enumerate_b_no_zero(int n, int bound = kDefaultEnumerationBound);
std::vector<SignedPartition> enumerate_a(int n, int bound = kDefaultEnumerationBound);

/// Exactly the partitions of the given shape. Throws std::invalid_argument
/// for an inconsistent shape, BoundError when shape.n > bound.
std::vector<SignedPartition> enumerate_by_shape(const PartitionShape& shape,
                                                int bound = kDefaultEnumerationBound);

}  // namespace blattice
