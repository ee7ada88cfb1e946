#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace blattice {

/// The "type" of a partition of {+-1..+-n}: zero-block half-size together
/// with the multiset of block-pair representative sizes (stored ascending).
struct PartitionShape {
  int n = 0;
  int zero_half_size = 0;       // 0 when there is no zero-block
  std::vector<int> pair_sizes;  // ascending; every entry >= 1

  PartitionShape() = default;
  PartitionShape(int n_, int zero_half, std::vector<int> sizes);

  int num_pairs() const { return static_cast<int>(pair_sizes.size()); }
  bool consistent() const;
  std::string to_string() const;  // "i0:s1,s2,..."

  friend bool operator==(const PartitionShape&, const PartitionShape&) = default;
  friend auto operator<=>(const PartitionShape&, const PartitionShape&) = default;
};

/// A partition of {+-1,...,+-n} closed under global negation with at most one
/// self-negating (zero) block, held in canonical form:
///  - the zero-block is stored as its positive half, ascending;
///  - each block pair {B, -B} is stored as the representative whose element of
///    least absolute value is positive, elements ordered by absolute value;
///  - representatives are ordered by their leading element.
/// Setting every element positive and leaving the zero-block empty gives the
/// degenerate mode used for ordinary partitions of {1..n}.
class SignedPartition {
 public:
  SignedPartition() = default;  // the empty partition (n = 0)

  /// Validates and canonicalizes raw blocks. `zero` is the positive half of
  /// the zero-block; `pairs` may list either member of each block pair (or
  /// both). Throws std::invalid_argument on overlap, missing or out-of-range
  /// elements, or a block equal to (or meeting) its own negation.
  static SignedPartition make(int n, const std::vector<int>& zero,
                              const std::vector<std::vector<int>>& pairs);

  static SignedPartition minimal(int n);  // n singleton pairs
  static SignedPartition maximal(int n);  // one zero-block covering [1, n]

  int ground_size() const { return n_; }
  const std::vector<int>& zero_block() const { return zero_; }
  const std::vector<std::vector<int>>& pair_blocks() const { return pairs_; }
  bool has_zero_block() const { return !zero_.empty(); }
  int num_pairs() const { return static_cast<int>(pairs_.size()); }

  PartitionShape shape() const;
  bool is_minimal() const;

  /// Greatest partition refining both; blocks are the nonempty pairwise
  /// intersections of full blocks. Throws on ground-set mismatch.
  SignedPartition meet(const SignedPartition& other) const;

  /// True iff every full block of *this is contained in a full block of
  /// `coarser`. Direct subset test, independent of meet().
  bool refines(const SignedPartition& coarser) const;

  std::string serialize() const;
  static SignedPartition parse(const std::string& text);

  friend bool operator==(const SignedPartition&, const SignedPartition&) = default;
  friend auto operator<=>(const SignedPartition&, const SignedPartition&) = default;

 private:
  int n_ = 0;
  std::vector<int> zero_;
  std::vector<std::vector<int>> pairs_;

  // code per a in [1..n]: 0 = zero-block, +-(b+1) = pair block b, sign of a in it
  std::vector<int> labels() const;
  static SignedPartition from_labels(int n, std::span<const int> code);
};

SignedPartition meet(const SignedPartition& a, const SignedPartition& b);

/// True iff the iterated meet of the tuple is the minimal partition.
/// Throws std::invalid_argument for an empty tuple or mixed ground sets.
bool is_minimally_intersecting(std::span<const SignedPartition> tuple);

}  // namespace blattice
