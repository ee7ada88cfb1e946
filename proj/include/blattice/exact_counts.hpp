#pragma once

#include <span>
#include <vector>

#include "blattice/numbers.hpp"
#include "blattice/signed_partition.hpp"

namespace blattice {

/// Recurrence-built table of one of the count families; rows 0..max_n.
class CountTable {
 public:
  enum class Kind { stirling2, stirling1_signed, bell, dowling, n_no_zero };

  static CountTable build(Kind kind, int max_n);

  Kind kind() const { return kind_; }
  int max_n() const { return static_cast<int>(rows_.size()) - 1; }

  /// Triangular kinds take (n, k); linear kinds take (n).
  const BigInt& at(int n, int k = 0) const;

 private:
  Kind kind_ = Kind::stirling2;
  std::vector<std::vector<BigInt>> rows_;
};

BigInt stirling2(int n, int k);
BigInt stirling1_signed(int n, int k);
BigInt bell_number(int n);

/// |Pi_n^B|: choose the zero-block, then a zero-block-free partition of the rest.
BigInt dowling_number(int n);

/// Zero-block-free counts: N_n(k) = 2^(n-k) S(n,k) and N_n = sum_k N_n(k).
BigInt n_no_zero_by_pairs(int n, int k);
BigInt n_no_zero(int n);

/// Number of distinct partitions with the given shape:
/// (2n)!! / ((2 i0)!! 2^k prod i_a! prod m_s!), m_s the size multiplicities.
BigInt count_of_shape(const PartitionShape& shape);

/// All shapes at ground size n (zero half-size ascending, then sizes).
std::vector<PartitionShape> all_shapes(int n);

/// Partitions with exactly l block pairs meeting a partition of this shape
/// minimally. Coefficient extraction over (prod (1+x_a)^2 - 1)^(l-i0) *
/// prod (1+x_a)^(2 i0); zero outside i0 <= l <= n. The empty-product form is
/// exact for k = 0 and for l = i0 as well (l = 0 picks up the maximal
/// partition as a partner exactly when the shape is the minimal one).
BigInt nb_pi_l(const PartitionShape& shape, int l);
BigInt nb_pi_l(int n, int i0, std::span<const int> sizes, int l);  // any size order

/// Total partners over all l (minimally intersecting partitions).
BigInt nb_pi(const PartitionShape& shape);

/// Zero-block-free variants; shape must have i0 = 0.
BigInt nd_pi_l(const PartitionShape& shape, int l);
BigInt nd_pi_l(int n, std::span<const int> sizes, int l);
BigInt nd_pi(const PartitionShape& shape);

/// Ordered pairs of minimally intersecting partitions of {+-1..+-n}, and the
/// restriction to first components with zero half-size i0 and k pairs.
BigInt n2b_exact(int n);
BigInt n2b_exact_by(int i0, int k, int n);

/// Minimally intersecting r-tuples without zero-block:
/// sum_j N_j^r 2^(n-j) s(n,j), with the n = 0 value 1.
BigInt nd_r_exact(int n, int r);

/// Ordinary-partition baseline: partners of a partition with the given block
/// sizes, and r-tuples via sum_j B_j^r s(n,j).
BigInt na_pi(std::span<const int> block_sizes);
BigInt na_r_exact(int n, int r);

}  // namespace blattice
