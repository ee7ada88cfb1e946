#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "blattice/numbers.hpp"

namespace blattice {

/// Multivariate polynomial over the integers with a hard per-variable degree
/// cap; monomials exceeding any cap are dropped on the spot. Dropping is sound
/// for the generating functions built here: every factor has nonnegative
/// coefficients, so a discarded high monomial can never feed back into a
/// retained one.
class BoundedPoly {
 public:
  explicit BoundedPoly(std::vector<int> caps);  // the zero polynomial

  static BoundedPoly constant(std::vector<int> caps, const BigInt& c);
  static BoundedPoly one_plus_var(std::vector<int> caps, int var);  // 1 + x_var

  int num_vars() const { return static_cast<int>(caps_.size()); }
  const std::vector<int>& caps() const { return caps_; }
  size_t term_count() const { return coeffs_.size(); }

  BigInt coeff(std::span<const int> idx) const;  // throws when idx exceeds caps
  void add_term(std::span<const int> idx, const BigInt& c);

  BoundedPoly mul(const BoundedPoly& other) const;  // throws on cap mismatch
  BoundedPoly pow(int m) const;
  BoundedPoly& sub_const(const BigInt& c);
  BoundedPoly add(const BoundedPoly& other) const;

  void for_each_term(const std::function<void(std::span<const int>, const BigInt&)>& fn) const;

  friend bool operator==(const BoundedPoly&, const BoundedPoly&) = default;

 private:
  std::vector<int> caps_;
  std::vector<std::uint64_t> strides_;     // mixed-radix layout over caps_+1
  std::map<std::uint64_t, BigInt> coeffs_;  // zero entries are erased

  std::uint64_t encode(std::span<const int> idx) const;
  void decode(std::uint64_t key, std::vector<int>& idx) const;
};

inline BoundedPoly poly_mul(const BoundedPoly& a, const BoundedPoly& b) { return a.mul(b); }
inline BoundedPoly poly_pow(const BoundedPoly& a, int m) { return a.pow(m); }
inline BoundedPoly poly_sub_const(BoundedPoly a, const BigInt& c) { return a.sub_const(c); }
inline BigInt poly_coeff(const BoundedPoly& a, std::span<const int> idx) { return a.coeff(idx); }

/// prod_{alpha} (1 + x_alpha) under the given caps.
BoundedPoly all_vars_one_plus_product(const std::vector<int>& caps);

}  // namespace blattice
