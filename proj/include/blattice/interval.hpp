#pragma once

#include <optional>

#include "blattice/numbers.hpp"

namespace blattice {

/// Exact rational enclosure [lo, hi] of a real value.
struct IntervalValue {
  BigRat lo;
  BigRat hi;

  IntervalValue() = default;
  IntervalValue(BigRat lo_, BigRat hi_);
  static IntervalValue point(const BigRat& v) { return IntervalValue(v, v); }

  BigRat width() const { return hi - lo; }
  bool contains(const BigRat& v) const { return lo <= v && v <= hi; }
  bool intersects(const IntervalValue& other) const {
    return lo <= other.hi && other.lo <= hi;
  }

  /// The integer in [lo, hi] when there is exactly one; nullopt otherwise.
  std::optional<BigInt> unique_integer() const;

  IntervalValue operator+(const IntervalValue& o) const;
  IntervalValue operator*(const IntervalValue& o) const;
  IntervalValue scaled(const BigRat& s) const;
};

/// Enclosure of e^x for rational x with width < eps: alternating Taylor tail
/// for x <= 0, ratio-majorized tail for x > 0.
IntervalValue exp_interval(const BigRat& x, const BigRat& eps);

/// Enclosure of e^{-r/2}, r >= 1, width < eps.
IntervalValue exp_neg_half_pow(int r, const BigRat& eps);

}  // namespace blattice
