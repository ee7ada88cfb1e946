#include "blattice/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace blattice {

IntervalValue::IntervalValue(BigRat lo_, BigRat hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo > hi) throw std::invalid_argument("IntervalValue: lo > hi");
}

std::optional<BigInt> IntervalValue::unique_integer() const {
  const BigInt c = ceil_rat(lo);
  if (BigRat(c) > hi) return std::nullopt;     // no integer inside
  if (BigRat(c + 1) <= hi) return std::nullopt;  // more than one
  return c;
}

IntervalValue IntervalValue::operator+(const IntervalValue& o) const {
  return IntervalValue(lo + o.lo, hi + o.hi);
}

IntervalValue IntervalValue::operator*(const IntervalValue& o) const {
  const BigRat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
  return IntervalValue(std::min(std::min(a, b), std::min(c, d)),
                       std::max(std::max(a, b), std::max(c, d)));
}

IntervalValue IntervalValue::scaled(const BigRat& s) const {
  if (s >= 0) return IntervalValue(lo * s, hi * s);
  return IntervalValue(hi * s, lo * s);
}

IntervalValue exp_interval(const BigRat& x, const BigRat& eps) {
  if (eps <= 0) throw std::invalid_argument("exp_interval: eps must be positive");
  BigRat sum = 0;
  BigRat term = 1;
  const BigRat ax = x < 0 ? BigRat(-x) : x;
  for (int j = 0;; ++j) {
    sum += term;
    term = term * x / (j + 1);
    BigRat aterm = term < 0 ? BigRat(-term) : term;
    if (x <= 0) {
      // Signs alternate and |terms| decrease once j + 1 > |x|: the next term
      // brackets the remainder.
      if (BigRat(j + 1) > ax && 2 * aterm < eps)
        return IntervalValue(sum - aterm, sum + aterm);
    } else {
      // Once the term ratio x / (j + 2) stays <= 1/2 the tail is below twice
      // the next term.
      if (2 * ax < BigRat(j + 2) && 4 * aterm < eps)
        return IntervalValue(sum, sum + 2 * aterm);
    }
    if (j > 1000000) throw std::runtime_error("exp_interval: did not converge");
  }
}

IntervalValue exp_neg_half_pow(int r, const BigRat& eps) {
  if (r < 1) throw std::invalid_argument("exp_neg_half_pow: r must be >= 1");
  return exp_interval(BigRat(-r, 2), eps);
}

}  // namespace blattice
