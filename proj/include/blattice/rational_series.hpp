#pragma once

#include <vector>

#include "blattice/numbers.hpp"

namespace blattice {

/// Truncated power series sum c_j x^j with exact rational coefficients.
/// Callers apply the EGF convention (coefficient a_n / n!) themselves.
class RationalSeries {
 public:
  explicit RationalSeries(int order);  // zero series of the given order
  static RationalSeries from_coeffs(std::vector<BigRat> coeffs);
  static RationalSeries exp(int order);  // sum x^j / j!

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigRat& coeff(int j) const;
  void set_coeff(int j, BigRat value);

  RationalSeries mul(const RationalSeries& other, int order) const;
  RationalSeries pow(int m, int order) const;

  /// this(inner), truncated. Requires inner constant term zero.
  RationalSeries compose(const RationalSeries& inner, int order) const;

  RationalSeries add(const RationalSeries& other) const;  // order = max of the two
  RationalSeries& shift_const(const BigRat& c);            // add c to coefficient 0
  RationalSeries scaled(const BigRat& s) const;

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

 private:
  std::vector<BigRat> coeffs_;
};

inline RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b, int order) {
  return a.mul(b, order);
}
inline RationalSeries series_pow(const RationalSeries& a, int m, int order) {
  return a.pow(m, order);
}
inline RationalSeries series_compose(const RationalSeries& f, const RationalSeries& g,
                                     int order) {
  return f.compose(g, order);
}

}  // namespace blattice
