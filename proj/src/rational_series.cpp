#include "blattice/rational_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace blattice {

RationalSeries::RationalSeries(int order) {
  if (order < 0) throw std::invalid_argument("RationalSeries: negative order");
  coeffs_.assign(static_cast<size_t>(order) + 1, BigRat(0));
}

RationalSeries RationalSeries::from_coeffs(std::vector<BigRat> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("RationalSeries: need at least c_0");
  RationalSeries s(0);
  s.coeffs_ = std::move(coeffs);
  return s;
}

RationalSeries RationalSeries::exp(int order) {
  RationalSeries s(order);
  BigInt fact = 1;
  for (int j = 0; j <= order; ++j) {
    if (j > 0) fact *= j;
    s.coeffs_[j] = BigRat(1, fact);
  }
  return s;
}

const BigRat& RationalSeries::coeff(int j) const {
  if (j < 0 || j > order()) throw std::out_of_range("RationalSeries: coefficient index");
  return coeffs_[j];
}

void RationalSeries::set_coeff(int j, BigRat value) {
  if (j < 0 || j > order()) throw std::out_of_range("RationalSeries: coefficient index");
  coeffs_[j] = std::move(value);
}

RationalSeries RationalSeries::mul(const RationalSeries& other, int ord) const {
  RationalSeries out(ord);
  const int da = std::min(order(), ord);
  for (int i = 0; i <= da; ++i) {
    if (coeffs_[i] == 0) continue;
    const int db = std::min(other.order(), ord - i);
    for (int j = 0; j <= db; ++j) out.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return out;
}

RationalSeries RationalSeries::pow(int m, int ord) const {
  if (m < 0) throw std::invalid_argument("RationalSeries: negative power");
  RationalSeries acc(ord);
  acc.coeffs_[0] = 1;
  for (int i = 0; i < m; ++i) acc = acc.mul(*this, ord);
  return acc;
}

RationalSeries RationalSeries::compose(const RationalSeries& inner, int ord) const {
  if (inner.coeffs_[0] != 0)
    throw std::invalid_argument("RationalSeries: composition needs zero inner constant term");
  // Horner over the outer coefficients; inner^j has valuation >= j, so only
  // outer coefficients up to `ord` can contribute.
  const int top = std::min(order(), ord);
  RationalSeries acc(ord);
  for (int j = top; j >= 0; --j) {
    acc = acc.mul(inner, ord);
    acc.coeffs_[0] += coeffs_[j];
  }
  return acc;
}

RationalSeries RationalSeries::add(const RationalSeries& other) const {
  RationalSeries out(std::max(order(), other.order()));
  for (int j = 0; j <= order(); ++j) out.coeffs_[j] = coeffs_[j];
  for (int j = 0; j <= other.order(); ++j) out.coeffs_[j] += other.coeffs_[j];
  return out;
}

RationalSeries& RationalSeries::shift_const(const BigRat& c) {
  coeffs_[0] += c;
  return *this;
}

RationalSeries RationalSeries::scaled(const BigRat& s) const {
  RationalSeries out = *this;
  for (auto& c : out.coeffs_) c *= s;
  return out;
}

}  // namespace blattice
