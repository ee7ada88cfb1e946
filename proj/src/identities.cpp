#include "blattice/identities.hpp"

#include <stdexcept>

#include "blattice/analytic_counts.hpp"
#include "blattice/exact_counts.hpp"
#include "blattice/interval.hpp"

namespace blattice {

namespace {

IdentityReport compare_series(std::string name, const RationalSeries& lhs,
                              const RationalSeries& rhs) {
  IdentityReport report{std::move(name), true, {}};
  for (int j = 0; j <= lhs.order(); ++j) {
    if (lhs.coeff(j) != rhs.coeff(j)) {
      report.passed = false;
      report.details.push_back("coefficient " + std::to_string(j) + ": lhs " +
                               decimal_string(lhs.coeff(j), 6) + " rhs " +
                               decimal_string(rhs.coeff(j), 6));
    }
  }
  return report;
}

}  // namespace

std::pair<RationalSeries, RationalSeries> canfield_a_sides(int r, int order) {
  if (r < 1 || order < 0)
    throw std::invalid_argument("canfield_a_sides: need r >= 1, order >= 0");
  RationalSeries mr(order);
  for (int n = 0; n <= order; ++n) mr.set_coeff(n, BigRat(na_r_exact(n, r), factorial(n)));
  RationalSeries inner = RationalSeries::exp(order);
  inner.shift_const(-1);
  const RationalSeries lhs = mr.compose(inner, order);
  RationalSeries rhs(order);
  for (int n = 0; n <= order; ++n)
    rhs.set_coeff(n, BigRat(pow_int(bell_number(n), r), factorial(n)));
  return {lhs, rhs};
}

IdentityReport check_canfield_a(int r, int order) {
  auto [lhs, rhs] = canfield_a_sides(r, order);
  return compare_series(
      "egf-compose ordinary r=" + std::to_string(r) + " order=" + std::to_string(order), lhs,
      rhs);
}

std::pair<RationalSeries, RationalSeries> canfield_d_sides(int r, int order) {
  if (r < 1 || order < 0)
    throw std::invalid_argument("canfield_d_sides: need r >= 1, order >= 0");
  RationalSeries mr(order);
  for (int n = 0; n <= order; ++n) mr.set_coeff(n, BigRat(nd_r_exact(n, r), factorial(n)));
  // (e^{2x} - 1) / 2 = sum_{n>=1} 2^{n-1} x^n / n!
  RationalSeries inner(order);
  for (int n = 1; n <= order; ++n)
    inner.set_coeff(n, BigRat(BigInt(1) << (n - 1), factorial(n)));
  const RationalSeries lhs = mr.compose(inner, order);
  RationalSeries rhs(order);
  for (int n = 0; n <= order; ++n)
    rhs.set_coeff(n, BigRat(pow_int(n_no_zero(n), r), factorial(n)));
  return {lhs, rhs};
}

IdentityReport check_canfield_d(int r, int order) {
  auto [lhs, rhs] = canfield_d_sides(r, order);
  return compare_series(
      "egf-compose zero-free r=" + std::to_string(r) + " order=" + std::to_string(order), lhs,
      rhs);
}

IdentityReport check_wilf_consistency(int max_n) {
  IdentityReport report{"stirling-form vs series, r in {2,3}, n <= " + std::to_string(max_n),
                        true, {}};
  for (int r = 2; r <= 3; ++r) {
    for (int n = 0; n <= max_n; ++n) {
      const SeriesResult a = pittel_nar_series(n, r);
      if (!a.recovered_integer || *a.recovered_integer != na_r_exact(n, r)) {
        report.passed = false;
        report.details.push_back("ordinary n=" + std::to_string(n) + " r=" + std::to_string(r));
      }
      const SeriesResult d = ndr_series(n, r);
      if (!d.recovered_integer || *d.recovered_integer != nd_r_exact(n, r)) {
        report.passed = false;
        report.details.push_back("zero-free n=" + std::to_string(n) + " r=" + std::to_string(r));
      }
    }
  }
  return report;
}

IdentityReport check_half_e_identity(int l, const BigRat& eps) {
  if (l < 0 || eps <= 0)
    throw std::invalid_argument("check_half_e_identity: need l >= 0, eps > 0");
  IdentityReport report{"alternating half-e sum, l = " + std::to_string(l), false, {}};
  // terms C(k, l) / (2k)!! for k >= l alternate in sign with ratio
  // 1 / (2 (k + 1 - l)) <= 1/2, so consecutive partial sums bracket the value.
  BigRat sum = 0;
  int sign = 1;
  BigRat abs_term;
  int k = l;
  do {
    abs_term = BigRat(binomial(k, l), double_factorial_even(2 * k));
    sum += sign * abs_term;
    sign = -sign;
    ++k;
  } while (4 * abs_term >= eps);
  const IntervalValue lhs(sum - abs_term, sum + abs_term);
  const IntervalValue rhs =
      exp_interval(BigRat(-1, 2), eps / 4).scaled(BigRat(1, double_factorial_even(2 * l)));
  const bool widths_ok = lhs.width() < eps / 2 && rhs.width() < eps / 2;
  report.passed = widths_ok && lhs.intersects(rhs);
  if (!report.passed)
    report.details.push_back("lhs [" + decimal_string(lhs.lo, 12) + ", " +
                             decimal_string(lhs.hi, 12) + "] rhs [" +
                             decimal_string(rhs.lo, 12) + ", " + decimal_string(rhs.hi, 12) +
                             "]");
  return report;
}

IdentityReport check_bell_polynomial_identity(int n, const BigRat& x, const BigRat& eps) {
  if (n < 0 || eps <= 0)
    throw std::invalid_argument("check_bell_polynomial_identity: need n >= 0, eps > 0");
  if (x <= 0) throw std::invalid_argument("check_bell_polynomial_identity: need x > 0");
  IdentityReport report{"bell polynomial at n = " + std::to_string(n), false, {}};

  BigRat lhs = 0;
  BigRat xpow = 1;
  for (int k = 0; k <= n; ++k) {
    lhs += BigRat(stirling2(n, k)) * xpow;
    xpow *= x;
  }

  // e^{-x} sum_k k^n x^k / k!, positive terms, ratio ((k+1)/k)^n x/(k+1)
  // decreasing: enclose with the shared geometric-tail rule.
  BigRat sum = 0;
  BigRat tail;
  auto term = [&](int k) {
    BigRat p = 1;
    for (int i = 0; i < k; ++i) p *= x;
    return BigRat(pow_int(k, n)) * p / BigRat(factorial(k));
  };
  for (int k = 0;; ++k) {
    sum += term(k);
    const BigRat b1 = term(k + 1);
    if (b1 > 0 && 2 * term(k + 2) <= b1 && 8 * b1 < eps) {
      tail = 2 * b1;
      break;
    }
  }
  const IntervalValue rhs =
      exp_interval(-x, eps / (4 * (sum + tail + 1))) * IntervalValue(sum, sum + tail);
  report.passed = rhs.width() < eps && rhs.contains(lhs);
  if (!report.passed)
    report.details.push_back("lhs " + decimal_string(lhs, 12) + " rhs [" +
                             decimal_string(rhs.lo, 12) + ", " + decimal_string(rhs.hi, 12) +
                             "]");
  return report;
}

}  // namespace blattice
