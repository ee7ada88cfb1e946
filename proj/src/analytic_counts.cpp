#include "blattice/analytic_counts.hpp"

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "blattice/bounded_poly.hpp"
#include "blattice/exact_counts.hpp"

namespace blattice {

namespace {

BigRat rat_pow(const BigRat& x, int e) {
  BigRat r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

struct TailSum {
  BigRat partial;  // exact sum of the evaluated prefix
  BigRat tail;     // certified bound on everything beyond it
  long terms = 0;
};

/// Sums a nonnegative series given an envelope `bound` >= term with
/// eventually positive values whose consecutive ratio is nonincreasing. Once
/// the ratio is certified <= 1/2 the remaining mass is at most twice the next
/// envelope value. Runs until that tail meets `tail_target` or the budget is
/// spent; the returned enclosure is valid either way.
TailSum sum_with_ratio_tail(const std::function<BigRat(int)>& term,
                            const std::function<BigRat(int)>& bound,
                            const BigRat& tail_target, long max_terms) {
  TailSum out;
  for (int j = 0;; ++j) {
    out.partial += term(j);
    ++out.terms;
    const BigRat b1 = bound(j + 1);
    if (b1 > 0 && 2 * bound(j + 2) <= b1) {
      out.tail = 2 * b1;
      if (out.tail <= tail_target) return out;
      if (out.terms >= max_terms) return out;  // valid but wide
    } else if (out.terms >= max_terms) {
      throw std::runtime_error("series: no certified tail within the term budget");
    }
  }
}

struct BoxSpec {
  int r = 1;
  std::function<BigRat(std::span<const int>)> term;  // nonnegative
  std::function<BigRat(int)> envelope;               // term(idx) <= scale * prod envelope(idx_t)
  BigRat scale = 1;
};

/// Sums an r-fold series over growing index boxes [0, L]^r. The complement is
/// bounded coordinate-wise: sum over {idx_t > L} <= (2 envelope(L+1)) *
/// G_hi^(r-1) per coordinate, with G_hi an enclosure of the full envelope sum.
TailSum sum_box_series(const BoxSpec& spec, const BigRat& tail_target, long max_terms) {
  const TailSum g_sum =
      sum_with_ratio_tail(spec.envelope, spec.envelope, BigRat(1, 16), max_terms);
  const BigRat g_hi = g_sum.partial + g_sum.tail;

  TailSum out;
  out.terms = g_sum.terms;
  int L = 4;
  for (;;) {
    while (!(spec.envelope(L + 1) > 0 &&
             2 * spec.envelope(L + 2) <= spec.envelope(L + 1)))
      ++L;

    BigRat box = 0;
    std::vector<int> idx(spec.r, 0);
    long cells = 0;
    for (;;) {
      box += spec.term(idx);
      ++cells;
      int pos = 0;
      while (pos < spec.r && idx[pos] == L) idx[pos++] = 0;
      if (pos == spec.r) break;
      ++idx[pos];
    }
    out.partial = box;
    out.terms += cells;
    out.tail = spec.scale * spec.r * rat_pow(g_hi, spec.r - 1) * 2 * spec.envelope(L + 1);
    if (out.tail <= tail_target) return out;
    const BigInt next_cells = pow_int(BigInt(2 * L + 2), spec.r);
    if (BigInt(out.terms) + next_cells > max_terms) return out;  // wide, still valid
    L *= 2;
  }
}

/// Assembles prefactor * e^{exp_arg} * [partial, partial + tail] and recovers
/// the enclosed integer when the result is narrower than 1/2.
SeriesResult finish(const BigRat& prefactor, const BigRat& exp_arg, const TailSum& sum,
                    const SeriesOptions& opt) {
  const BigRat s_hi = sum.partial + sum.tail;
  const BigRat eps_e = opt.target_width / (8 * prefactor * (s_hi + 1));
  const IntervalValue e = exp_interval(exp_arg, eps_e);
  const IntervalValue value =
      (e * IntervalValue(sum.partial, s_hi)).scaled(prefactor);
  SeriesResult out{value, sum.terms, std::nullopt};
  if (value.width() < BigRat(1, 2)) out.recovered_integer = value.unique_integer();
  return out;
}

BigRat inner_target(const BigRat& prefactor, const SeriesOptions& opt) {
  return opt.target_width / (4 * prefactor);
}

}  // namespace

SeriesResult dobinski(int n, const SeriesOptions& opt) {
  if (n < 0) throw std::invalid_argument("dobinski: n must be >= 0");
  auto term = [n](int k) { return BigRat(pow_int(k, n), factorial(k)); };
  return finish(1, -1, sum_with_ratio_tail(term, term, inner_target(1, opt), opt.max_terms),
                opt);
}

SeriesResult benoumhani_dowling(int n, const SeriesOptions& opt) {
  if (n < 0) throw std::invalid_argument("benoumhani_dowling: n must be >= 0");
  auto term = [n](int k) { return BigRat(pow_int(2 * k + 1, n), double_factorial_even(2 * k)); };
  return finish(1, BigRat(-1, 2),
                sum_with_ratio_tail(term, term, inner_target(1, opt), opt.max_terms), opt);
}

SeriesResult nb_pi_series(const PartitionShape& shape, const SeriesOptions& opt) {
  if (!shape.consistent()) throw std::invalid_argument("nb_pi_series: inconsistent shape");
  const int i0 = shape.zero_half_size;
  auto term = [&shape, i0](int j) {
    BigInt num = 1;
    for (int s : shape.pair_sizes) num *= falling_factorial(BigInt(2 * i0 + 2 * j + 1), s);
    return BigRat(num, double_factorial_even(2 * j));
  };
  return finish(1, BigRat(-1, 2),
                sum_with_ratio_tail(term, term, inner_target(1, opt), opt.max_terms), opt);
}

SeriesResult n2b_series_by(int i0, int k, int n, const SeriesOptions& opt) {
  if (n < 0 || i0 < 0 || k < 0 || i0 + k > n)
    throw std::invalid_argument("n2b_series_by: need i0 >= 0, k >= 0, i0 + k <= n");
  const int m = n - i0;
  if (k == 0 && m > 0)  // every series term is identically zero
    return SeriesResult{IntervalValue::point(0), 0, BigInt(0)};
  const BigRat prefactor(double_factorial_even(2 * n),
                         double_factorial_even(2 * i0) * double_factorial_even(2 * k));
  auto term = [m, k, i0](int j) {
    const std::vector<int> caps{m};
    const BoundedPoly base =
        BoundedPoly::one_plus_var(caps, 0).pow(2 * i0 + 2 * j + 1).sub_const(1).pow(k);
    const std::vector<int> idx{m};
    return BigRat(base.coeff(idx), double_factorial_even(2 * j));
  };
  auto bound = [m, k, i0](int j) {
    return BigRat(pow_int(BigInt(2 * i0 + 2 * j + 1) * k, m), double_factorial_even(2 * j));
  };
  return finish(prefactor, BigRat(-1, 2),
                sum_with_ratio_tail(term, bound, inner_target(prefactor, opt), opt.max_terms),
                opt);
}

SeriesResult n2b_series(int n, const SeriesOptions& opt) { return nbr_series(n, 2, opt); }

SeriesResult nbr_series(int n, int r, const SeriesOptions& opt) {
  if (n < 0 || r < 1) throw std::invalid_argument("nbr_series: need n >= 0, r >= 1");
  const BigRat prefactor = BigRat(BigInt(1) << n);
  BoxSpec spec;
  spec.r = r;
  spec.term = [n](std::span<const int> idx) {
    BigInt p = 1;
    for (int l : idx) p *= 2 * l + 1;
    const BigInt half = (p - 1) / 2;
    const BigInt num = falling_factorial(half, n);
    if (num == 0) return BigRat(0);
    BigInt den = 1;
    for (int l : idx) den *= double_factorial_even(2 * l);
    return BigRat(num, den);
  };
  spec.envelope = [n](int l) {
    return BigRat(pow_int(2 * l + 1, n), double_factorial_even(2 * l));
  };
  spec.scale = BigRat(1, BigInt(1) << n);
  return finish(prefactor, BigRat(-r, 2),
                sum_box_series(spec, inner_target(prefactor, opt), opt.max_terms), opt);
}

SeriesResult nn_series(int n, const SeriesOptions& opt) {
  if (n < 0) throw std::invalid_argument("nn_series: n must be >= 0");
  auto term = [n](int k) { return BigRat(pow_int(2 * k, n), double_factorial_even(2 * k)); };
  return finish(1, BigRat(-1, 2),
                sum_with_ratio_tail(term, term, inner_target(1, opt), opt.max_terms), opt);
}

SeriesResult n2d_series_by(int k, int n, const SeriesOptions& opt) {
  if (n < 0 || k < 0) throw std::invalid_argument("n2d_series_by: need n >= 0, k >= 0");
  if (k == 0 && n > 0) return SeriesResult{IntervalValue::point(0), 0, BigInt(0)};
  const BigRat prefactor(double_factorial_even(2 * n), double_factorial_even(2 * k));
  auto term = [n, k](int j) {
    const std::vector<int> caps{n};
    const BoundedPoly base =
        BoundedPoly::one_plus_var(caps, 0).pow(2 * j).sub_const(1).pow(k);
    const std::vector<int> idx{n};
    return BigRat(base.coeff(idx), double_factorial_even(2 * j));
  };
  auto bound = [n, k](int j) {
    return BigRat(pow_int(BigInt(2 * j) * k, n), double_factorial_even(2 * j));
  };
  return finish(prefactor, BigRat(-1, 2),
                sum_with_ratio_tail(term, bound, inner_target(prefactor, opt), opt.max_terms),
                opt);
}

SeriesResult n2d_series(int n, const SeriesOptions& opt) { return ndr_series(n, 2, opt); }

SeriesResult ndr_series(int n, int r, const SeriesOptions& opt) {
  if (n < 0 || r < 1) throw std::invalid_argument("ndr_series: need n >= 0, r >= 1");
  const BigRat prefactor = BigRat(BigInt(1) << n);
  BoxSpec spec;
  spec.r = r;
  spec.term = [n, r](std::span<const int> idx) {
    BigInt p = BigInt(1) << (r - 1);
    for (int k : idx) p *= k;
    const BigInt num = falling_factorial(p, n);
    if (num == 0) return BigRat(0);
    BigInt den = 1;
    for (int k : idx) den *= double_factorial_even(2 * k);
    return BigRat(num, den);
  };
  spec.envelope = [n](int k) {
    return BigRat(pow_int(k, n), double_factorial_even(2 * k));
  };
  spec.scale = BigRat(pow_int(BigInt(1) << (r - 1), n));
  return finish(prefactor, BigRat(-r, 2),
                sum_box_series(spec, inner_target(prefactor, opt), opt.max_terms), opt);
}

SeriesResult pittel_nar_series(int n, int r, const SeriesOptions& opt) {
  if (n < 0 || r < 1) throw std::invalid_argument("pittel_nar_series: need n >= 0, r >= 1");
  BoxSpec spec;
  spec.r = r;
  spec.term = [n](std::span<const int> idx) {
    BigInt p = 1;
    for (int k : idx) p *= k;
    const BigInt num = falling_factorial(p, n);
    if (num == 0) return BigRat(0);
    BigInt den = 1;
    for (int k : idx) den *= factorial(k);
    return BigRat(num, den);
  };
  spec.envelope = [n](int k) { return BigRat(pow_int(k, n), factorial(k)); };
  spec.scale = 1;
  return finish(1, BigRat(-r),
                sum_box_series(spec, inner_target(1, opt), opt.max_terms), opt);
}

}  // namespace blattice
