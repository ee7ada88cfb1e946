#include "blattice/exact_counts.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "blattice/bounded_poly.hpp"

namespace blattice {

CountTable CountTable::build(Kind kind, int max_n) {
  if (max_n < 0) throw std::invalid_argument("CountTable: max_n must be >= 0");
  CountTable t;
  t.kind_ = kind;
  t.rows_.resize(static_cast<size_t>(max_n) + 1);
  switch (kind) {
    case Kind::stirling2:
    case Kind::stirling1_signed: {
      for (int n = 0; n <= max_n; ++n) {
        t.rows_[n].assign(static_cast<size_t>(n) + 1, 0);
        if (n == 0) {
          t.rows_[0][0] = 1;
          continue;
        }
        for (int k = 1; k <= n; ++k) {
          const BigInt upper = k <= n - 1 ? t.rows_[n - 1][k] : BigInt(0);
          if (kind == Kind::stirling2)
            t.rows_[n][k] = t.rows_[n - 1][k - 1] + k * upper;
          else
            t.rows_[n][k] = t.rows_[n - 1][k - 1] - (n - 1) * upper;
        }
      }
      break;
    }
    case Kind::bell:
    case Kind::n_no_zero: {
      CountTable s2 = build(Kind::stirling2, max_n);
      for (int n = 0; n <= max_n; ++n) {
        BigInt sum = 0;
        for (int k = 0; k <= n; ++k) {
          BigInt term = s2.rows_[n][k];
          if (kind == Kind::n_no_zero) term <<= n - k;
          sum += term;
        }
        t.rows_[n] = {sum};
      }
      break;
    }
    case Kind::dowling: {
      CountTable nz = build(Kind::n_no_zero, max_n);
      for (int n = 0; n <= max_n; ++n) {
        BigInt sum = 0;
        for (int i0 = 0; i0 <= n; ++i0) sum += binomial(n, i0) * nz.rows_[n - i0][0];
        t.rows_[n] = {sum};
      }
      break;
    }
  }
  return t;
}

const BigInt& CountTable::at(int n, int k) const {
  if (n < 0 || n > max_n()) throw std::out_of_range("CountTable: n out of range");
  if (k < 0 || k >= static_cast<int>(rows_[n].size()))
    throw std::out_of_range("CountTable: k out of range");
  return rows_[n][k];
}

BigInt stirling2(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("stirling2: need 0 <= k <= n");
  return CountTable::build(CountTable::Kind::stirling2, n).at(n, k);
}

BigInt stirling1_signed(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw std::invalid_argument("stirling1_signed: need 0 <= k <= n");
  return CountTable::build(CountTable::Kind::stirling1_signed, n).at(n, k);
}

BigInt bell_number(int n) {
  if (n < 0) throw std::invalid_argument("bell_number: n must be >= 0");
  return CountTable::build(CountTable::Kind::bell, n).at(n);
}

BigInt dowling_number(int n) {
  if (n < 0) throw std::invalid_argument("dowling_number: n must be >= 0");
  return CountTable::build(CountTable::Kind::dowling, n).at(n);
}

BigInt n_no_zero_by_pairs(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw std::invalid_argument("n_no_zero_by_pairs: need 0 <= k <= n");
  return (BigInt(1) << (n - k)) * stirling2(n, k);
}

BigInt n_no_zero(int n) {
  if (n < 0) throw std::invalid_argument("n_no_zero: n must be >= 0");
  return CountTable::build(CountTable::Kind::n_no_zero, n).at(n);
}

BigInt count_of_shape(const PartitionShape& shape) {
  if (!shape.consistent()) throw std::invalid_argument("count_of_shape: inconsistent shape");
  const int k = shape.num_pairs();
  BigInt denom = double_factorial_even(2 * shape.zero_half_size) << k;
  for (int s : shape.pair_sizes) denom *= factorial(s);
  int run = 1;
  for (size_t i = 1; i <= shape.pair_sizes.size(); ++i) {
    if (i < shape.pair_sizes.size() && shape.pair_sizes[i] == shape.pair_sizes[i - 1]) {
      ++run;
    } else {
      denom *= factorial(run);
      run = 1;
    }
  }
  const BigInt num = double_factorial_even(2 * shape.n);
  if (num % denom != 0) throw std::logic_error("count_of_shape: non-integral count");
  return num / denom;
}

std::vector<PartitionShape> all_shapes(int n) {
  if (n < 0) throw std::invalid_argument("all_shapes: n must be >= 0");
  std::vector<PartitionShape> out;
  std::vector<int> sizes;
  for (int i0 = 0; i0 <= n; ++i0) {
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
      if (remaining == 0) {
        out.emplace_back(n, i0, sizes);
        return;
      }
      for (int part = std::min(remaining, max_part); part >= 1; --part) {
        sizes.push_back(part);
        self(self, remaining - part, part);
        sizes.pop_back();
      }
    };
    rec(rec, n - i0, n);
  }
  return out;
}

namespace {

BigInt sizes_factorial(std::span<const int> sizes) {
  BigInt f = 1;
  for (int s : sizes) f *= factorial(s);
  return f;
}

/// Sum of coefficients of R over all multi-indices i' with
/// i'_a in {sizes[a], sizes[a] - 1}.
BigInt corner_coefficient_sum(const BoundedPoly& R, std::span<const int> sizes) {
  const size_t k = sizes.size();
  std::vector<int> idx(sizes.begin(), sizes.end());
  BigInt total = 0;
  for (std::uint64_t mask = 0;; ++mask) {
    bool valid = true;
    for (size_t a = 0; a < k; ++a) {
      idx[a] = sizes[a] - ((mask >> a) & 1 ? 1 : 0);
      if (idx[a] < 0) {
        valid = false;
        break;
      }
    }
    if (valid) total += R.coeff(idx);
    if (mask + 1 == (std::uint64_t{1} << k)) break;
  }
  return total;
}

}  // namespace

BigInt nb_pi_l(int n, int i0, std::span<const int> sizes, int l) {
  if (n < 0 || i0 < 0) throw std::invalid_argument("nb_pi_l: bad shape");
  if (l < i0 || l > n) return 0;
  const std::vector<int> caps(sizes.begin(), sizes.end());
  const BoundedPoly P = all_vars_one_plus_product(caps);
  BoundedPoly R = P.pow(2).sub_const(1).pow(l - i0);
  if (i0 > 0) R = R.mul(P.pow(2 * i0));
  const BigInt num = sizes_factorial(sizes) * corner_coefficient_sum(R, sizes);
  const BigInt den = double_factorial_even(2 * (l - i0));
  if (num % den != 0) throw std::logic_error("nb_pi_l: non-integral count");
  return num / den;
}

BigInt nb_pi_l(const PartitionShape& shape, int l) {
  if (!shape.consistent()) throw std::invalid_argument("nb_pi_l: inconsistent shape");
  return nb_pi_l(shape.n, shape.zero_half_size, shape.pair_sizes, l);
}

BigInt nb_pi(const PartitionShape& shape) {
  if (!shape.consistent()) throw std::invalid_argument("nb_pi: inconsistent shape");
  BigInt total = 0;
  for (int l = shape.zero_half_size; l <= shape.n; ++l) total += nb_pi_l(shape, l);
  return total;
}

BigInt nd_pi_l(int n, std::span<const int> sizes, int l) {
  if (n < 0) throw std::invalid_argument("nd_pi_l: bad shape");
  if (l < 0 || l > n) return 0;
  const std::vector<int> caps(sizes.begin(), sizes.end());
  const BoundedPoly R = all_vars_one_plus_product(caps).pow(2).sub_const(1).pow(l);
  const std::vector<int> idx(sizes.begin(), sizes.end());
  const BigInt num = sizes_factorial(sizes) * R.coeff(idx);
  const BigInt den = double_factorial_even(2 * l);
  if (num % den != 0) throw std::logic_error("nd_pi_l: non-integral count");
  return num / den;
}

BigInt nd_pi_l(const PartitionShape& shape, int l) {
  if (!shape.consistent()) throw std::invalid_argument("nd_pi_l: inconsistent shape");
  if (shape.zero_half_size != 0)
    throw std::invalid_argument("nd_pi_l: shape must be zero-block-free");
  return nd_pi_l(shape.n, shape.pair_sizes, l);
}

BigInt nd_pi(const PartitionShape& shape) {
  if (!shape.consistent()) throw std::invalid_argument("nd_pi: inconsistent shape");
  if (shape.zero_half_size != 0)
    throw std::invalid_argument("nd_pi: shape must be zero-block-free");
  BigInt total = 0;
  for (int l = 0; l <= shape.n; ++l) total += nd_pi_l(shape, l);
  return total;
}

BigInt n2b_exact(int n) {
  if (n < 0) throw std::invalid_argument("n2b_exact: n must be >= 0");
  BigInt total = 0;
  for (const PartitionShape& s : all_shapes(n)) total += count_of_shape(s) * nb_pi(s);
  return total;
}

BigInt n2b_exact_by(int i0, int k, int n) {
  if (n < 0 || i0 < 0 || k < 0 || i0 + k > n)
    throw std::invalid_argument("n2b_exact_by: need i0 >= 0, k >= 0, i0 + k <= n");
  BigInt total = 0;
  for (const PartitionShape& s : all_shapes(n))
    if (s.zero_half_size == i0 && s.num_pairs() == k) total += count_of_shape(s) * nb_pi(s);
  return total;
}

BigInt nd_r_exact(int n, int r) {
  if (n < 0 || r < 1) throw std::invalid_argument("nd_r_exact: need n >= 0, r >= 1");
  if (n == 0) return 1;
  const CountTable s1 = CountTable::build(CountTable::Kind::stirling1_signed, n);
  const CountTable nz = CountTable::build(CountTable::Kind::n_no_zero, n);
  BigInt total = 0;
  for (int j = 1; j <= n; ++j)
    total += pow_int(nz.at(j), r) * (BigInt(1) << (n - j)) * s1.at(n, j);
  return total;
}

BigInt na_pi(std::span<const int> block_sizes) {
  int n = 0;
  for (int s : block_sizes) {
    if (s < 1) throw std::invalid_argument("na_pi: block sizes must be >= 1");
    n += s;
  }
  const std::vector<int> caps(block_sizes.begin(), block_sizes.end());
  const BoundedPoly Q = poly_sub_const(all_vars_one_plus_product(caps), 1);
  const std::vector<int> idx(block_sizes.begin(), block_sizes.end());
  // [x^i] exp(Q) as the finite sum over powers Q^m / m!; Q has zero constant
  // term so powers beyond m = n cannot reach the target index.
  BigRat acc = 0;
  BoundedPoly power = BoundedPoly::constant(caps, 1);
  BigInt fact = 1;
  for (int m = 0; m <= n; ++m) {
    if (m > 0) {
      power = power.mul(Q);
      fact *= m;
    }
    acc += BigRat(power.coeff(idx), fact);
  }
  acc *= BigRat(sizes_factorial(block_sizes));
  if (denominator(acc) != 1) throw std::logic_error("na_pi: non-integral count");
  return numerator(acc);
}

BigInt na_r_exact(int n, int r) {
  if (n < 0 || r < 1) throw std::invalid_argument("na_r_exact: need n >= 0, r >= 1");
  if (n == 0) return 1;
  const CountTable s1 = CountTable::build(CountTable::Kind::stirling1_signed, n);
  const CountTable bell = CountTable::build(CountTable::Kind::bell, n);
  BigInt total = 0;
  for (int j = 1; j <= n; ++j) total += pow_int(bell.at(j), r) * s1.at(n, j);
  return total;
}

}  // namespace blattice
