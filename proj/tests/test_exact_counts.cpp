#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "blattice/enumeration.hpp"
#include "blattice/exact_counts.hpp"
#include "blattice/oracle.hpp"

using namespace blattice;

TEST_CASE("classic number families") {
  CHECK(stirling2(2, 1) == 1);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling1_signed(1, 1) == 1);
  CHECK(stirling1_signed(3, 2) == -3);
  CHECK(stirling1_signed(3, 1) == 2);
  CHECK(bell_number(0) == 1);
  CHECK(bell_number(5) == 52);
  CHECK(bell_number(8) == 4140);
  CHECK_THROWS_AS(stirling2(3, 4), std::invalid_argument);

  BigInt row = 0;
  for (int k = 0; k <= 6; ++k) row += stirling2(6, k);
  CHECK(row == bell_number(6));
}

TEST_CASE("double and falling factorials") {
  CHECK(double_factorial_even(0) == 1);
  CHECK(double_factorial_even(6) == 48);
  CHECK_THROWS_AS(double_factorial_even(5), std::invalid_argument);
  CHECK(falling_factorial(BigInt(5), 0) == 1);
  CHECK(falling_factorial(BigInt(5), 3) == 60);
  CHECK(falling_factorial(BigRat(5, 2), 2) == BigRat(15, 4));
}

TEST_CASE("signed-partition counting sequences") {
  const BigInt dowling_expect[] = {1, 2, 6, 24, 116, 648, 4088, 28640, 219920, 1832224};
  const BigInt no_zero_expect[] = {1, 1, 3, 11, 49, 257, 1539, 10299, 75905, 609441};
  for (int n = 0; n <= 9; ++n) {
    CHECK(dowling_number(n) == dowling_expect[n]);
    CHECK(n_no_zero(n) == no_zero_expect[n]);
  }
  CHECK(n_no_zero_by_pairs(2, 1) == 2);
  for (int n = 0; n <= 8; ++n) {
    CHECK(n_no_zero_by_pairs(n, n) == 1);
    BigInt by_pairs = 0;
    for (int k = 0; k <= n; ++k) by_pairs += n_no_zero_by_pairs(n, k);
    CHECK(by_pairs == n_no_zero(n));
    BigInt by_zero = 0;
    for (int i0 = 0; i0 <= n; ++i0) by_zero += binomial(n, i0) * n_no_zero(n - i0);
    CHECK(by_zero == dowling_number(n));
  }
}

TEST_CASE("count table kinds agree with the scalar functions") {
  const CountTable s2 = CountTable::build(CountTable::Kind::stirling2, 7);
  const CountTable dw = CountTable::build(CountTable::Kind::dowling, 7);
  CHECK(s2.at(7, 3) == stirling2(7, 3));
  CHECK(dw.at(6) == 4088);
  CHECK_THROWS_AS(s2.at(8, 0), std::out_of_range);
}

TEST_CASE("shape counting") {
  CHECK(count_of_shape(PartitionShape(2, 1, {1})) == 2);
  CHECK(count_of_shape(PartitionShape(2, 0, {2})) == 2);
  CHECK(count_of_shape(PartitionShape(2, 0, {1, 1})) == 1);
  BigInt total = 0;
  for (const PartitionShape& s : all_shapes(4)) total += count_of_shape(s);
  CHECK(total == 116);
  CHECK_THROWS_AS(count_of_shape(PartitionShape(2, 1, {2})), std::invalid_argument);
}

TEST_CASE("worked partner-count examples") {
  CHECK(nb_pi_l(PartitionShape(2, 1, {1}), 1) == 3);
  CHECK(nd_pi_l(PartitionShape(3, 0, {1, 2}), 2) == 5);
  CHECK(nb_pi_l(PartitionShape(3, 2, {1}), 1) == 0);  // l = i0 - 1
  CHECK(nb_pi_l(PartitionShape(3, 2, {1}), 4) == 0);  // l > n
  CHECK(nd_pi_l(PartitionShape(2, 0, {2}), 0) == 0);
}

TEST_CASE("partner counts against the exhaustive oracle, every shape and l, n <= 4") {
  for (int n = 0; n <= 4; ++n) {
    for (const SignedPartition& pi : enumerate_b(n)) {
      const PartitionShape s = pi.shape();
      for (int l = 0; l <= n; ++l) {
        CHECK(nb_pi_l(s, l) == oracle_count_partners(pi, PartnerFilter::PairCount, l));
        if (!pi.has_zero_block())
          CHECK(nd_pi_l(s, l) ==
                oracle_count_partners(pi, PartnerFilter::NoZeroPairCount, l));
      }
      CHECK(nb_pi(s) == oracle_count_partners(pi, PartnerFilter::Any));
      if (!pi.has_zero_block())
        CHECK(nd_pi(s) == oracle_count_partners(pi, PartnerFilter::NoZero));
    }
  }
}

TEST_CASE("partner totals at the lattice extremes") {
  for (int n = 0; n <= 5; ++n) {
    CHECK(nb_pi(SignedPartition::minimal(n).shape()) == dowling_number(n));
    CHECK(nd_pi(SignedPartition::minimal(n).shape()) == n_no_zero(n));
    CHECK(nb_pi(SignedPartition::maximal(n).shape()) == 1);
  }
}

TEST_CASE("partner counts ignore the order of pair sizes") {
  const std::vector<int> a{1, 3, 2};
  const std::vector<int> b{3, 2, 1};
  const std::vector<int> c{2, 1, 3};
  for (int l = 0; l <= 6; ++l) {
    const BigInt va = nb_pi_l(6, 0, a, l);
    CHECK(va == nb_pi_l(6, 0, b, l));
    CHECK(va == nb_pi_l(6, 0, c, l));
    const BigInt vd = nd_pi_l(6, a, l);
    CHECK(vd == nd_pi_l(6, b, l));
    CHECK(vd == nd_pi_l(6, c, l));
  }
  const std::vector<int> a7{1, 3, 2};
  for (int l = 0; l <= 7; ++l)
    CHECK(nb_pi_l(7, 1, a7, l) == nb_pi_l(7, 1, std::vector<int>{3, 2, 1}, l));
}

TEST_CASE("pair counts hit the published values") {
  const BigInt expect[] = {1, 3, 23, 329, 6737};
  for (int n = 0; n <= 4; ++n) CHECK(n2b_exact(n) == expect[n]);
}

TEST_CASE("restricted pair counts sum back to the total") {
  for (int n = 0; n <= 5; ++n) {
    BigInt total = 0;
    for (int i0 = 0; i0 <= n; ++i0)
      for (int k = 0; k <= n - i0; ++k) total += n2b_exact_by(i0, k, n);
    CHECK(total == n2b_exact(n));
  }
  CHECK(n2b_exact_by(2, 0, 2) == 1);
  CHECK_THROWS_AS(n2b_exact_by(2, 1, 2), std::invalid_argument);
}

TEST_CASE("zero-block-free tuple counts") {
  CHECK(nd_r_exact(1, 2) == 1);
  CHECK(nd_r_exact(2, 2) == 7);
  CHECK(nd_r_exact(3, 2) == 75);
  CHECK(nd_r_exact(2, 3) == 25);
  CHECK(nd_r_exact(0, 5) == 1);
  for (int n = 1; n <= 6; ++n) CHECK(nd_r_exact(n, 1) == 1);
}

TEST_CASE("ordinary-partition baselines") {
  const std::vector<int> singles{1, 1, 1};
  CHECK(na_pi(singles) == bell_number(3));
  for (int n = 0; n <= 6; ++n) {
    const std::vector<int> sizes(n, 1);
    CHECK(na_pi(sizes) == bell_number(n));
  }
  CHECK(na_r_exact(1, 5) == 1);
  CHECK(na_r_exact(3, 2) == 15);
  CHECK(na_r_exact(2, 2) == 3);
  CHECK(na_r_exact(0, 2) == 1);
}

TEST_CASE("ordinary partner counts match a direct type-A oracle") {
  for (int n = 1; n <= 4; ++n) {
    const auto universe = enumerate_a(n);
    for (const SignedPartition& pi : universe) {
      BigInt count = 0;
      for (const SignedPartition& q : universe)
        if (pi.meet(q).is_minimal()) ++count;
      CHECK(na_pi(pi.shape().pair_sizes) == count);
    }
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(nd_pi_l(PartitionShape(3, 1, {2}), 1), std::invalid_argument);
  CHECK_THROWS_AS(nd_pi(PartitionShape(3, 1, {2})), std::invalid_argument);
  CHECK_THROWS_AS(nd_r_exact(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(na_r_exact(-1, 2), std::invalid_argument);
  const std::vector<int> bad{0, 2};
  CHECK_THROWS_AS(na_pi(bad), std::invalid_argument);
}
