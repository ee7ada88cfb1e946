#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "blattice/enumeration.hpp"
#include "blattice/signed_partition.hpp"

using namespace blattice;

TEST_CASE("construction canonicalizes the B_12 example") {
  const SignedPartition p = SignedPartition::make(
      12, {1, 2, 5, 8, 12}, {{3, 11}, {4, -7, 9, 10}, {6}});
  CHECK(p.zero_block() == std::vector<int>{1, 2, 5, 8, 12});
  REQUIRE(p.num_pairs() == 3);
  CHECK(p.pair_blocks()[0] == std::vector<int>{3, 11});
  CHECK(p.pair_blocks()[1] == std::vector<int>{4, -7, 9, 10});
  CHECK(p.pair_blocks()[2] == std::vector<int>{6});

  const PartitionShape s = p.shape();
  CHECK(s.zero_half_size == 5);
  CHECK(s.pair_sizes == std::vector<int>{1, 2, 4});
}

TEST_CASE("raw blocks listing both pair members collapse to one representative") {
  const SignedPartition p = SignedPartition::make(2, {}, {{1}, {-1}, {2}, {-2}});
  CHECK(p == SignedPartition::minimal(2));
}

TEST_CASE("representatives are sign-normalized and sorted") {
  const SignedPartition p = SignedPartition::make(3, {}, {{-2, 3}, {-1}});
  REQUIRE(p.num_pairs() == 2);
  CHECK(p.pair_blocks()[0] == std::vector<int>{1});
  CHECK(p.pair_blocks()[1] == std::vector<int>{2, -3});
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS_AS(SignedPartition::make(1, {}, {{1, -1}}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPartition::make(3, {}, {{1, -1, 2}, {3}}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPartition::make(2, {}, {{1}}), std::invalid_argument);       // 2 missing
  CHECK_THROWS_AS(SignedPartition::make(2, {1}, {{1}, {2}}), std::invalid_argument);  // overlap
  CHECK_THROWS_AS(SignedPartition::make(2, {}, {{1, 2}, {1, -2}}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPartition::make(2, {}, {{1, 3}, {2}}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPartition::make(2, {3}, {{1}, {2}}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPartition::make(2, {}, {{}, {1}, {2}}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPartition::make(2, {}, {{1, 1}, {2}}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPartition::make(-1, {}, {}), std::invalid_argument);
}

TEST_CASE("minimal and maximal partitions") {
  const SignedPartition bottom = SignedPartition::minimal(2);
  CHECK_FALSE(bottom.has_zero_block());
  REQUIRE(bottom.num_pairs() == 2);
  CHECK(bottom.pair_blocks()[0] == std::vector<int>{1});
  CHECK(bottom.pair_blocks()[1] == std::vector<int>{2});

  const SignedPartition top = SignedPartition::maximal(2);
  CHECK(top.zero_block() == std::vector<int>{1, 2});
  CHECK(top.num_pairs() == 0);

  CHECK(SignedPartition::minimal(0) == SignedPartition::maximal(0));
  CHECK(SignedPartition::minimal(0).ground_size() == 0);
}

TEST_CASE("shapes of the extreme partitions") {
  const PartitionShape s0 = SignedPartition::minimal(3).shape();
  CHECK(s0.zero_half_size == 0);
  CHECK(s0.pair_sizes == std::vector<int>{1, 1, 1});
  const PartitionShape s1 = SignedPartition::maximal(3).shape();
  CHECK(s1.zero_half_size == 3);
  CHECK(s1.pair_sizes.empty());
  CHECK(s0.consistent());
  CHECK(s1.consistent());
}

TEST_CASE("meet of the two pair partitions at n = 2 is minimal") {
  const SignedPartition a = SignedPartition::make(2, {}, {{1, 2}});
  const SignedPartition b = SignedPartition::make(2, {}, {{1, -2}});
  CHECK(a.meet(b) == SignedPartition::minimal(2));
  CHECK(b.meet(a) == SignedPartition::minimal(2));
}

TEST_CASE("meet respects lattice bounds and idempotence on small universes") {
  for (int n = 0; n <= 3; ++n) {
    const SignedPartition bottom = SignedPartition::minimal(n);
    const SignedPartition top = SignedPartition::maximal(n);
    for (const SignedPartition& p : enumerate_b(n)) {
      CHECK(p.meet(p) == p);
      CHECK(p.meet(bottom) == bottom);
      CHECK(p.meet(top) == p);
    }
  }
}

TEST_CASE("meet is commutative, associative, and the greatest lower bound (n <= 3)") {
  for (int n = 2; n <= 3; ++n) {
    const auto all = enumerate_b(n);
    for (const auto& p : all)
      for (const auto& q : all) {
        const SignedPartition m = p.meet(q);
        CHECK(m == q.meet(p));
        CHECK(m.refines(p));
        CHECK(m.refines(q));
        for (const auto& r : all)
          if (r.refines(p) && r.refines(q)) CHECK(r.refines(m));
      }
    for (const auto& p : all)
      for (size_t j = 0; j < all.size(); ++j) {
        const auto& q = all[j];
        const auto& r = all[(7 * j + 3) % all.size()];
        CHECK(p.meet(q).meet(r) == p.meet(q.meet(r)));
      }
  }
}

TEST_CASE("meet zero-block is the intersection of zero-blocks (n <= 3)") {
  for (int n = 0; n <= 3; ++n) {
    const auto all = enumerate_b(n);
    for (const auto& p : all)
      for (const auto& q : all) {
        const SignedPartition m = p.meet(q);
        std::vector<int> want;
        std::set_intersection(p.zero_block().begin(), p.zero_block().end(),
                              q.zero_block().begin(), q.zero_block().end(),
                              std::back_inserter(want));
        CHECK(m.zero_block() == want);
        if (!p.has_zero_block() && !q.has_zero_block()) CHECK_FALSE(m.has_zero_block());
        // meet output is itself a valid canonical partition
        CHECK(SignedPartition::make(n, m.zero_block(), m.pair_blocks()) == m);
      }
  }
}

TEST_CASE("meet and serialization behave on a sampled slice at n = 6") {
  const auto all = enumerate_b(6);
  REQUIRE(all.size() == 4088);
  for (size_t i = 0; i < all.size(); i += 97) {
    const SignedPartition& p = all[i];
    CHECK(SignedPartition::parse(p.serialize()) == p);
    for (size_t j = 0; j < all.size(); j += 131) {
      const SignedPartition& q = all[j];
      const SignedPartition m = p.meet(q);
      CHECK(m.refines(p));
      CHECK(m.refines(q));
      CHECK(m == q.meet(p));
      std::vector<int> want;
      std::set_intersection(p.zero_block().begin(), p.zero_block().end(),
                            q.zero_block().begin(), q.zero_block().end(),
                            std::back_inserter(want));
      CHECK(m.zero_block() == want);
      CHECK(SignedPartition::make(6, m.zero_block(), m.pair_blocks()) == m);
    }
  }
}

TEST_CASE("meet rejects mismatched ground sets") {
  CHECK_THROWS_AS(SignedPartition::minimal(2).meet(SignedPartition::minimal(3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(SignedPartition::minimal(2).refines(SignedPartition::minimal(3)),
                  std::invalid_argument);
}

TEST_CASE("refines matches the block-subset definition") {
  const SignedPartition a = SignedPartition::make(2, {}, {{1, 2}});
  const SignedPartition b = SignedPartition::make(2, {}, {{1, -2}});
  CHECK_FALSE(a.refines(b));
  CHECK_FALSE(b.refines(a));
  for (int n = 0; n <= 3; ++n)
    for (const SignedPartition& p : enumerate_b(n)) {
      CHECK(SignedPartition::minimal(n).refines(p));
      CHECK(p.refines(SignedPartition::maximal(n)));
    }
}

TEST_CASE("minimally intersecting tuples") {
  const SignedPartition a = SignedPartition::make(2, {2}, {{1}});
  const SignedPartition b = SignedPartition::make(2, {1}, {{2}});
  const std::vector<SignedPartition> pair{a, b};
  CHECK(is_minimally_intersecting(pair));

  const std::vector<SignedPartition> single_min{SignedPartition::minimal(2)};
  CHECK(is_minimally_intersecting(single_min));
  const std::vector<SignedPartition> single_other{a};
  CHECK_FALSE(is_minimally_intersecting(single_other));

  const std::vector<SignedPartition> tops{SignedPartition::maximal(1),
                                          SignedPartition::maximal(1)};
  CHECK_FALSE(is_minimally_intersecting(tops));

  CHECK_THROWS_AS(is_minimally_intersecting({}), std::invalid_argument);
  const std::vector<SignedPartition> mixed{SignedPartition::minimal(1),
                                           SignedPartition::minimal(2)};
  CHECK_THROWS_AS(is_minimally_intersecting(mixed), std::invalid_argument);
}

TEST_CASE("serialization golden values and round trip") {
  CHECK(SignedPartition::minimal(1).serialize() == R"({"n":1,"zero":[],"pairs":[[1]]})");
  const SignedPartition pi1 = SignedPartition::make(
      12, {1, 2, 5, 8, 12}, {{3, 11}, {4, -7, 9, 10}, {6}});
  CHECK(pi1.serialize() ==
        R"({"n":12,"zero":[1,2,5,8,12],"pairs":[[3,11],[4,-7,9,10],[6]]})");
  for (int n = 0; n <= 4; ++n)
    for (const SignedPartition& p : enumerate_b(n))
      CHECK(SignedPartition::parse(p.serialize()) == p);
}

TEST_CASE("parse rejects malformed text") {
  CHECK_THROWS_AS(SignedPartition::parse("not json"), std::invalid_argument);
  CHECK_THROWS_AS(SignedPartition::parse("{\"n\":1}"), std::invalid_argument);
  CHECK_THROWS_AS(SignedPartition::parse(R"({"n":1,"zero":[],"pairs":[["x"]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(SignedPartition::parse(R"({"n":1,"zero":[],"pairs":[]})"),
                  std::invalid_argument);  // element 1 uncovered
}

TEST_CASE("canonicalization is idempotent") {
  for (int n = 0; n <= 3; ++n)
    for (const SignedPartition& p : enumerate_b(n)) {
      const SignedPartition again =
          SignedPartition::make(p.ground_size(), p.zero_block(), p.pair_blocks());
      CHECK(again == p);
    }
}
