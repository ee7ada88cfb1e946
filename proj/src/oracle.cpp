#include "blattice/oracle.hpp"

#include <map>

#include "blattice/enumeration.hpp"

namespace blattice {

namespace {

std::vector<SignedPartition> universe_of(int n, Universe u, const OracleOptions& opt) {
  switch (u) {
    case Universe::B:
      return enumerate_b(n, opt.max_n);
    case Universe::NoZero:
      return enumerate_b_no_zero(n, opt.max_n);
    case Universe::TypeA:
      return enumerate_a(n, opt.max_n);
  }
  throw std::invalid_argument("oracle: unknown universe");
}

BigInt pow_count(size_t base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

BigInt oracle_count_partners(const SignedPartition& pi, PartnerFilter filter, int pair_count,
                             const OracleOptions& opt) {
  const int n = pi.ground_size();
  if (n > opt.max_n)
    throw BoundError("oracle_count_partners: n exceeds configured bound");
  if ((filter == PartnerFilter::PairCount || filter == PartnerFilter::NoZeroPairCount) &&
      pair_count < 0)
    throw std::invalid_argument("oracle_count_partners: filter needs a pair count");
  BigInt count = 0;
  for_each_b_partition(
      n,
      [&](const SignedPartition& q) {
        switch (filter) {
          case PartnerFilter::Any:
            break;
          case PartnerFilter::PairCount:
            if (q.num_pairs() != pair_count) return;
            break;
          case PartnerFilter::NoZero:
            if (q.has_zero_block()) return;
            break;
          case PartnerFilter::NoZeroPairCount:
            if (q.has_zero_block() || q.num_pairs() != pair_count) return;
            break;
        }
        if (pi.meet(q).is_minimal()) ++count;
      },
      opt.max_n);
  return count;
}

BigInt oracle_count_tuples(int n, int r, Universe universe, const OracleOptions& opt) {
  if (n < 0 || r < 1) throw std::invalid_argument("oracle_count_tuples: need n >= 0, r >= 1");
  const std::vector<SignedPartition> u = universe_of(n, universe, opt);
  const long long planned = static_cast<long long>(r) * u.size() * u.size();
  if (planned > opt.max_work) throw BudgetError("oracle_count_tuples: budget exceeded");

  const SignedPartition bottom = SignedPartition::minimal(n);
  // prefix meets after one coordinate
  std::map<SignedPartition, BigInt> level;
  for (const SignedPartition& p : u) level[p] += 1;
  for (int step = 1; step < r; ++step) {
    std::map<SignedPartition, BigInt> next;
    for (const auto& [m, c] : level) {
      if (m == bottom) {
        next[bottom] += c * pow_count(u.size(), 1);
        continue;
      }
      for (const SignedPartition& p : u) next[m.meet(p)] += c;
    }
    level.swap(next);
  }
  const auto it = level.find(bottom);
  return it == level.end() ? BigInt(0) : it->second;
}

BigInt oracle_count_tuples_naive(int n, int r, Universe universe, const OracleOptions& opt) {
  if (n < 0 || r < 1) throw std::invalid_argument("oracle_count_tuples: need n >= 0, r >= 1");
  const std::vector<SignedPartition> u = universe_of(n, universe, opt);
  BigInt planned = pow_count(u.size(), r);
  if (planned > opt.max_work) throw BudgetError("oracle_count_tuples_naive: budget exceeded");

  BigInt count = 0;
  std::vector<size_t> pick(r, 0);
  std::vector<SignedPartition> tuple;
  for (;;) {
    tuple.clear();
    for (size_t i : pick) tuple.push_back(u[i]);
    if (is_minimally_intersecting(tuple)) ++count;
    int pos = 0;
    while (pos < r && pick[pos] + 1 == u.size()) pick[pos++] = 0;
    if (pos == r) break;
    ++pick[pos];
  }
  return count;
}

LatticeCheckReport oracle_meet_closure_check(int n, const OracleOptions& opt) {
  LatticeCheckReport report;
  const std::vector<SignedPartition> all = enumerate_b(n, opt.max_n);
  const SignedPartition bottom = SignedPartition::minimal(n);
  const SignedPartition top = SignedPartition::maximal(n);
  auto complain = [&](const std::string& what) {
    if (report.violations.size() < 32) report.violations.push_back(what);
  };

  for (const SignedPartition& p : all) {
    ++report.checks;
    if (!(p.meet(p) == p)) complain("meet(p, p) != p");
    if (!(p.meet(bottom) == bottom)) complain("meet(p, bottom) != bottom");
    if (!(p.meet(top) == p)) complain("meet(p, top) != p");
  }
  std::map<std::pair<size_t, size_t>, SignedPartition> meets;
  for (size_t i = 0; i < all.size(); ++i) {
    for (size_t j = 0; j < all.size(); ++j) {
      const SignedPartition m = all[i].meet(all[j]);
      ++report.checks;
      if (!(m == all[j].meet(all[i]))) complain("meet not commutative");
      if (!m.refines(all[i]) || !m.refines(all[j])) complain("meet does not refine arguments");
      meets.emplace(std::make_pair(i, j), m);
    }
  }
  // greatest lower bound: any common refiner refines the meet
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = 0; j < all.size(); ++j) {
      const SignedPartition& m = meets.at({i, j});
      for (const SignedPartition& r : all) {
        ++report.checks;
        if (r.refines(all[i]) && r.refines(all[j]) && !r.refines(m))
          complain("meet is not the greatest lower bound");
      }
    }
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = 0; j < all.size(); ++j)
      for (size_t k = 0; k < all.size(); ++k) {
        ++report.checks;
        if (!(meets.at({i, j}).meet(all[k]) == all[i].meet(meets.at({j, k}))))
          complain("meet not associative");
      }
  return report;
}

}  // namespace blattice
