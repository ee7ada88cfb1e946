#include "blattice/signed_partition.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace blattice {

namespace {

int abs_int(int x) { return x < 0 ? -x : x; }

void sort_by_abs(std::vector<int>& block) {
  std::sort(block.begin(), block.end(),
            [](int a, int b) { return abs_int(a) < abs_int(b); });
}

}  // namespace

PartitionShape::PartitionShape(int n_arg, int zero_half, std::vector<int> sizes)
    : n(n_arg), zero_half_size(zero_half), pair_sizes(std::move(sizes)) {
  std::sort(pair_sizes.begin(), pair_sizes.end());
}

bool PartitionShape::consistent() const {
  if (n < 0 || zero_half_size < 0) return false;
  long long total = zero_half_size;
  for (int s : pair_sizes) {
    if (s < 1) return false;
    total += s;
  }
  return total == n && std::is_sorted(pair_sizes.begin(), pair_sizes.end());
}

std::string PartitionShape::to_string() const {
  std::string out = std::to_string(zero_half_size) + ":";
  for (size_t i = 0; i < pair_sizes.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(pair_sizes[i]);
  }
  return out;
}

SignedPartition SignedPartition::make(int n, const std::vector<int>& zero,
                                      const std::vector<std::vector<int>>& pairs) {
  if (n < 0) throw std::invalid_argument("partition: n must be >= 0");
  SignedPartition p;
  p.n_ = n;

  p.zero_ = zero;
  std::sort(p.zero_.begin(), p.zero_.end());
  for (int a : p.zero_)
    if (a < 1 || a > n) throw std::invalid_argument("partition: zero-block element out of range");
  if (std::adjacent_find(p.zero_.begin(), p.zero_.end()) != p.zero_.end())
    throw std::invalid_argument("partition: duplicate element in zero-block");

  for (const auto& raw : pairs) {
    if (raw.empty()) throw std::invalid_argument("partition: empty pair-block");
    std::vector<int> block = raw;
    sort_by_abs(block);
    for (size_t i = 0; i < block.size(); ++i) {
      int x = block[i];
      if (x == 0 || abs_int(x) > n)
        throw std::invalid_argument("partition: pair-block element out of range");
      if (i > 0 && abs_int(block[i - 1]) == abs_int(x)) {
        if (block[i - 1] == x)
          throw std::invalid_argument("partition: duplicate element in pair-block");
        // x and -x in one block: either B = -B or B overlaps -B, both invalid
        std::vector<int> neg(block.size());
        std::transform(block.begin(), block.end(), neg.begin(), [](int v) { return -v; });
        sort_by_abs(neg);
        if (neg == block)
          throw std::invalid_argument("partition: pair-block equals its own negation");
        throw std::invalid_argument("partition: pair-block intersects its own negation");
      }
    }
    if (block.front() < 0)
      for (int& x : block) x = -x;
    p.pairs_.push_back(std::move(block));
  }

  std::sort(p.pairs_.begin(), p.pairs_.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
  // raw input may list both members of a block pair; they canonicalize equal
  p.pairs_.erase(std::unique(p.pairs_.begin(), p.pairs_.end()), p.pairs_.end());

  std::vector<int> seen(static_cast<size_t>(n) + 1, 0);
  for (int a : p.zero_) ++seen[a];
  for (const auto& b : p.pairs_)
    for (int x : b) ++seen[abs_int(x)];
  for (int a = 1; a <= n; ++a) {
    if (seen[a] == 0)
      throw std::invalid_argument("partition: element " + std::to_string(a) + " not covered");
    if (seen[a] > 1)
      throw std::invalid_argument("partition: element " + std::to_string(a) +
                                  " covered by overlapping blocks");
  }
  return p;
}

SignedPartition SignedPartition::minimal(int n) {
  if (n < 0) throw std::invalid_argument("partition: n must be >= 0");
  SignedPartition p;
  p.n_ = n;
  p.pairs_.reserve(n);
  for (int a = 1; a <= n; ++a) p.pairs_.push_back({a});
  return p;
}

SignedPartition SignedPartition::maximal(int n) {
  if (n < 0) throw std::invalid_argument("partition: n must be >= 0");
  SignedPartition p;
  p.n_ = n;
  p.zero_.resize(n);
  std::iota(p.zero_.begin(), p.zero_.end(), 1);
  return p;
}

PartitionShape SignedPartition::shape() const {
  std::vector<int> sizes;
  sizes.reserve(pairs_.size());
  for (const auto& b : pairs_) sizes.push_back(static_cast<int>(b.size()));
  return PartitionShape(n_, static_cast<int>(zero_.size()), std::move(sizes));
}

bool SignedPartition::is_minimal() const {
  if (!zero_.empty()) return false;
  for (const auto& b : pairs_)
    if (b.size() != 1) return false;
  return true;
}

std::vector<int> SignedPartition::labels() const {
  std::vector<int> code(static_cast<size_t>(n_) + 1, 0);
  for (size_t b = 0; b < pairs_.size(); ++b)
    for (int x : pairs_[b])
      code[abs_int(x)] = x > 0 ? static_cast<int>(b) + 1 : -(static_cast<int>(b) + 1);
  return code;  // zero-block entries stay 0
}

SignedPartition SignedPartition::from_labels(int n, std::span<const int> code) {
  SignedPartition p;
  p.n_ = n;
  int max_id = 0;
  for (int a = 1; a <= n; ++a) max_id = std::max(max_id, abs_int(code[a]));
  p.pairs_.resize(max_id);
  for (int a = 1; a <= n; ++a) {
    int c = code[a];
    if (c == 0)
      p.zero_.push_back(a);
    else
      p.pairs_[abs_int(c) - 1].push_back(c > 0 ? a : -a);
  }
  return p;
}

SignedPartition SignedPartition::meet(const SignedPartition& other) const {
  if (n_ != other.n_) throw std::invalid_argument("meet: ground-set size mismatch");
  const std::vector<int> lp = labels();
  const std::vector<int> lq = other.labels();
  std::vector<int> out(static_cast<size_t>(n_) + 1, 0);
  std::map<std::pair<int, int>, int> first;  // signed class key -> output block id
  int next_id = 0;
  for (int a = 1; a <= n_; ++a) {
    const int sp = lp[a], sq = lq[a];
    if (sp == 0 && sq == 0) continue;  // zero-block of both stays the zero-block
    auto it = first.find({sp, sq});
    if (it != first.end()) {
      out[a] = it->second;
    } else if (auto jt = first.find({-sp, -sq}); jt != first.end()) {
      out[a] = -jt->second;
    } else {
      first.emplace(std::make_pair(sp, sq), ++next_id);
      out[a] = next_id;
    }
  }
  return from_labels(n_, out);
}

bool SignedPartition::refines(const SignedPartition& coarser) const {
  if (n_ != coarser.n_) throw std::invalid_argument("refines: ground-set size mismatch");
  const std::vector<int> lq = coarser.labels();
  // the zero-block can only sit inside the coarser zero-block
  for (int a : zero_)
    if (lq[a] != 0) return false;
  // a pair representative must land in a single full block of the coarser
  // partition: constant signed label, with 0 meaning its zero-block
  for (const auto& b : pairs_) {
    const int x0 = b.front();
    const int ref = x0 > 0 ? lq[x0] : -lq[-x0];
    for (size_t i = 1; i < b.size(); ++i) {
      const int x = b[i];
      const int lab = x > 0 ? lq[x] : -lq[-x];
      if (lab != ref) return false;
    }
  }
  return true;
}

std::string SignedPartition::serialize() const {
  nlohmann::ordered_json j;
  j["n"] = n_;
  j["zero"] = zero_;
  j["pairs"] = pairs_;
  return j.dump();
}

SignedPartition SignedPartition::parse(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("parse: malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("zero") || !j.contains("pairs"))
    throw std::invalid_argument("parse: expected object with n, zero, pairs");
  try {
    const int n = j.at("n").get<int>();
    const auto zero = j.at("zero").get<std::vector<int>>();
    const auto pairs = j.at("pairs").get<std::vector<std::vector<int>>>();
    return make(n, zero, pairs);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("parse: bad field type: ") + e.what());
  }
}

SignedPartition meet(const SignedPartition& a, const SignedPartition& b) { return a.meet(b); }

bool is_minimally_intersecting(std::span<const SignedPartition> tuple) {
  if (tuple.empty()) throw std::invalid_argument("is_minimally_intersecting: empty tuple");
  for (const SignedPartition& p : tuple)
    if (p.ground_size() != tuple.front().ground_size())
      throw std::invalid_argument("is_minimally_intersecting: ground-set size mismatch");
  SignedPartition acc = tuple.front();
  for (size_t i = 1; i < tuple.size() && !acc.is_minimal(); ++i) acc = acc.meet(tuple[i]);
  return acc.is_minimal();
}

}  // namespace blattice
