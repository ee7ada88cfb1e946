#include "blattice/bounded_poly.hpp"

#include <limits>
#include <stdexcept>

namespace blattice {

BoundedPoly::BoundedPoly(std::vector<int> caps) : caps_(std::move(caps)) {
  strides_.resize(caps_.size());
  std::uint64_t stride = 1;
  for (size_t i = 0; i < caps_.size(); ++i) {
    if (caps_[i] < 0) throw std::invalid_argument("BoundedPoly: negative cap");
    strides_[i] = stride;
    const std::uint64_t radix = static_cast<std::uint64_t>(caps_[i]) + 1;
    if (stride > std::numeric_limits<std::uint64_t>::max() / radix)
      throw std::invalid_argument("BoundedPoly: cap volume too large");
    stride *= radix;
  }
}

BoundedPoly BoundedPoly::constant(std::vector<int> caps, const BigInt& c) {
  BoundedPoly p(std::move(caps));
  if (c != 0) p.coeffs_.emplace(0, c);
  return p;
}

BoundedPoly BoundedPoly::one_plus_var(std::vector<int> caps, int var) {
  if (var < 0 || var >= static_cast<int>(caps.size()))
    throw std::invalid_argument("BoundedPoly: variable index out of range");
  BoundedPoly p(std::move(caps));
  p.coeffs_.emplace(0, 1);
  if (p.caps_[var] >= 1) p.coeffs_.emplace(p.strides_[var], 1);
  return p;
}

std::uint64_t BoundedPoly::encode(std::span<const int> idx) const {
  if (idx.size() != caps_.size())
    throw std::out_of_range("BoundedPoly: multi-index arity mismatch");
  std::uint64_t key = 0;
  for (size_t i = 0; i < caps_.size(); ++i) {
    if (idx[i] < 0 || idx[i] > caps_[i])
      throw std::out_of_range("BoundedPoly: multi-index outside caps");
    key += static_cast<std::uint64_t>(idx[i]) * strides_[i];
  }
  return key;
}

void BoundedPoly::decode(std::uint64_t key, std::vector<int>& idx) const {
  idx.resize(caps_.size());
  for (size_t i = 0; i < caps_.size(); ++i) {
    const std::uint64_t radix = static_cast<std::uint64_t>(caps_[i]) + 1;
    idx[i] = static_cast<int>(key % radix);
    key /= radix;
  }
}

BigInt BoundedPoly::coeff(std::span<const int> idx) const {
  const auto it = coeffs_.find(encode(idx));
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

void BoundedPoly::add_term(std::span<const int> idx, const BigInt& c) {
  const std::uint64_t key = encode(idx);
  auto [it, inserted] = coeffs_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  } else if (it->second == 0) {
    coeffs_.erase(it);
  }
}

BoundedPoly BoundedPoly::mul(const BoundedPoly& other) const {
  if (caps_ != other.caps_) throw std::invalid_argument("BoundedPoly: cap mismatch");
  BoundedPoly out(caps_);
  const size_t k = caps_.size();
  std::vector<int> ia, ib;
  for (const auto& [ka, ca] : coeffs_) {
    decode(ka, ia);
    for (const auto& [kb, cb] : other.coeffs_) {
      decode(kb, ib);
      bool keep = true;
      for (size_t i = 0; i < k; ++i)
        if (ia[i] + ib[i] > caps_[i]) {
          keep = false;
          break;
        }
      if (!keep) continue;
      auto [it, inserted] = out.coeffs_.try_emplace(ka + kb, 0);
      it->second += ca * cb;
      if (it->second == 0) out.coeffs_.erase(it);
    }
  }
  return out;
}

BoundedPoly BoundedPoly::pow(int m) const {
  if (m < 0) throw std::invalid_argument("BoundedPoly: negative power");
  BoundedPoly acc = constant(caps_, 1);
  BoundedPoly base = *this;
  while (m > 0) {
    if (m & 1) acc = acc.mul(base);
    m >>= 1;
    if (m > 0) base = base.mul(base);
  }
  return acc;
}

BoundedPoly& BoundedPoly::sub_const(const BigInt& c) {
  if (c == 0) return *this;
  auto [it, inserted] = coeffs_.try_emplace(0, 0);
  it->second -= c;
  if (it->second == 0) coeffs_.erase(it);
  return *this;
}

BoundedPoly BoundedPoly::add(const BoundedPoly& other) const {
  if (caps_ != other.caps_) throw std::invalid_argument("BoundedPoly: cap mismatch");
  BoundedPoly out = *this;
  for (const auto& [k, c] : other.coeffs_) {
    auto [it, inserted] = out.coeffs_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.coeffs_.erase(it);
    }
  }
  return out;
}

void BoundedPoly::for_each_term(
    const std::function<void(std::span<const int>, const BigInt&)>& fn) const {
  std::vector<int> idx;
  for (const auto& [k, c] : coeffs_) {
    decode(k, idx);
    fn(idx, c);
  }
}

BoundedPoly all_vars_one_plus_product(const std::vector<int>& caps) {
  BoundedPoly p = BoundedPoly::constant(caps, 1);
  for (int v = 0; v < static_cast<int>(caps.size()); ++v)
    p = p.mul(BoundedPoly::one_plus_var(caps, v));
  return p;
}

}  // namespace blattice
