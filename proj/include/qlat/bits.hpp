#pragma once
// Compact dynamic bitset. Used for order-relation rows and state sets; sized
// once at construction, fixed afterwards. Trailing bits of the last word are
// kept zero so that whole-word comparison and popcount stay valid.

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace qlat {

class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

  static Bits full(int n) {
    Bits b(n);
    for (auto& w : b.w_) w = ~uint64_t{0};
    b.trim();
    return b;
  }

  int size() const { return n_; }

  bool test(int i) const {
    assert(i >= 0 && i < n_);
    return w_[i >> 6] >> (i & 63) & 1;
  }

  void set(int i, bool v = true) {
    assert(i >= 0 && i < n_);
    if (v) w_[i >> 6] |= uint64_t{1} << (i & 63);
    else w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bits& operator&=(const Bits& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); i++) w_[i] &= o.w_[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); i++) w_[i] |= o.w_[i];
    return *this;
  }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }

  // Set difference: bits of *this not in o.
  Bits andnot(const Bits& o) const {
    assert(n_ == o.n_);
    Bits r(n_);
    for (size_t i = 0; i < w_.size(); i++) r.w_[i] = w_[i] & ~o.w_[i];
    return r;
  }

  // Complement within the ground set.
  Bits complemented() const {
    Bits r(n_);
    for (size_t i = 0; i < w_.size(); i++) r.w_[i] = ~w_[i];
    r.trim();
    return r;
  }

  bool is_subset_of(const Bits& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); i++)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bits& o) const { return !(*this == o); }

  // First set bit at or after `from`, -1 when none.
  int next_set(int from = 0) const {
    for (int i = from < 0 ? 0 : from; i < n_; i++) {
      if (!(w_[i >> 6] >> (i & 63))) { i |= 63; continue; }  // word exhausted above i
      if (test(i)) return i;
    }
    return -1;
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(count());
    for (int i = next_set(0); i >= 0; i = next_set(i + 1)) out.push_back(i);
    return out;
  }

  // Canonical total order: smaller cardinality first; ties broken by the
  // lexicographic order of the ascending index lists (lowest differing index
  // wins). Gives a deterministic enumeration of set families.
  static bool canon_less(const Bits& x, const Bits& y) {
    int cx = x.count(), cy = y.count();
    if (cx != cy) return cx < cy;
    assert(x.n_ == y.n_);
    for (size_t i = 0; i < x.w_.size(); i++) {
      uint64_t d = x.w_[i] ^ y.w_[i];
      if (d) return x.w_[i] >> std::countr_zero(d) & 1;  // x owns the lowest differing index
    }
    return false;
  }

  size_t hash() const {
    size_t h = std::hash<int>{}(n_);
    for (uint64_t w : w_) h ^= std::hash<uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (uint64_t{1} << (n_ & 63)) - 1;
  }

  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace qlat
