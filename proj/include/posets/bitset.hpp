#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace posets {

// Fixed-size bitset sized at run time. Rows of relation matrices are stored
// as Bitsets so closure and subset tests run a word at a time.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }

  bool test(int i) const {
    assert(i >= 0 && i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  Bitset& operator|=(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool is_subset_of(const Bitset& o) const {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  // Lowest/highest set bit, -1 when empty.
  int first_set() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return static_cast<int>(k * 64 + std::countr_zero(w_[k]));
    return -1;
  }
  int last_set() const {
    for (std::size_t k = w_.size(); k-- > 0;)
      if (w_[k]) return static_cast<int>(k * 64 + 63 - std::countl_zero(w_[k]));
    return -1;
  }

  template <class F>
  void for_each(F f) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<int>(k * 64 + b));
        w &= w - 1;
      }
    }
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace posets
