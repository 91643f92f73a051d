#pragma once
#include <cassert>
#include <cstdint>
#include <functional>
#include <vector>

namespace vmc {

// Dense bitset over a fixed vertex id space. Set algebra dominates the
// runtime of almost every operation in this library, so everything that is
// conceptually a vertex set is one of these.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int capacity) : n_(capacity), w_((capacity + 63) / 64, 0) {}

  static VertexSet single(int capacity, int v) {
    VertexSet s(capacity);
    s.set(v);
    return s;
  }

  static VertexSet full(int capacity) {
    VertexSet s(capacity);
    for (int v = 0; v < capacity; ++v) s.set(v);
    return s;
  }

  int capacity() const { return n_; }

  bool test(int v) const {
    assert(v >= 0 && v < n_);
    return (w_[v >> 6] >> (v & 63)) & 1;
  }
  void set(int v) {
    assert(v >= 0 && v < n_);
    w_[v >> 6] |= uint64_t(1) << (v & 63);
  }
  void reset(int v) {
    assert(v >= 0 && v < n_);
    w_[v >> 6] &= ~(uint64_t(1) << (v & 63));
  }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  int count() const {
    int c = 0;
    for (uint64_t x : w_) c += __builtin_popcountll(x);
    return c;
  }
  bool empty() const {
    for (uint64_t x : w_)
      if (x) return false;
    return true;
  }
  bool any() const { return !empty(); }

  VertexSet& operator|=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  // Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  bool intersects(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  // Lowest set bit, -1 when empty.
  int first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i * 64 + __builtin_ctzll(w_[i]));
    return -1;
  }

  template <class F>
  void for_each(F f) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t x = w_[i];
      while (x) {
        int b = __builtin_ctzll(x);
        f(int(i * 64 + b));
        x &= x - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  // True if any member is strictly greater than v.
  bool has_above(int v) const {
    size_t i = size_t(v >> 6);
    if (i >= w_.size()) return false;
    int b = v & 63;
    if (b < 63 && (w_[i] >> (b + 1))) return true;
    for (size_t j = i + 1; j < w_.size(); ++j)
      if (w_[j]) return true;
    return false;
  }

  size_t hash() const {
    size_t h = 1469598103934665603ull;
    for (uint64_t x : w_) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }

  // Orders sets as their sorted member lists ({0,3} < {1,2}, prefixes first).
  static int compare_as_lists(const VertexSet& a, const VertexSet& b) {
    assert(a.n_ == b.n_);
    for (size_t i = 0; i < a.w_.size(); ++i) {
      uint64_t diff = a.w_[i] ^ b.w_[i];
      if (!diff) continue;
      int bit = __builtin_ctzll(diff);
      int e = int(i * 64 + bit);
      // Elements below e agree. The set holding e continues the common prefix
      // with a smaller element, unless the other set ends here entirely.
      if ((a.w_[i] >> bit) & 1) return b.has_above(e) ? -1 : 1;
      return a.has_above(e) ? 1 : -1;
    }
    return 0;
  }
  bool operator<(const VertexSet& o) const { return compare_as_lists(*this, o) < 0; }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

struct VertexSetHash {
  size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace vmc
