#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace burnside {

// Subset of {0,...,n-1} (group elements or points), bit-packed.
class ElemSet {
 public:
  ElemSet() : n_(0) {}
  explicit ElemSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int universe() const { return n_; }

  void add(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void remove(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }

  bool empty() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }

  // Least member, or -1.
  int first() const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return int(k * 64 + __builtin_ctzll(w_[k]));
    return -1;
  }

  // Next member strictly after i, or -1.
  int next(int i) const {
    ++i;
    if (i >= n_) return -1;
    size_t k = size_t(i) >> 6;
    uint64_t w = w_[k] & (~uint64_t(0) << (i & 63));
    while (true) {
      if (w) return int(k * 64 + __builtin_ctzll(w));
      if (++k >= w_.size()) return -1;
      w = w_[k];
    }
  }

  bool subset_of(const ElemSet& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  ElemSet operator&(const ElemSet& o) const {
    ElemSet r(n_);
    for (size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & o.w_[k];
    return r;
  }

  ElemSet operator|(const ElemSet& o) const {
    ElemSet r(n_);
    for (size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] | o.w_[k];
    return r;
  }

  bool operator==(const ElemSet& o) const { return w_ == o.w_; }
  bool operator!=(const ElemSet& o) const { return w_ != o.w_; }

  // Lexicographic order on the sorted element sequences: {0,2} < {0,1,5}
  // is false because position 1 compares 2 against 1. A proper prefix
  // sorts first. Conjugate subgroups share a cardinality, so within a
  // conjugacy class this reduces to "first differing element wins".
  bool lex_less(const ElemSet& o) const {
    for (size_t k = 0; k < w_.size(); ++k) {
      uint64_t x = w_[k] ^ o.w_[k];
      if (!x) continue;
      int d = int(k * 64 + __builtin_ctzll(x));
      if (test(d)) return o.any_above(d);
      return !any_above(d);
    }
    return false;
  }

  bool any_above(int i) const {
    int j = next(i);
    return j >= 0;
  }

  std::vector<int> elements() const {
    std::vector<int> v;
    v.reserve(count());
    for (int i = first(); i >= 0; i = next(i)) v.push_back(i);
    return v;
  }

  size_t hash() const {
    size_t h = 1469598103934665603ull;
    for (uint64_t w : w_) {
      h ^= size_t(w);
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  int n_;
  std::vector<uint64_t> w_;
};

struct ElemSetHash {
  size_t operator()(const ElemSet& s) const { return s.hash(); }
};

}  // namespace burnside
