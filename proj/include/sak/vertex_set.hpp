#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <vector>

namespace sak {

// Fixed-width bit vector over dense vertex indices 0..n-1.
class VertexSet {
 public:
  VertexSet() : n_(0) {}
  explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

  static VertexSet full(int n) {
    VertexSet s(n);
    for (int v = 0; v < n; v++) s.add(v);
    return s;
  }

  static VertexSet of(int n, std::initializer_list<int> vs) {
    VertexSet s(n);
    for (int v : vs) s.add(v);
    return s;
  }

  int universe() const { return n_; }

  bool contains(int v) const {
    assert(v >= 0 && v < n_);
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }
  void add(int v) {
    assert(v >= 0 && v < n_);
    words_[v >> 6] |= uint64_t{1} << (v & 63);
  }
  void remove(int v) {
    assert(v >= 0 && v < n_);
    words_[v >> 6] &= ~(uint64_t{1} << (v & 63));
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }
  bool empty() const {
    for (uint64_t w : words_) if (w) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); i++) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); i++) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); i++) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& o) const = default;

  bool subset_of(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); i++)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); i++)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  int count_and(const VertexSet& o) const {
    assert(n_ == o.n_);
    int c = 0;
    for (size_t i = 0; i < words_.size(); i++)
      c += __builtin_popcountll(words_[i] & o.words_[i]);
    return c;
  }
  int count_andnot(const VertexSet& o) const {
    assert(n_ == o.n_);
    int c = 0;
    for (size_t i = 0; i < words_.size(); i++)
      c += __builtin_popcountll(words_[i] & ~o.words_[i]);
    return c;
  }

  // Smallest member >= from, or -1.
  int next(int from = 0) const {
    if (from >= n_) return -1;
    int wi = from >> 6;
    uint64_t w = words_[wi] & (~uint64_t{0} << (from & 63));
    while (true) {
      if (w) return (wi << 6) + __builtin_ctzll(w);
      if (++wi >= (int)words_.size()) return -1;
      w = words_[wi];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int v = next(0); v >= 0; v = next(v + 1)) f(v);
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  // Order: by cardinality, then lowest differing vertex first. Used for
  // deterministic tie-breaking among minimum witnesses.
  static bool lex_less(const VertexSet& a, const VertexSet& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    int va = a.next(0), vb = b.next(0);
    while (va == vb && va >= 0) {
      va = a.next(va + 1);
      vb = b.next(vb + 1);
    }
    if (va < 0) return false;
    if (vb < 0) return true;
    return va < vb;
  }

 private:
  int n_;
  std::vector<uint64_t> words_;
};

}  // namespace sak
