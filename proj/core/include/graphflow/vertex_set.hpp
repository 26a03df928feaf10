#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "graphflow/errors.hpp"

namespace graphflow {

/// A subset of the vertices {0, ..., d-1}, packed into 64-bit words so that
/// unions, intersections and one-step images are word-parallel.
///
/// The dimension d is part of the value: operations on sets of different
/// dimension throw DimensionMismatch.
class VertexSet {
 public:
  VertexSet() : d_(0) {}

  explicit VertexSet(int d) : d_(check_dim(d)), words_((d + 63) / 64, 0) {}

  VertexSet(int d, std::initializer_list<int> members) : VertexSet(d) {
    for (int v : members) insert(v);
  }

  static VertexSet full(int d) {
    VertexSet s(d);
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~0ULL;
    s.trim();
    return s;
  }

  int dimension() const { return d_; }

  bool contains(int v) const {
    return v >= 0 && v < d_ && (words_[v >> 6] >> (v & 63)) & 1ULL;
  }

  void insert(int v) {
    check_vertex(v);
    words_[v >> 6] |= 1ULL << (v & 63);
  }

  void erase(int v) {
    check_vertex(v);
    words_[v >> 6] &= ~(1ULL << (v & 63));
  }

  int size() const {
    int n = 0;
    for (std::uint64_t w : words_) n += std::popcount(w);
    return n;
  }

  bool empty() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    check_same(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    check_same(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }

  /// Set difference (this \ o).
  VertexSet& operator-=(const VertexSet& o) {
    check_same(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet r(d_);
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = ~words_[w];
    r.trim();
    return r;
  }

  bool is_subset_of(const VertexSet& o) const {
    check_same(o);
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    check_same(o);
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.d_ == b.d_ && a.words_ == b.words_;
  }

  /// Members in ascending order (0-based).
  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(size());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        f(static_cast<int>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  int min_member() const {  // -1 when empty
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
    return -1;
  }

  /// Lexicographic order on the ascending member sequence ({1,3} < {2,3},
  /// prefixes first). Used wherever reports need a canonical set order.
  bool canonical_less(const VertexSet& o) const {
    check_same(o);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t diff = words_[w] ^ o.words_[w];
      if (!diff) continue;
      std::uint64_t low = diff & (~diff + 1);
      // The side owning the lowest differing bit has the smaller element
      // there, unless the other side already ended (then it is a prefix).
      if (words_[w] & low) return !is_prefix_below(o, w, low);
      return o.is_prefix_below(*this, w, low);
    }
    return false;
  }

  std::string to_string() const {  // 1-based, e.g. "{1,3}"
    std::string s = "{";
    bool first = true;
    for_each([&](int v) {
      if (!first) s += ",";
      s += std::to_string(v + 1);
      first = false;
    });
    return s + "}";
  }

  std::size_t hash() const {
    std::size_t h = std::hash<int>{}(d_);
    for (std::uint64_t w : words_)
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  static int check_dim(int d) {
    if (d < 0) throw Error(ErrorCode::DimensionMismatch, "negative dimension");
    return d;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= d_)
      throw Error(ErrorCode::VertexOutOfRange,
                  "vertex " + std::to_string(v + 1) + " not in 1.." + std::to_string(d_));
  }

  void check_same(const VertexSet& o) const {
    if (d_ != o.d_)
      throw Error(ErrorCode::DimensionMismatch,
                  "vertex sets of dimension " + std::to_string(d_) + " and " +
                      std::to_string(o.d_));
  }

  // True when `o` has no member at or above the bit `low` in word `w`,
  // i.e. o is a strict prefix of *this at the first difference.
  bool is_prefix_below(const VertexSet& o, std::size_t w, std::uint64_t low) const {
    if (o.words_[w] & ~(low - 1)) return false;
    for (std::size_t k = w + 1; k < o.words_.size(); ++k)
      if (o.words_[k]) return false;
    return true;
  }

  void trim() {
    if (words_.empty()) return;
    int tail = d_ & 63;
    if (tail) words_.back() &= (1ULL << tail) - 1;
  }

  int d_;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

inline bool canonical_set_less(const VertexSet& a, const VertexSet& b) {
  return a.canonical_less(b);
}

/// Sort key used for attractor listings: cardinality, then canonical order.
inline bool cardinality_then_canonical_less(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.canonical_less(b);
}

}  // namespace graphflow
