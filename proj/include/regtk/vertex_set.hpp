#pragma once

// Subsets of a vertex ground set [0, n), stored as fixed-universe bitsets so
// intersections and popcounts run a word at a time.

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace regtk {

class VertexSet {
 public:
  VertexSet() : universe_(0) {}

  explicit VertexSet(int universe)
      : universe_(universe), bits_((universe + 63) / 64, 0) {
    assert(universe >= 0);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.add(v);
    return s;
  }

  static VertexSet of(int universe, std::initializer_list<int> vs) {
    VertexSet s(universe);
    for (int v : vs) s.add(v);
    return s;
  }

  template <class Container>
  static VertexSet from_indices(int universe, const Container& vs) {
    VertexSet s(universe);
    for (int v : vs) s.add(v);
    return s;
  }

  int universe() const { return universe_; }

  void add(int v) {
    assert(v >= 0 && v < universe_);
    bits_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void remove(int v) {
    assert(v >= 0 && v < universe_);
    bits_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  bool contains(int v) const {
    if (v < 0 || v >= universe_) return false;
    return (bits_[v >> 6] >> (v & 63)) & 1;
  }

  int size() const {
    int c = 0;
    for (std::uint64_t w : bits_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (std::uint64_t w : bits_) {
      if (w != 0) return false;
    }
    return true;
  }

  int intersect_size(const VertexSet& other) const {
    assert(universe_ == other.universe_);
    int c = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      c += std::popcount(bits_[i] & other.bits_[i]);
    }
    return c;
  }

  VertexSet operator&(const VertexSet& o) const {
    assert(universe_ == o.universe_);
    VertexSet r(universe_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & o.bits_[i];
    return r;
  }

  VertexSet operator|(const VertexSet& o) const {
    assert(universe_ == o.universe_);
    VertexSet r(universe_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] | o.bits_[i];
    return r;
  }

  // Set difference.
  VertexSet operator-(const VertexSet& o) const {
    assert(universe_ == o.universe_);
    VertexSet r(universe_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & ~o.bits_[i];
    return r;
  }

  VertexSet complement() const { return full(universe_) - *this; }

  int symmetric_difference_size(const VertexSet& o) const {
    assert(universe_ == o.universe_);
    int c = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      c += std::popcount(bits_[i] ^ o.bits_[i]);
    }
    return c;
  }

  bool operator==(const VertexSet& o) const {
    return universe_ == o.universe_ && bits_ == o.bits_;
  }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      std::uint64_t w = bits_[i];
      while (w != 0) {
        int b = std::countr_zero(w);
        out.push_back(static_cast<int>(i * 64 + b));
        w &= w - 1;
      }
    }
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      std::uint64_t w = bits_[i];
      while (w != 0) {
        int b = std::countr_zero(w);
        f(static_cast<int>(i * 64 + b));
        w &= w - 1;
      }
    }
  }

  // Lexicographic order on the ascending index sequences, so {0,2} < {1} and
  // {0} < {0,1} (a proper prefix sorts first).
  static bool lex_less(const VertexSet& a, const VertexSet& b) {
    assert(a.universe_ == b.universe_);
    int v = -1;  // lowest differing vertex
    for (std::size_t i = 0; i < a.bits_.size() && v < 0; ++i) {
      std::uint64_t diff = a.bits_[i] ^ b.bits_[i];
      if (diff != 0) v = static_cast<int>(i * 64) + std::countr_zero(diff);
    }
    if (v < 0) return false;
    const VertexSet& with = (a.contains(v) ? a : b);
    const VertexSet& without = (a.contains(v) ? b : a);
    // Sequences agree below v; `with` continues with v. `without` either ends
    // (it is a prefix, hence smaller) or continues with something larger.
    bool without_has_tail = false;
    without.for_each([&](int u) { without_has_tail |= (u > v); });
    bool with_is_less = without_has_tail;
    return (&with == &a) ? with_is_less : !with_is_less;
  }

 private:
  int universe_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace regtk
