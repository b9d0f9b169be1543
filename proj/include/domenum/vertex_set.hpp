#ifndef DOMENUM_VERTEX_SET_HPP
#define DOMENUM_VERTEX_SET_HPP

#include <algorithm>
#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <ostream>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace domenum {

using Vertex = std::size_t;
using CliqueId = std::size_t;

inline constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

/// Fixed-universe set of vertex ids backed by 64-bit words. Universes of up
/// to 256 ids are stored inline.
///
/// Binary operations require both operands to share the same universe size.
/// Iteration visits members in ascending id order.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kBits = 64;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, std::size_t pos) : set_(set), pos_(pos) {}

    Vertex operator*() const { return pos_; }
    const_iterator& operator++() {
      pos_ = set_->next(pos_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

   private:
    const VertexSet* set_ = nullptr;
    std::size_t pos_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + kBits - 1) / kBits, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }
  template <typename Range>
  static VertexSet from_range(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
  }
  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(Vertex v) const {
    return v < universe_ && ((words_[v / kBits] >> (v % kBits)) & 1U) != 0;
  }
  void insert(Vertex v) {
    assert(v < universe_);
    words_[v / kBits] |= Word{1} << (v % kBits);
  }
  void erase(Vertex v) {
    assert(v < universe_);
    words_[v / kBits] &= ~(Word{1} << (v % kBits));
  }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  std::size_t size() const {
    std::size_t total = 0;
    for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  /// Smallest member, or kNone.
  Vertex front() const { return next(0); }
  /// Largest member, or kNone.
  Vertex back() const {
    for (std::size_t i = words_.size(); i-- > 0;) {
      if (words_[i] != 0) return i * kBits + (kBits - 1 - static_cast<std::size_t>(std::countl_zero(words_[i])));
    }
    return kNone;
  }
  /// Smallest member >= from, or kNone.
  Vertex next(std::size_t from) const {
    if (from >= universe_) return kNone;
    std::size_t wi = from / kBits;
    Word w = words_[wi] & (~Word{0} << (from % kBits));
    while (true) {
      if (w != 0) return wi * kBits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi >= words_.size()) return kNone;
      w = words_[wi];
    }
  }

  const_iterator begin() const { return {this, front()}; }
  const_iterator end() const { return {this, kNone}; }

  bool intersects(const VertexSet& o) const {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const { return full(universe_) - *this; }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  /// Lexicographic order on the ascending member lists.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
      if (*ia != *ib) return *ia <=> *ib;
    }
    if (ia == a.end() && ib == b.end()) return std::strong_ordering::equal;
    return ia == a.end() ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  std::size_t hash() const {
    std::size_t h = universe_;
    for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  friend std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
    os << '{';
    bool first = true;
    for (Vertex v : s) {
      if (!first) os << ',';
      os << v;
      first = false;
    }
    return os << '}';
  }

 private:
  void trim() {
    if (universe_ % kBits != 0 && !words_.empty()) words_.back() &= (Word{1} << (universe_ % kBits)) - 1;
  }

  std::size_t universe_ = 0;
  boost::container::small_vector<Word, 4> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace domenum

#endif  // DOMENUM_VERTEX_SET_HPP
