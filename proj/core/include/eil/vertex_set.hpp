#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace eil {

using Vertex = std::uint32_t;

/// Subset of {0..n-1} packed into 64-bit words. Used by every search below
/// the vertex budget, where the whole graph fits in a single word.
using Mask = std::uint64_t;

inline constexpr Mask bit(Vertex v) { return Mask{1} << v; }
inline int popcount(Mask m) { return std::popcount(m); }
inline Vertex lowest(Mask m) { return static_cast<Vertex>(std::countr_zero(m)); }

template <class F>
inline void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(lowest(m));
    m &= m - 1;
  }
}

/// Dynamic bitset over the vertex ids of a particular host graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

  static VertexSet full(std::size_t universe);
  static VertexSet from_mask(std::size_t universe, Mask m);

  std::size_t universe() const { return universe_; }

  bool contains(Vertex v) const {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);

  std::size_t size() const;
  bool empty() const;

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool is_subset_of(const VertexSet& o) const;
  bool intersects(const VertexSet& o) const;

  std::optional<Vertex> first() const;
  std::vector<Vertex> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Mask m = words_[w];
      while (m != 0) {
        f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(m))));
        m &= m - 1;
      }
    }
  }

  /// Single-word view; throws ResourceError when universe > 64.
  Mask to_mask() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<Mask> words_;
};

}  // namespace eil
