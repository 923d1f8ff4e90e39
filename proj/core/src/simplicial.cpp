#include "eil/simplicial.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

namespace eil {

namespace {

using boost::multiprecision::cpp_int;

std::size_t index_of(const std::vector<Mask>& sorted, Mask f) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), f) - sorted.begin());
}

/// Column reduction over the two-element field. Columns are ascending row
/// lists; the pivot of a column is its last row.
class Gf2Reducer {
 public:
  using Column = std::vector<std::uint32_t>;

  explicit Gf2Reducer(std::size_t rows) : pivot_(rows, -1) {}

  /// Returns the pivot row, or -1 when the column reduces to zero.
  long reduce(Column col) {
    while (!col.empty()) {
      const auto low = col.back();
      const long p = pivot_[low];
      if (p < 0) {
        pivot_[low] = static_cast<long>(stored_.size());
        stored_.push_back(std::move(col));
        return static_cast<long>(low);
      }
      Column sum;
      const Column& other = stored_[static_cast<std::size_t>(p)];
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(), std::back_inserter(sum));
      col.swap(sum);
    }
    return -1;
  }

 private:
  std::vector<long> pivot_;
  std::vector<Column> stored_;
};

/// Fraction-free integer column reduction: a clashing column is replaced by
/// an integer combination that kills its pivot entry, then divided by the
/// gcd of its entries. The rank equals the rank over the rationals.
class RationalReducer {
 public:
  using Column = std::vector<std::pair<std::uint32_t, cpp_int>>;

  explicit RationalReducer(std::size_t rows) : pivot_(rows, -1) {}

  long reduce(Column col) {
    while (!col.empty()) {
      const auto low = col.back().first;
      const long p = pivot_[low];
      if (p < 0) {
        pivot_[low] = static_cast<long>(stored_.size());
        stored_.push_back(std::move(col));
        return static_cast<long>(low);
      }
      const Column& other = stored_[static_cast<std::size_t>(p)];
      const cpp_int a = col.back().second;
      const cpp_int b = other.back().second;
      const cpp_int g = boost::multiprecision::gcd(a, b);
      const cpp_int ca = b / g;
      const cpp_int cb = a / g;
      Column sum;
      auto i = col.begin();
      auto j = other.begin();
      while (i != col.end() || j != other.end()) {
        if (j == other.end() || (i != col.end() && i->first < j->first)) {
          sum.emplace_back(i->first, ca * i->second);
          ++i;
        } else if (i == col.end() || j->first < i->first) {
          sum.emplace_back(j->first, -cb * j->second);
          ++j;
        } else {
          cpp_int v = ca * i->second - cb * j->second;
          if (v != 0) sum.emplace_back(i->first, std::move(v));
          ++i;
          ++j;
        }
      }
      cpp_int content = 0;
      for (const auto& e : sum) content = boost::multiprecision::gcd(content, e.second);
      if (content > 1) {
        for (auto& e : sum) e.second /= content;
      }
      col.swap(sum);
    }
    return -1;
  }

 private:
  std::vector<long> pivot_;
  std::vector<Column> stored_;
};

/// Ranks of the boundary maps out of each level (level k = dimension k-1),
/// reducing from the top so that pivot rows of level k+1 can be skipped in
/// level k (they reduce to zero).
template <class Reducer, class MakeColumn>
std::vector<std::size_t> boundary_ranks(const std::vector<std::vector<Mask>>& faces, MakeColumn make) {
  const std::size_t levels = faces.size();
  std::vector<std::size_t> rank(levels + 1, 0);
  std::vector<char> cleared;
  for (std::size_t k = levels - 1; k >= 1; --k) {
    Reducer reducer(faces[k - 1].size());
    std::vector<char> next_cleared(faces[k - 1].size(), 0);
    for (std::size_t c = 0; c < faces[k].size(); ++c) {
      if (!cleared.empty() && cleared[c]) continue;
      const long low = reducer.reduce(make(faces[k - 1], faces[k][c]));
      if (low >= 0) {
        ++rank[k];
        next_cleared[static_cast<std::size_t>(low)] = 1;
      }
    }
    cleared.swap(next_cleared);
  }
  return rank;
}

}  // namespace

const char* field_name(Field f) { return f == Field::gf2 ? "gf2" : "rational"; }

Field parse_field(std::string_view name) {
  if (name == "gf2" || name == "GF2") return Field::gf2;
  if (name == "rational" || name == "Q" || name == "QQ") return Field::rational;
  throw InputError("unknown field '" + std::string(name) + "' (expected gf2 or rational)");
}

SimplicialComplex::SimplicialComplex(std::size_t n, std::vector<Mask> nonfaces) : n_(n) {
  if (n > 64) throw ResourceError("simplicial complex: more than 64 vertices");
  std::sort(nonfaces.begin(), nonfaces.end(), [](Mask a, Mask b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  nonfaces.erase(std::unique(nonfaces.begin(), nonfaces.end()), nonfaces.end());
  for (Mask f : nonfaces) {
    const bool redundant =
        std::any_of(nonfaces_.begin(), nonfaces_.end(), [&](Mask k) { return (k & ~f) == 0; });
    if (!redundant) nonfaces_.push_back(f);
  }
}

bool SimplicialComplex::is_face(Mask f) const {
  return std::none_of(nonfaces_.begin(), nonfaces_.end(), [&](Mask k) { return (k & ~f) == 0; });
}

std::vector<std::vector<Mask>> SimplicialComplex::faces(Mask w) const {
  std::vector<Vertex> verts;
  for_each_bit(w, [&](Vertex v) { verts.push_back(v); });
  // Nonfaces inside W, grouped by their largest vertex: adding v to a face
  // can only complete a nonface whose largest vertex is v.
  std::vector<std::vector<Mask>> closing(64);
  for (Mask k : nonfaces_) {
    if (k != 0 && (k & ~w) == 0) closing[63 - static_cast<std::size_t>(std::countl_zero(k))].push_back(k);
  }
  std::vector<std::vector<Mask>> out(1, std::vector<Mask>{0});
  if (std::find(nonfaces_.begin(), nonfaces_.end(), Mask{0}) != nonfaces_.end()) {
    throw InputError("simplicial complex: the empty set is a nonface");
  }
  std::vector<std::pair<Mask, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    const auto [f, from] = stack.back();
    stack.pop_back();
    for (std::size_t i = from; i < verts.size(); ++i) {
      const Vertex v = verts[i];
      const Mask g = f | bit(v);
      const bool blocked =
          std::any_of(closing[v].begin(), closing[v].end(), [&](Mask k) { return (k & ~g) == 0; });
      if (blocked) continue;
      const auto level = static_cast<std::size_t>(popcount(g));
      if (out.size() <= level) out.resize(level + 1);
      out[level].push_back(g);
      stack.emplace_back(g, i + 1);
    }
  }
  for (auto& level : out) std::sort(level.begin(), level.end());
  return out;
}

std::optional<std::vector<std::vector<Mask>>> SimplicialComplex::dual_faces(Mask w, std::size_t cap) const {
  std::vector<Mask> inside;
  for (Mask k : nonfaces_) {
    if ((k & ~w) == 0) inside.push_back(k);
  }
  std::vector<Vertex> verts;
  for_each_bit(w, [&](Vertex v) { verts.push_back(v); });
  std::vector<std::vector<Mask>> out;
  if (inside.empty()) return out;
  out.push_back({0});
  std::size_t count = 1;
  // Each frame carries the nonfaces still disjoint from the face.
  struct Frame {
    Mask face;
    std::size_t from;
    std::vector<Mask> open;
  };
  std::vector<Frame> stack;
  stack.push_back({0, 0, inside});
  while (!stack.empty()) {
    Frame top = std::move(stack.back());
    stack.pop_back();
    for (std::size_t i = top.from; i < verts.size(); ++i) {
      const Vertex v = verts[i];
      std::vector<Mask> open;
      for (Mask k : top.open) {
        if ((k & bit(v)) == 0) open.push_back(k);
      }
      if (open.empty()) continue;
      const Mask g = top.face | bit(v);
      const auto level = static_cast<std::size_t>(popcount(g));
      if (out.size() <= level) out.resize(level + 1);
      out[level].push_back(g);
      if (++count > cap) return std::nullopt;
      stack.push_back({g, i + 1, std::move(open)});
    }
  }
  for (auto& level : out) std::sort(level.begin(), level.end());
  return out;
}

SimplicialComplex stanley_reisner(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw InputError("stanley_reisner: ideal is not squarefree");
  std::vector<Mask> nonfaces;
  for (const Monomial& m : ideal.generators) nonfaces.push_back(m.support_mask());
  return SimplicialComplex(ideal.num_variables(), std::move(nonfaces));
}

std::map<int, std::size_t> reduced_homology_dims(const std::vector<std::vector<Mask>>& faces, Field field) {
  std::vector<std::size_t> rank;
  if (field == Field::gf2) {
    rank = boundary_ranks<Gf2Reducer>(faces, [](const std::vector<Mask>& rows, Mask f) {
      Gf2Reducer::Column col;
      for_each_bit(f, [&](Vertex v) { col.push_back(static_cast<std::uint32_t>(index_of(rows, f & ~bit(v)))); });
      std::sort(col.begin(), col.end());
      return col;
    });
  } else {
    rank = boundary_ranks<RationalReducer>(faces, [](const std::vector<Mask>& rows, Mask f) {
      RationalReducer::Column col;
      int sign = 1;
      for_each_bit(f, [&](Vertex v) {
        col.emplace_back(static_cast<std::uint32_t>(index_of(rows, f & ~bit(v))), sign);
        sign = -sign;
      });
      std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      return col;
    });
  }
  std::map<int, std::size_t> out;
  for (std::size_t k = 0; k < faces.size(); ++k) {
    const std::size_t h = faces[k].size() - rank[k] - rank[k + 1];
    if (h != 0) out[static_cast<int>(k) - 1] = h;
  }
  return out;
}

std::map<int, std::size_t> reduced_homology_dims(const SimplicialComplex& cx, Mask w, Field field,
                                                 const Budget& budget) {
  budget.require_subset(static_cast<std::size_t>(popcount(w)), "reduced_homology_dims");
  std::vector<Mask> inside;
  for (Mask k : cx.minimal_nonfaces()) {
    if ((k & ~w) == 0) inside.push_back(k);
  }
  int shift = 0;
  while (true) {
    // Singleton nonfaces are not vertices at all.
    for (Mask k : inside) {
      if (popcount(k) == 1) w &= ~k;
    }
    std::erase_if(inside, [](Mask k) { return popcount(k) == 1; });
    if (w == 0) return {{shift - 1, 1}};
    Mask covered = 0;
    for (Mask k : inside) covered |= k;
    if ((w & ~covered) != 0) return {};  // cone point

    // If every nonface through a also passes through b, the faces avoiding b
    // form a cone with apex a, so the complex is the suspension of lk(b).
    std::optional<Vertex> drop;
    for_each_bit(w, [&](Vertex a) {
      if (drop) return;
      Mask common = w & ~bit(a);
      for (Mask k : inside) {
        if ((k & bit(a)) != 0) common &= k;
      }
      if (common != 0) drop = lowest(common);
    });
    if (!drop) break;
    const Mask b = bit(*drop);
    for (Mask& k : inside) k &= ~b;
    w &= ~b;
    inside = SimplicialComplex(cx.num_vertices(), std::move(inside)).minimal_nonfaces();
    ++shift;
  }

  const SimplicialComplex rest(cx.num_vertices(), inside);
  const int size = popcount(w);
  std::map<int, std::size_t> out;
  std::optional<std::vector<std::vector<Mask>>> dual;
  if (size >= 2) dual = rest.dual_faces(w, std::size_t{1} << (size - 1));
  if (dual && !dual->empty()) {
    // Alexander duality inside W.
    for (const auto& [d, h] : reduced_homology_dims(*dual, field)) out[size - d - 3 + shift] = h;
  } else {
    for (const auto& [d, h] : reduced_homology_dims(rest.faces(w), field)) out[d + shift] = h;
  }
  return out;
}

std::int64_t reduced_euler_characteristic(const SimplicialComplex& cx, Mask w, const Budget& budget) {
  budget.require_subset(static_cast<std::size_t>(popcount(w)), "reduced_euler_characteristic");
  std::int64_t chi = 0;
  for (Mask s = w;; s = (s - 1) & w) {
    if (cx.is_face(s)) chi += popcount(s) % 2 == 1 ? 1 : -1;
    if (s == 0) break;
  }
  return chi;
}

}  // namespace eil
