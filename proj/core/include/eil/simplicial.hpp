#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "eil/error.hpp"
#include "eil/monomial.hpp"

namespace eil {

enum class Field { gf2, rational };

const char* field_name(Field f);
Field parse_field(std::string_view name);

/// Complex on vertices 0..n-1 described by its minimal nonfaces. A set is a
/// face iff it contains no minimal nonface.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Non-minimal nonfaces are dropped. Requires n <= 64.
  SimplicialComplex(std::size_t n, std::vector<Mask> nonfaces);

  std::size_t num_vertices() const { return n_; }
  const std::vector<Mask>& minimal_nonfaces() const { return nonfaces_; }
  bool is_face(Mask f) const;

  /// Faces of the induced subcomplex on W grouped by dimension: entry d+1
  /// holds the d-dimensional faces in increasing mask order. Entry 0 is {0}.
  std::vector<std::vector<Mask>> faces(Mask w) const;

  /// Faces of the Alexander dual of the subcomplex on W, that is the sets
  /// G within W whose complement in W is a nonface, in the same layout.
  /// Gives up (nullopt) after `cap` faces.
  std::optional<std::vector<std::vector<Mask>>> dual_faces(Mask w, std::size_t cap) const;

 private:
  std::size_t n_ = 0;
  std::vector<Mask> nonfaces_;
};

/// Minimal nonfaces are the generator supports. Throws InputError for a
/// non-squarefree generator.
SimplicialComplex stanley_reisner(const MonomialIdeal& ideal);

/// Nonzero reduced Betti numbers of the subcomplex induced on W, keyed by
/// dimension. An empty W gives the complex {empty set}, i.e. {-1: 1}.
/// Cone points, and vertices b for which the faces avoiding b form a cone,
/// are removed first (the latter as a suspension); what remains is reduced
/// on the complex or its Alexander dual, whichever is smaller.
std::map<int, std::size_t> reduced_homology_dims(const SimplicialComplex& cx, Mask w, Field field,
                                                 const Budget& budget = Budget{});

/// Plain boundary-matrix ranks over a face list laid out as by
/// SimplicialComplex::faces.
std::map<int, std::size_t> reduced_homology_dims(const std::vector<std::vector<Mask>>& faces, Field field);

/// Sum over faces of (-1)^dim, the empty face included, found by testing
/// every subset of W. Requires |W| <= budget.subset.
std::int64_t reduced_euler_characteristic(const SimplicialComplex& cx, Mask w, const Budget& budget = Budget{});

}  // namespace eil
