#ifndef SEQCM_COMPLEX_HPP
#define SEQCM_COMPLEX_HPP

#include <cstdint>
#include <vector>

#include "seqcm/ideal.hpp"
#include "seqcm/ring.hpp"

namespace seqcm {

/// A face as a bitset of vertices (vertex j <-> bit j).
using FaceMask = std::uint64_t;

int face_dim(FaceMask f);  // cardinality - 1

/// A simplicial complex on a fixed vertex set, stored by its facets
/// (inclusion-maximal faces). The void complex (no faces at all) and the
/// irrelevant complex {emptyset} are distinct:
///   void:       facets() is empty
///   {emptyset}: facets() == {0}
/// dim(void) = -infinity by convention; dim({emptyset}) = -1.
class SimplicialComplex {
 public:
  /// Keeps the inclusion-maximal faces of `faces`; an empty list is void.
  SimplicialComplex(int vertex_count, std::vector<FaceMask> faces);

  static SimplicialComplex void_complex(int vertex_count);
  static SimplicialComplex irrelevant(int vertex_count);
  static SimplicialComplex full_simplex(int vertex_count);

  int vertex_count() const { return vertex_count_; }
  const std::vector<FaceMask>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }
  /// Throws on the void complex.
  int dim() const;

  bool has_face(FaceMask f) const;

  /// All faces in lexicographic order (by cardinality, then by the sorted
  /// vertex tuple). Includes the empty face for non-void complexes.
  std::vector<FaceMask> faces() const;
  std::vector<FaceMask> faces_of_dim(int i) const;
  int face_count(int i) const;

  /// lk(F) = { G : G and F disjoint, G union F a face }, on the same
  /// ambient vertex set. Requires F to be a face.
  SimplicialComplex link(FaceMask f) const;

  /// Subcomplex generated by the faces of dimension exactly i.
  /// Requires -1 <= i <= dim.
  SimplicialComplex pure_skeleton(int i) const;

  /// Subcomplex of all faces of dimension <= i (the complete skeleton).
  SimplicialComplex full_skeleton(int i) const;

  /// Relabels onto the vertices that actually occur (ghost vertices
  /// dropped). Homology and face structure are unchanged.
  SimplicialComplex compactified() const;

  bool operator==(const SimplicialComplex& o) const {
    return vertex_count_ == o.vertex_count_ && facets_ == o.facets_;
  }
  bool operator!=(const SimplicialComplex& o) const { return !(*this == o); }

 private:
  int vertex_count_;
  std::vector<FaceMask> facets_;  // maximal, sorted
};

/// Stanley-Reisner complex of a squarefree proper monomial ideal: faces are
/// the supports of squarefree monomials outside the ideal.
SimplicialComplex complex_from_ideal(const MonomialIdeal& ideal);

/// Stanley-Reisner ideal: generated by the minimal non-faces. The ring must
/// have one variable per vertex. The void complex maps to the unit ideal.
MonomialIdeal ideal_of_complex(const SimplicialComplex& complex,
                               const RingPtr& ring);

}  // namespace seqcm

#endif
