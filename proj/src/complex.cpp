#include "seqcm/complex.hpp"

#include <algorithm>
#include <bit>

namespace seqcm {

namespace {

// Vertex-set enumeration is 2^n; anything past this is outside the toolkit's
// design envelope (see the per-module performance non-goals).
constexpr int kMaxEnumerableVertices = 24;

void check_enumerable(int vertex_count, const char* where) {
  if (vertex_count > kMaxEnumerableVertices)
    throw PreconditionError(std::string(where) + ": vertex count " +
                            std::to_string(vertex_count) +
                            " exceeds the supported maximum of " +
                            std::to_string(kMaxEnumerableVertices));
}

// Lexicographic order on faces: by cardinality, then by the increasing
// vertex tuple. Determines the boundary-matrix layout.
bool face_lex_before(FaceMask a, FaceMask b) {
  int ca = std::popcount(a), cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  while (a && b) {
    int va = std::countr_zero(a), vb = std::countr_zero(b);
    if (va != vb) return va < vb;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

}  // namespace

int face_dim(FaceMask f) { return std::popcount(f) - 1; }

SimplicialComplex::SimplicialComplex(int vertex_count,
                                     std::vector<FaceMask> faces)
    : vertex_count_(vertex_count) {
  if (vertex_count < 1 || vertex_count > 63)
    throw PreconditionError("vertex count must be between 1 and 63");
  const FaceMask all = (FaceMask(1) << vertex_count) - 1;
  for (FaceMask f : faces)
    if (f & ~all)
      throw PreconditionError("face contains a vertex outside the complex");

  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  for (FaceMask f : faces) {
    bool maximal = true;
    for (FaceMask g : faces) {
      if (g != f && (f & ~g) == 0) {
        maximal = false;
        break;
      }
    }
    if (maximal) facets_.push_back(f);
  }
  std::sort(facets_.begin(), facets_.end(), face_lex_before);
}

SimplicialComplex SimplicialComplex::void_complex(int vertex_count) {
  return SimplicialComplex(vertex_count, {});
}

SimplicialComplex SimplicialComplex::irrelevant(int vertex_count) {
  return SimplicialComplex(vertex_count, {FaceMask(0)});
}

SimplicialComplex SimplicialComplex::full_simplex(int vertex_count) {
  return SimplicialComplex(vertex_count,
                           {(FaceMask(1) << vertex_count) - 1});
}

int SimplicialComplex::dim() const {
  if (is_void())
    throw PreconditionError("dim of the void complex is -infinity");
  int d = -1;
  for (FaceMask f : facets_) d = std::max(d, face_dim(f));
  return d;
}

bool SimplicialComplex::has_face(FaceMask f) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [f](FaceMask g) { return (f & ~g) == 0; });
}

std::vector<FaceMask> SimplicialComplex::faces() const {
  check_enumerable(vertex_count_, "faces");
  std::vector<FaceMask> out;
  if (is_void()) return out;
  // Enumerate submasks of every facet.
  std::vector<FaceMask> seen;
  for (FaceMask facet : facets_) {
    FaceMask sub = facet;
    while (true) {
      seen.push_back(sub);
      if (sub == 0) break;
      sub = (sub - 1) & facet;
    }
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  std::sort(seen.begin(), seen.end(), face_lex_before);
  return seen;
}

std::vector<FaceMask> SimplicialComplex::faces_of_dim(int i) const {
  std::vector<FaceMask> out;
  for (FaceMask f : faces())
    if (face_dim(f) == i) out.push_back(f);
  return out;
}

int SimplicialComplex::face_count(int i) const {
  return static_cast<int>(faces_of_dim(i).size());
}

SimplicialComplex SimplicialComplex::link(FaceMask f) const {
  if (!has_face(f))
    throw PreconditionError("link: F is not a face of the complex");
  std::vector<FaceMask> faces;
  for (FaceMask facet : facets_)
    if ((f & ~facet) == 0) faces.push_back(facet & ~f);
  return SimplicialComplex(vertex_count_, std::move(faces));
}

SimplicialComplex SimplicialComplex::pure_skeleton(int i) const {
  if (is_void())
    throw PreconditionError("pure_skeleton of the void complex");
  if (i < -1 || i > dim())
    throw PreconditionError("pure_skeleton: dimension out of range");
  if (i == -1) return irrelevant(vertex_count_);
  return SimplicialComplex(vertex_count_, faces_of_dim(i));
}

SimplicialComplex SimplicialComplex::full_skeleton(int i) const {
  if (is_void())
    throw PreconditionError("full_skeleton of the void complex");
  if (i < -1 || i > dim())
    throw PreconditionError("full_skeleton: dimension out of range");
  std::vector<FaceMask> kept;
  for (FaceMask f : faces())
    if (face_dim(f) <= i) kept.push_back(f);
  return SimplicialComplex(vertex_count_, std::move(kept));
}

SimplicialComplex SimplicialComplex::compactified() const {
  FaceMask used = 0;
  for (FaceMask f : facets_) used |= f;
  if (used == 0) {
    // {emptyset} or void; one ambient vertex is the smallest legal carrier.
    return is_void() ? void_complex(1) : irrelevant(1);
  }
  std::vector<int> new_of_old(vertex_count_, -1);
  int next = 0;
  for (int v = 0; v < vertex_count_; ++v)
    if (used & (FaceMask(1) << v)) new_of_old[v] = next++;
  std::vector<FaceMask> faces;
  faces.reserve(facets_.size());
  for (FaceMask f : facets_) {
    FaceMask g = 0;
    for (int v = 0; v < vertex_count_; ++v)
      if (f & (FaceMask(1) << v)) g |= FaceMask(1) << new_of_old[v];
    faces.push_back(g);
  }
  return SimplicialComplex(next, std::move(faces));
}

SimplicialComplex complex_from_ideal(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree())
    throw PreconditionError("complex_from_ideal: ideal must be squarefree");
  if (ideal.is_unit())
    throw PreconditionError("complex_from_ideal: ideal must be proper");
  const int n = ideal.num_vars();
  check_enumerable(n, "complex_from_ideal");

  // Non-faces are the subsets whose monomial lies in the ideal, i.e. those
  // containing the support of some generator.
  std::vector<FaceMask> gen_masks;
  gen_masks.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gen_masks.push_back(g.support_mask());

  std::vector<FaceMask> faces;
  const FaceMask total = FaceMask(1) << n;
  for (FaceMask s = 0; s < total; ++s) {
    bool non_face = std::any_of(gen_masks.begin(), gen_masks.end(),
                                [s](FaceMask g) { return (g & ~s) == 0; });
    if (!non_face) faces.push_back(s);
  }
  return SimplicialComplex(n, std::move(faces));
}

MonomialIdeal ideal_of_complex(const SimplicialComplex& complex,
                               const RingPtr& ring) {
  if (ring->num_vars() != complex.vertex_count())
    throw RingMismatchError("ideal_of_complex: ring has " +
                            std::to_string(ring->num_vars()) +
                            " variables for " +
                            std::to_string(complex.vertex_count()) +
                            " vertices");
  if (complex.is_void()) return MonomialIdeal::unit(ring);  // documented
  const int n = complex.vertex_count();
  check_enumerable(n, "ideal_of_complex");

  // Minimal non-faces: not a face, all maximal proper subsets faces.
  std::vector<Monomial> gens;
  const FaceMask total = FaceMask(1) << n;
  for (FaceMask s = 0; s < total; ++s) {
    if (complex.has_face(s)) continue;
    bool minimal = true;
    for (FaceMask sub = s; sub; sub &= sub - 1) {
      FaceMask bit = sub & ~(sub - 1);
      if (!complex.has_face(s & ~bit)) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    std::vector<int> e(n, 0);
    for (int j = 0; j < n; ++j)
      if (s & (FaceMask(1) << j)) e[j] = 1;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(ring, std::move(gens));
}

}  // namespace seqcm
