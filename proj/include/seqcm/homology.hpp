#ifndef SEQCM_HOMOLOGY_HPP
#define SEQCM_HOMOLOGY_HPP

#include <vector>

#include "seqcm/complex.hpp"
#include "seqcm/ring.hpp"

namespace seqcm {

/// Ranks of reduced simplicial homology, degrees -1 .. dim.
struct HomologyProfile {
  int dim = -1;             ///< dimension of the complex
  std::vector<int> ranks;   ///< ranks[i] = rank of H~_{i-1}; size dim + 2

  int rank(int degree) const {
    int idx = degree + 1;
    if (idx < 0 || idx >= static_cast<int>(ranks.size())) return 0;
    return ranks[idx];
  }

  bool vanishes_below_dim() const {
    for (int d = -1; d < dim; ++d)
      if (rank(d) != 0) return false;
    return true;
  }

  bool operator==(const HomologyProfile& o) const {
    return dim == o.dim && ranks == o.ranks;
  }
};

/// Reduced homology ranks over the given field, from boundary-matrix ranks
/// (fraction-free elimination over Q, ordinary elimination over F_p).
/// The void complex is an error.
HomologyProfile reduced_homology(const SimplicialComplex& complex,
                                 const FieldSpec& field);

/// Exact rank helpers, exposed for the dual-route tests.
int rank_over_rationals(std::vector<std::vector<int>> matrix);
int rank_mod_p(std::vector<std::vector<int>> matrix, unsigned p);

/// Signed boundary matrix from k-faces to (k-1)-faces in lexicographic face
/// order. k must be between 0 and dim.
std::vector<std::vector<int>> boundary_matrix(const SimplicialComplex& complex,
                                              int k);

}  // namespace seqcm

#endif
