#include "seqcm/homology.hpp"

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>

namespace seqcm {

using boost::multiprecision::cpp_int;

std::vector<std::vector<int>> boundary_matrix(const SimplicialComplex& complex,
                                              int k) {
  if (complex.is_void())
    throw PreconditionError("boundary_matrix of the void complex");
  if (k < 0 || k > complex.dim())
    throw PreconditionError("boundary_matrix: degree out of range");

  const auto cols = complex.faces_of_dim(k);
  const auto rows = complex.faces_of_dim(k - 1);  // {0} when k == 0
  std::map<FaceMask, int> row_index;
  for (size_t r = 0; r < rows.size(); ++r) row_index[rows[r]] = int(r);

  std::vector<std::vector<int>> m(rows.size(),
                                  std::vector<int>(cols.size(), 0));
  for (size_t c = 0; c < cols.size(); ++c) {
    FaceMask face = cols[c];
    int position = 0;  // index of the removed vertex within the face
    for (FaceMask rest = face; rest; rest &= rest - 1, ++position) {
      FaceMask bit = rest & ~(rest - 1);
      FaceMask sub = face & ~bit;
      m[row_index.at(sub)][c] = (position % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

int rank_over_rationals(std::vector<std::vector<int>> matrix) {
  if (matrix.empty() || matrix[0].empty()) return 0;
  const int nrows = int(matrix.size());
  const int ncols = int(matrix[0].size());
  std::vector<std::vector<cpp_int>> m(nrows, std::vector<cpp_int>(ncols));
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) m[i][j] = matrix[i][j];

  // Bareiss one-step fraction-free elimination: every division is exact, so
  // the computation never leaves the integers.
  int rank = 0;
  cpp_int prev = 1;
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int pivot = -1;
    for (int i = rank; i < nrows; ++i) {
      if (m[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const cpp_int p = m[rank][col];
    for (int i = rank + 1; i < nrows; ++i) {
      for (int j = col + 1; j < ncols; ++j)
        m[i][j] = (p * m[i][j] - m[i][col] * m[rank][j]) / prev;
      m[i][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

int rank_mod_p(std::vector<std::vector<int>> matrix, unsigned p) {
  if (matrix.empty() || matrix[0].empty()) return 0;
  const std::int64_t mod = p;
  const int nrows = int(matrix.size());
  const int ncols = int(matrix[0].size());
  std::vector<std::vector<std::int64_t>> m(nrows,
                                           std::vector<std::int64_t>(ncols));
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j)
      m[i][j] = ((matrix[i][j] % mod) + mod) % mod;

  auto inverse = [mod](std::int64_t a) {
    // Fermat: a^(p-2) mod p
    std::int64_t result = 1, base = a % mod, e = mod - 2;
    while (e) {
      if (e & 1) result = result * base % mod;
      base = base * base % mod;
      e >>= 1;
    }
    return result;
  };

  int rank = 0;
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int pivot = -1;
    for (int i = rank; i < nrows; ++i) {
      if (m[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const std::int64_t inv = inverse(m[rank][col]);
    for (int i = rank + 1; i < nrows; ++i) {
      if (m[i][col] == 0) continue;
      const std::int64_t factor = m[i][col] * inv % mod;
      for (int j = col; j < ncols; ++j)
        m[i][j] = ((m[i][j] - factor * m[rank][j]) % mod + mod) % mod;
    }
    ++rank;
  }
  return rank;
}

namespace {

int boundary_rank(const SimplicialComplex& complex, int k,
                  const FieldSpec& field) {
  auto m = boundary_matrix(complex, k);
  return field.kind() == FieldSpec::Kind::Rationals
             ? rank_over_rationals(std::move(m))
             : rank_mod_p(std::move(m), field.characteristic());
}

}  // namespace

HomologyProfile reduced_homology(const SimplicialComplex& complex,
                                 const FieldSpec& field) {
  if (complex.is_void())
    throw PreconditionError("reduced_homology of the void complex");
  const int d = complex.dim();

  std::vector<int> face_counts(d + 2, 0);  // index i <-> dimension i-1
  for (int i = -1; i <= d; ++i) face_counts[i + 1] = complex.face_count(i);

  std::vector<int> boundary_ranks(d + 2, 0);  // index k+1 <-> rank of d_k
  for (int k = 0; k <= d; ++k)
    boundary_ranks[k + 1] = boundary_rank(complex, k, field);

  HomologyProfile profile;
  profile.dim = d;
  profile.ranks.resize(d + 2);
  for (int i = -1; i <= d; ++i) {
    const int fk = face_counts[i + 1];
    const int rk = boundary_ranks[i + 1];
    const int rk_up = (i + 2 < int(boundary_ranks.size()))
                          ? boundary_ranks[i + 2]
                          : 0;
    profile.ranks[i + 1] = fk - rk - rk_up;
    if (profile.ranks[i + 1] < 0)
      throw InvariantViolation("negative homology rank");
  }

  // Reduced Euler characteristic must match the alternating face count.
  long long from_ranks = 0, from_faces = 0;
  for (int i = -1; i <= d; ++i) {
    const int sign = (i % 2 == 0) ? 1 : -1;  // i = -1 gives sign -1
    from_ranks += sign * profile.ranks[i + 1];
    from_faces += sign * face_counts[i + 1];
  }
  if (from_ranks != from_faces)
    throw InvariantViolation("Euler characteristic mismatch in homology");

  return profile;
}

}  // namespace seqcm
