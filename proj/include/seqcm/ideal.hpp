#ifndef SEQCM_IDEAL_HPP
#define SEQCM_IDEAL_HPP

#include <string>
#include <vector>

#include "seqcm/ring.hpp"

namespace seqcm {

/// A finitely generated monomial ideal, stored as its unique minimal
/// generating set in canonical (lex-descending) order. The zero ideal has no
/// generators; the unit ideal is generated by 1. Immutable.
class MonomialIdeal {
 public:
  /// Minimalizes and sorts the given generators.
  MonomialIdeal(RingPtr ring, std::vector<Monomial> generators);

  static MonomialIdeal zero(RingPtr ring) {
    return MonomialIdeal(std::move(ring), {});
  }
  static MonomialIdeal unit(RingPtr ring);
  /// The prime ideal generated by the variables in `mask`.
  static MonomialIdeal variable_prime(RingPtr ring, std::uint64_t mask);

  const RingPtr& ring() const { return ring_; }
  int num_vars() const { return ring_->num_vars(); }
  const std::vector<Monomial>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_proper() const { return !is_unit(); }
  bool is_squarefree() const;
  /// True when every generator is a power of a single variable.
  bool is_generated_by_variable_powers() const;
  /// True when every generator is a single variable (exponent 1).
  bool is_generated_by_variables() const;

  /// Membership test: some generator divides m.
  bool contains(const Monomial& m) const;
  /// Ideal containment: J subset of this.
  bool contains_ideal(const MonomialIdeal& j) const;

  /// Max exponent of variable j over the generators (0 when absent).
  int max_exponent(int j) const;
  /// Union of the generator supports.
  std::uint64_t support_mask() const;

  bool operator==(const MonomialIdeal& o) const;
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

  /// Total order on ideals over the same ring, for canonical sorting.
  static bool canonical_before(const MonomialIdeal& a, const MonomialIdeal& b);

  std::vector<std::string> generator_strings() const;
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Monomial> gens_;
};

/// Inclusion-minimal subset generating the same ideal. (The MonomialIdeal
/// constructor applies this; the free function is the spec-level entry.)
MonomialIdeal minimalize(RingPtr ring, const std::vector<Monomial>& gens);

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// (a : b). By convention (a : 0) = R.
MonomialIdeal ideal_colon(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal radical(const MonomialIdeal& a);

/// Intersection of a family; the empty family yields the unit ideal.
MonomialIdeal intersect_all(RingPtr ring,
                            const std::vector<MonomialIdeal>& ideals);

/// Standard polarization: x_j^e in a generator becomes x_{j,1}...x_{j,e}.
/// Variable j receives max(1, max-exponent of x_j) copies, so squarefree
/// ideals polarize to themselves in the same ring.
struct Polarization {
  RingPtr source;
  RingPtr target;
  std::vector<int> copies;  ///< per source variable, >= 1
  MonomialIdeal ideal;      ///< pol(I) in the target ring

  /// Number of variables added, = dim and depth shift.
  int added() const {
    int a = 0;
    for (int c : copies) a += c - 1;
    return a;
  }
};

/// Requires a proper ideal (polarizing the unit ideal is an error).
Polarization polarize(const MonomialIdeal& ideal);

}  // namespace seqcm

#endif
