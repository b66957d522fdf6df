#ifndef SEQCM_RING_HPP
#define SEQCM_RING_HPP

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "seqcm/errors.hpp"

namespace seqcm {

/// Krull dimension of the zero module, dim(0) = -infinity.
/// Chosen far enough from zero that dim arithmetic (shifts by a variable
/// count) cannot wrap around.
constexpr int kDimNegInf = std::numeric_limits<int>::min() / 4;

/// Coefficient field selector: the rationals or a prime field F_p.
/// Homology ranks are the only field-sensitive computation; everything on
/// the ideal side is characteristic-free.
class FieldSpec {
 public:
  enum class Kind { Rationals, Prime };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  static FieldSpec prime(unsigned p);

  Kind kind() const { return kind_; }
  unsigned characteristic() const { return p_; }

  /// "Q" or "F<p>".
  std::string name() const;

  bool operator==(const FieldSpec& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

 private:
  FieldSpec(Kind k, unsigned p) : kind_(k), p_(p) {}
  Kind kind_;
  unsigned p_;
};

/// A polynomial ring k[x_1, ..., x_n] given by its variable names and
/// coefficient field. Immutable after construction.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> var_names,
           FieldSpec field = FieldSpec::rationals());

  int num_vars() const { return static_cast<int>(names_.size()); }
  const std::string& var_name(int j) const { return names_.at(j); }
  const std::vector<std::string>& var_names() const { return names_; }
  const FieldSpec& field() const { return field_; }

  /// Index of a variable name, or -1 if absent.
  int find_var(const std::string& name) const;

  bool operator==(const PolyRing& o) const {
    return names_ == o.names_ && field_ == o.field_;
  }
  bool operator!=(const PolyRing& o) const { return !(*this == o); }

 private:
  std::vector<std::string> names_;
  FieldSpec field_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> var_names,
                  FieldSpec field = FieldSpec::rationals());

/// Ring with variables x1..xn (used when a complex is the primary input).
RingPtr make_default_ring(int num_vars,
                          FieldSpec field = FieldSpec::rationals());

/// Structural ring equality through the handles.
bool same_ring(const RingPtr& a, const RingPtr& b);

/// Throws RingMismatchError unless a and b agree.
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

/// A monomial as a dense exponent vector over a fixed ring.
/// The ring is not stored; the owner (ideal, module) carries it.
class Monomial {
 public:
  explicit Monomial(std::vector<int> exponents);

  static Monomial one(int num_vars) {
    return Monomial(std::vector<int>(num_vars, 0));
  }
  static Monomial variable(int num_vars, int j, int power = 1);

  int num_vars() const { return static_cast<int>(exps_.size()); }
  int exponent(int j) const { return exps_[j]; }
  const std::vector<int>& exponents() const { return exps_; }

  int total_degree() const;
  bool is_one() const;
  bool is_squarefree() const;

  bool divides(const Monomial& m) const;
  Monomial lcm_with(const Monomial& m) const;
  Monomial times(const Monomial& m) const;
  /// Entrywise max(e - d, 0): the generator of the colon (this : d)
  /// contribution, i.e. lcm(this, d) / d.
  Monomial colon_by(const Monomial& d) const;
  /// Squarefree support monomial (each positive exponent clamped to 1).
  Monomial squarefree_part() const;
  /// Bitmask of variables with positive exponent. Requires num_vars <= 64.
  std::uint64_t support_mask() const;

  bool operator==(const Monomial& m) const { return exps_ == m.exps_; }
  bool operator!=(const Monomial& m) const { return exps_ != m.exps_; }

  /// Lexicographic order on exponent vectors, variable order = ring order.
  static bool lex_less(const Monomial& a, const Monomial& b);
  /// Canonical order used for generator lists: lex-descending, so that e.g.
  /// x*z precedes y*z.
  static bool canonical_before(const Monomial& a, const Monomial& b) {
    return lex_less(b, a);
  }

  std::string to_string(const PolyRing& ring) const;

 private:
  std::vector<int> exps_;
};

}  // namespace seqcm

#endif
