#include "seqcm/ring.hpp"

#include <algorithm>
#include <set>

namespace seqcm {

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

FieldSpec FieldSpec::prime(unsigned p) {
  if (!is_prime(p))
    throw PreconditionError("field characteristic must be prime, got " +
                            std::to_string(p));
  return FieldSpec(Kind::Prime, p);
}

std::string FieldSpec::name() const {
  return kind_ == Kind::Rationals ? "Q" : "F" + std::to_string(p_);
}

PolyRing::PolyRing(std::vector<std::string> var_names, FieldSpec field)
    : names_(std::move(var_names)), field_(field) {
  if (names_.empty())
    throw PreconditionError("a polynomial ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw PreconditionError("empty variable name");
    if (!seen.insert(n).second)
      throw PreconditionError("duplicate variable name '" + n + "'");
  }
}

int PolyRing::find_var(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

RingPtr make_ring(std::vector<std::string> var_names, FieldSpec field) {
  return std::make_shared<const PolyRing>(std::move(var_names), field);
}

RingPtr make_default_ring(int num_vars, FieldSpec field) {
  std::vector<std::string> names;
  names.reserve(num_vars);
  for (int j = 1; j <= num_vars; ++j) names.push_back("x" + std::to_string(j));
  return make_ring(std::move(names), field);
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
  if (!same_ring(a, b))
    throw RingMismatchError(std::string(where) +
                            ": operands live in different rings");
}

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_)
    if (e < 0) throw PreconditionError("negative exponent in monomial");
}

Monomial Monomial::variable(int num_vars, int j, int power) {
  std::vector<int> e(num_vars, 0);
  e.at(j) = power;
  return Monomial(std::move(e));
}

int Monomial::total_degree() const {
  int d = 0;
  for (int e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& m) const {
  for (size_t j = 0; j < exps_.size(); ++j)
    if (exps_[j] > m.exps_[j]) return false;
  return true;
}

Monomial Monomial::lcm_with(const Monomial& m) const {
  std::vector<int> e(exps_.size());
  for (size_t j = 0; j < exps_.size(); ++j)
    e[j] = std::max(exps_[j], m.exps_[j]);
  return Monomial(std::move(e));
}

Monomial Monomial::times(const Monomial& m) const {
  std::vector<int> e(exps_.size());
  for (size_t j = 0; j < exps_.size(); ++j) e[j] = exps_[j] + m.exps_[j];
  return Monomial(std::move(e));
}

Monomial Monomial::colon_by(const Monomial& d) const {
  std::vector<int> e(exps_.size());
  for (size_t j = 0; j < exps_.size(); ++j)
    e[j] = std::max(exps_[j] - d.exps_[j], 0);
  return Monomial(std::move(e));
}

Monomial Monomial::squarefree_part() const {
  std::vector<int> e(exps_.size());
  for (size_t j = 0; j < exps_.size(); ++j) e[j] = exps_[j] > 0 ? 1 : 0;
  return Monomial(std::move(e));
}

std::uint64_t Monomial::support_mask() const {
  if (exps_.size() > 64)
    throw PreconditionError("support_mask limited to 64 variables");
  std::uint64_t m = 0;
  for (size_t j = 0; j < exps_.size(); ++j)
    if (exps_[j] > 0) m |= std::uint64_t(1) << j;
  return m;
}

bool Monomial::lex_less(const Monomial& a, const Monomial& b) {
  return std::lexicographical_compare(a.exps_.begin(), a.exps_.end(),
                                      b.exps_.begin(), b.exps_.end());
}

std::string Monomial::to_string(const PolyRing& ring) const {
  if (is_one()) return "1";
  std::string s;
  for (int j = 0; j < num_vars(); ++j) {
    if (exps_[j] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.var_name(j);
    if (exps_[j] > 1) s += "^" + std::to_string(exps_[j]);
  }
  return s;
}

}  // namespace seqcm
