#include "seqcm/ideal.hpp"

#include <algorithm>
#include <set>

namespace seqcm {

namespace {

void require_ring_element(const RingPtr& ring, const Monomial& m,
                          const char* where) {
  if (m.num_vars() != ring->num_vars())
    throw RingMismatchError(std::string(where) +
                            ": monomial has wrong number of variables");
}

}  // namespace

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> generators)
    : ring_(std::move(ring)) {
  if (!ring_) throw PreconditionError("MonomialIdeal: null ring");
  for (const auto& g : generators)
    require_ring_element(ring_, g, "MonomialIdeal");

  // Minimal generating set: drop anything divisible by another generator.
  std::sort(generators.begin(), generators.end(), Monomial::canonical_before);
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  for (const auto& g : generators) {
    bool redundant = false;
    for (const auto& kept : gens_) {
      if (kept.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (redundant) continue;
    // A later generator in lex-descending order can still divide an earlier
    // one, so filter in both directions.
    std::vector<Monomial> next;
    next.reserve(gens_.size() + 1);
    for (auto& kept : gens_)
      if (!g.divides(kept)) next.push_back(std::move(kept));
    next.push_back(g);
    gens_ = std::move(next);
  }
  std::sort(gens_.begin(), gens_.end(), Monomial::canonical_before);
}

MonomialIdeal MonomialIdeal::unit(RingPtr ring) {
  int n = ring->num_vars();
  return MonomialIdeal(std::move(ring), {Monomial::one(n)});
}

MonomialIdeal MonomialIdeal::variable_prime(RingPtr ring,
                                            std::uint64_t mask) {
  std::vector<Monomial> gens;
  int n = ring->num_vars();
  for (int j = 0; j < n; ++j)
    if (mask & (std::uint64_t(1) << j))
      gens.push_back(Monomial::variable(n, j));
  return MonomialIdeal(std::move(ring), std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::is_generated_by_variable_powers() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) {
    int support = 0;
    for (int j = 0; j < g.num_vars(); ++j)
      if (g.exponent(j) > 0) ++support;
    return support == 1;
  });
}

bool MonomialIdeal::is_generated_by_variables() const {
  return is_generated_by_variable_powers() &&
         std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& g) { return g.total_degree() == 1; });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  require_ring_element(ring_, m, "contains");
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains_ideal(const MonomialIdeal& j) const {
  require_same_ring(ring_, j.ring_, "contains_ideal");
  return std::all_of(j.gens_.begin(), j.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

int MonomialIdeal::max_exponent(int j) const {
  int m = 0;
  for (const auto& g : gens_) m = std::max(m, g.exponent(j));
  return m;
}

std::uint64_t MonomialIdeal::support_mask() const {
  std::uint64_t m = 0;
  for (const auto& g : gens_) m |= g.support_mask();
  return m;
}

bool MonomialIdeal::operator==(const MonomialIdeal& o) const {
  return same_ring(ring_, o.ring_) && gens_ == o.gens_;
}

bool MonomialIdeal::canonical_before(const MonomialIdeal& a,
                                     const MonomialIdeal& b) {
  return std::lexicographical_compare(a.gens_.begin(), a.gens_.end(),
                                      b.gens_.begin(), b.gens_.end(),
                                      Monomial::canonical_before);
}

std::vector<std::string> MonomialIdeal::generator_strings() const {
  std::vector<std::string> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.to_string(*ring_));
  return out;
}

std::string MonomialIdeal::to_string() const {
  std::string s = "(";
  const auto strs = generator_strings();
  for (size_t i = 0; i < strs.size(); ++i) {
    if (i) s += ", ";
    s += strs[i];
  }
  if (strs.empty()) s += "0";
  return s + ")";
}

MonomialIdeal minimalize(RingPtr ring, const std::vector<Monomial>& gens) {
  return MonomialIdeal(std::move(ring), gens);
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal_sum");
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal_intersect");
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f.lcm_with(g));
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal ideal_colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal_colon");
  // (a : 0) = R by convention, matching dim(0) = -infinity.
  if (b.is_zero()) return MonomialIdeal::unit(a.ring());
  MonomialIdeal result = MonomialIdeal::unit(a.ring());
  bool first = true;
  for (const auto& g : b.generators()) {
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size());
    for (const auto& f : a.generators()) gens.push_back(f.colon_by(g));
    MonomialIdeal colon_g(a.ring(), std::move(gens));
    result = first ? colon_g : ideal_intersect(result, colon_g);
    first = false;
  }
  return result;
}

MonomialIdeal radical(const MonomialIdeal& a) {
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size());
  for (const auto& g : a.generators()) gens.push_back(g.squarefree_part());
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal intersect_all(RingPtr ring,
                            const std::vector<MonomialIdeal>& ideals) {
  MonomialIdeal result = MonomialIdeal::unit(ring);
  for (const auto& i : ideals) result = ideal_intersect(result, i);
  return result;
}

Polarization polarize(const MonomialIdeal& ideal) {
  if (ideal.is_unit())
    throw PreconditionError("polarize: the unit ideal has no quotient ring");
  const RingPtr& src = ideal.ring();
  const int n = src->num_vars();

  std::vector<int> copies(n, 1);
  for (int j = 0; j < n; ++j)
    copies[j] = std::max(1, ideal.max_exponent(j));

  bool trivial = std::all_of(copies.begin(), copies.end(),
                             [](int c) { return c == 1; });
  if (trivial) return Polarization{src, src, std::move(copies), ideal};

  // Build target names: a variable with one copy keeps its name; split
  // variables get numbered copies, uniquified against everything else.
  std::set<std::string> taken(src->var_names().begin(),
                              src->var_names().end());
  std::vector<std::string> names;
  std::vector<int> offset(n, 0);  // index of first copy of variable j
  for (int j = 0; j < n; ++j) {
    offset[j] = static_cast<int>(names.size());
    if (copies[j] == 1) {
      names.push_back(src->var_name(j));
      continue;
    }
    for (int c = 1; c <= copies[j]; ++c) {
      std::string candidate = src->var_name(j) + std::to_string(c);
      while (taken.count(candidate)) candidate += "_";
      taken.insert(candidate);
      names.push_back(candidate);
    }
  }
  RingPtr dst = make_ring(std::move(names), src->field());

  const int m = dst->num_vars();
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) {
    std::vector<int> e(m, 0);
    for (int j = 0; j < n; ++j)
      for (int c = 0; c < g.exponent(j); ++c) e[offset[j] + c] = 1;
    gens.emplace_back(std::move(e));
  }
  MonomialIdeal pol(dst, std::move(gens));
  return Polarization{src, dst, std::move(copies), std::move(pol)};
}

}  // namespace seqcm
