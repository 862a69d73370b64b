#include "monoir/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "monoir/socle.hpp"

namespace monoir {

// ---------------------------------------------------------------------------
// PrimeSupport

PrimeSupport::PrimeSupport(std::vector<std::size_t> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

PrimeSupport PrimeSupport::all(std::size_t arity) {
  std::vector<std::size_t> v(arity);
  for (std::size_t i = 0; i < arity; ++i) v[i] = i;
  return PrimeSupport(std::move(v));
}

PrimeSupport PrimeSupport::of(const Monomial& m) {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] > 0) v.push_back(i);
  }
  return PrimeSupport(std::move(v));
}

PrimeSupport PrimeSupport::parse(std::string_view csv, const VariableSet& vars) {
  const VariableSet names = VariableSet::parse(csv);
  std::vector<std::size_t> v;
  for (const auto& n : names.names()) {
    const auto idx = vars.index_of(n);
    if (!idx) throw ParseError("unknown variable '" + n + "' in prime");
    v.push_back(*idx);
  }
  return PrimeSupport(std::move(v));
}

bool PrimeSupport::contains(std::size_t var) const noexcept {
  return std::binary_search(vars_.begin(), vars_.end(), var);
}

bool PrimeSupport::is_subset_of(const PrimeSupport& other) const noexcept {
  return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(), vars_.end());
}

MonomialIdeal PrimeSupport::ideal(const Ambient& ambient) const {
  std::vector<Monomial> gens;
  for (auto v : vars_) gens.push_back(Monomial::variable_power(ambient->arity(), v, 1));
  return MonomialIdeal(ambient, std::move(gens));
}

Monomial PrimeSupport::product(std::size_t arity) const {
  std::vector<Exponent> e(arity, 0);
  for (auto v : vars_) e.at(v) = 1;
  return Monomial(std::move(e));
}

std::vector<std::string> PrimeSupport::names(const VariableSet& vars) const {
  std::vector<std::string> out;
  for (auto v : vars_) out.push_back(vars.name(v));
  return out;
}

std::strong_ordering operator<=>(const PrimeSupport& a, const PrimeSupport& b) {
  if (auto c = a.height() <=> b.height(); c != 0) return c;
  return a.vars_ <=> b.vars_;
}

std::string to_string(const PrimeSupport& p, const VariableSet& vars) {
  if (p.height() == 0) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < p.height(); ++i) {
    if (i) out += ',';
    out += vars.name(p.vars()[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// IrreducibleComponent

IrreducibleComponent::IrreducibleComponent(Ambient ambient, std::vector<Exponent> powers)
    : ambient_(std::move(ambient)), powers_(std::move(powers)) {
  if (powers_.size() != ambient_->arity()) throw AmbientMismatch("component arity mismatch");
}

bool IrreducibleComponent::is_zero() const noexcept {
  return std::all_of(powers_.begin(), powers_.end(), [](Exponent e) { return e == 0; });
}

PrimeSupport IrreducibleComponent::prime() const { return PrimeSupport::of(Monomial(powers_)); }

MonomialIdeal IrreducibleComponent::ideal() const {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < powers_.size(); ++i) {
    if (powers_[i] > 0) gens.push_back(Monomial::variable_power(powers_.size(), i, powers_[i]));
  }
  return MonomialIdeal(ambient_, std::move(gens));
}

bool IrreducibleComponent::is_subideal_of(const IrreducibleComponent& other) const noexcept {
  // Each generator x_i^{a_i} of this must be divisible by some x_i^{b_i} of other.
  for (std::size_t i = 0; i < powers_.size(); ++i) {
    if (powers_[i] == 0) continue;
    if (other.powers_[i] == 0 || other.powers_[i] > powers_[i]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Splitting

namespace {

using Gens = std::vector<Monomial>;
using Powers = std::vector<Exponent>;

struct GensHash {
  std::size_t operator()(const Gens& gens) const noexcept {
    std::size_t h = gens.size();
    MonomialHash mh;
    for (const auto& g : gens) h ^= mh(g) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// gens + <m> for m not already in the ideal; keeps lexicographically
// descending antichain order.
Gens add_generator(const Gens& gens, const Monomial& m) {
  Gens out;
  out.reserve(gens.size() + 1);
  for (const auto& g : gens) {
    if (!m.divides(g)) out.push_back(g);
  }
  out.insert(std::upper_bound(out.begin(), out.end(), m, std::greater<>()), m);
  return out;
}

// Drops every component that contains another one, then sorts.
std::vector<Powers> keep_minimal(std::vector<Powers> comps) {
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  auto inside = [](const Powers& a, const Powers& b) {  // <a> ⊆ <b>
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      if (b[i] == 0 || b[i] > a[i]) return false;
    }
    return true;
  };
  std::vector<Powers> out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < comps.size() && !redundant; ++j) {
      redundant = j != i && inside(comps[j], comps[i]);
    }
    if (!redundant) out.push_back(comps[i]);
  }
  return out;
}

class Splitter {
 public:
  Splitter(std::size_t arity, DecompositionLimits limits) : arity_(arity), limits_(limits) {}

  const std::vector<Powers>& solve(const Gens& gens) {
    if (auto it = memo_.find(gens); it != memo_.end()) return it->second;
    if (limits_.max_subproblems != 0 && memo_.size() >= limits_.max_subproblems) {
      throw ResourceCapExceeded("irreducible decomposition exceeded " +
                                std::to_string(limits_.max_subproblems) + " subproblems");
    }
    std::vector<Powers> result;
    const auto split = std::find_if(gens.begin(), gens.end(),
                                    [](const Monomial& g) { return g.support_size() >= 2; });
    if (split == gens.end()) {
      Powers p(arity_, 0);
      for (const auto& g : gens) {
        const auto v = *g.first_variable();
        p[v] = g[v];
      }
      result.push_back(std::move(p));
    } else {
      const Monomial m = *split;
      const auto v = *m.first_variable();
      const Monomial head = Monomial::variable_power(arity_, v, m[v]);
      const Monomial rest = colon_quotient(m, head);
      const Gens left = add_generator(gens, head);
      const Gens right = add_generator(gens, rest);
      result = solve(left);
      const auto& r = solve(right);
      result.insert(result.end(), r.begin(), r.end());
      result = keep_minimal(std::move(result));
    }
    return memo_.emplace(gens, std::move(result)).first->second;
  }

 private:
  std::size_t arity_;
  DecompositionLimits limits_;
  std::unordered_map<Gens, std::vector<Powers>, GensHash> memo_;
};

void require_proper(const MonomialIdeal& ideal, const char* what) {
  if (ideal.is_unit()) throw DomainError(std::string(what) + ": the unit ideal has no decomposition");
}

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal,
                                                            DecompositionLimits limits) {
  require_proper(ideal, "irreducible_decomposition");
  Splitter splitter(ideal.arity(), limits);
  const Gens gens(ideal.generators().begin(), ideal.generators().end());
  std::vector<IrreducibleComponent> out;
  for (const auto& p : splitter.solve(gens)) out.emplace_back(ideal.ambient(), p);
  return out;
}

std::vector<PrimeSupport> associated_primes(const MonomialIdeal& ideal) {
  std::vector<PrimeSupport> primes;
  for (const auto& c : irreducible_decomposition(ideal)) primes.push_back(c.prime());
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

std::vector<PrimeSupport> minimal_elements(const std::vector<PrimeSupport>& primes) {
  std::vector<PrimeSupport> out;
  for (const auto& p : primes) {
    const bool has_smaller = std::any_of(primes.begin(), primes.end(), [&](const PrimeSupport& q) {
      return q != p && q.is_subset_of(p);
    });
    if (!has_smaller) out.push_back(p);
  }
  return out;
}

std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& ideal) {
  return minimal_elements(associated_primes(ideal));
}

std::vector<PrimeSupport> embedded_primes(const MonomialIdeal& ideal) {
  const auto ass = associated_primes(ideal);
  const auto min = minimal_elements(ass);
  std::vector<PrimeSupport> out;
  std::set_difference(ass.begin(), ass.end(), min.begin(), min.end(), std::back_inserter(out));
  return out;
}

std::size_t bight(const MonomialIdeal& ideal) {
  require_proper(ideal, "bight");
  if (ideal.is_zero()) throw DomainError("bight: the zero ideal is rejected");
  // Minimal primes are the minimal vertex covers of the support hypergraph,
  // equivalently the minimal primes of the radical.
  std::size_t best = 0;
  for (const auto& p : minimal_primes(radical(ideal))) best = std::max(best, p.height());
  return best;
}

Decomposition canonical_primary_decomposition(const MonomialIdeal& ideal) {
  std::map<PrimeSupport, std::vector<MonomialIdeal>> groups;
  for (const auto& c : irreducible_decomposition(ideal)) groups[c.prime()].push_back(c.ideal());
  Decomposition d{ideal, {}};
  for (const auto& [prime, parts] : groups) d.components.push_back({intersect(parts), prime});
  return d;
}

namespace {

bool is_primary_to(const MonomialIdeal& q, const PrimeSupport& prime) {
  if (q.is_unit()) return false;
  const auto comps = irreducible_decomposition(q);
  return std::all_of(comps.begin(), comps.end(),
                     [&](const IrreducibleComponent& c) { return c.prime() == prime; });
}

}  // namespace

bool is_irredundant_primary_decomposition(const MonomialIdeal& ideal,
                                          const std::vector<PrimaryComponent>& components) {
  if (components.empty()) return false;
  std::vector<PrimeSupport> primes;
  std::vector<MonomialIdeal> ideals;
  for (const auto& c : components) {
    if (!same_ambient(c.ideal.ambient(), ideal.ambient())) return false;
    if (!is_primary_to(c.ideal, c.prime)) return false;
    primes.push_back(c.prime);
    ideals.push_back(c.ideal);
  }
  auto sorted = primes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (intersect(ideals) != ideal) return false;
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    std::vector<MonomialIdeal> others;
    for (std::size_t j = 0; j < ideals.size(); ++j) {
      if (j != k) others.push_back(ideals[j]);
    }
    const MonomialIdeal rest = others.empty() ? MonomialIdeal::unit(ideal.ambient()) : intersect(others);
    if (rest == ideal) return false;
  }
  return true;
}

std::size_t ir_components(const MonomialIdeal& ideal) { return irreducible_decomposition(ideal).size(); }

std::size_t ir_at_prime(const MonomialIdeal& ideal, const PrimeSupport& prime) {
  const auto comps = irreducible_decomposition(ideal);
  return static_cast<std::size_t>(std::count_if(comps.begin(), comps.end(), [&](const IrreducibleComponent& c) {
    return c.prime() == prime;
  }));
}

bool mixes_into_canonical(const MonomialIdeal& ideal, const PrimaryComponent& candidate) {
  auto d = canonical_primary_decomposition(ideal);
  bool replaced = false;
  for (auto& c : d.components) {
    if (c.prime == candidate.prime) {
      c.ideal = candidate.ideal;
      replaced = true;
    }
  }
  return replaced && is_irredundant_primary_decomposition(ideal, d.components);
}

bool is_maximal_embedded_component(const MonomialIdeal& ideal, const PrimaryComponent& candidate) {
  const auto embedded = embedded_primes(ideal);
  if (std::find(embedded.begin(), embedded.end(), candidate.prime) == embedded.end()) {
    throw DomainError("is_maximal_embedded_component: " + to_string(candidate.prime, ideal.variables()) +
                      " is not an embedded prime of " + to_string(ideal));
  }
  if (!mixes_into_canonical(ideal, candidate)) {
    throw MembershipNotVerified("component " + to_string(candidate.ideal) +
                                " not verified to occur in an irredundant primary decomposition of " +
                                to_string(ideal));
  }
  return ir_components(candidate.ideal) == socle_dimension_at(ideal, candidate.prime);
}

}  // namespace monoir
