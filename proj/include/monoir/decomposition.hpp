#pragma once

// Irredundant irreducible and primary decompositions of monomial ideals.
//
// A monomial ideal is irreducible exactly when it is generated by pure powers
// of variables, and its irredundant irreducible decomposition is unique. The
// number of components is the index of reducibility. Grouping the components
// by radical gives a primary decomposition whose embedded components are all
// maximal.

#include <cstddef>
#include <string>
#include <vector>

#include "monoir/monomial.hpp"

namespace monoir {

/// A monomial prime <x_i : i in vars>. The empty set stands for the zero
/// prime, the only associated prime of the zero ideal.
class PrimeSupport {
 public:
  PrimeSupport() = default;
  /// Sorts and deduplicates.
  explicit PrimeSupport(std::vector<std::size_t> vars);

  static PrimeSupport all(std::size_t arity);
  static PrimeSupport of(const Monomial& m);
  /// Parses "x,y" against a variable set.
  static PrimeSupport parse(std::string_view csv, const VariableSet& vars);

  const std::vector<std::size_t>& vars() const noexcept { return vars_; }
  std::size_t height() const noexcept { return vars_.size(); }
  bool contains(std::size_t var) const noexcept;
  bool is_subset_of(const PrimeSupport& other) const noexcept;

  MonomialIdeal ideal(const Ambient& ambient) const;
  /// Product of the variables of the prime.
  Monomial product(std::size_t arity) const;
  std::vector<std::string> names(const VariableSet& vars) const;

  /// Height first, then lexicographic on variable indices.
  friend std::strong_ordering operator<=>(const PrimeSupport& a, const PrimeSupport& b);
  friend bool operator==(const PrimeSupport&, const PrimeSupport&) = default;

 private:
  std::vector<std::size_t> vars_;
};

std::string to_string(const PrimeSupport& p, const VariableSet& vars);

/// The ideal <x_i^{a_i} : a_i > 0>. All-zero powers encode the zero ideal.
class IrreducibleComponent {
 public:
  IrreducibleComponent(Ambient ambient, std::vector<Exponent> powers);

  const Ambient& ambient() const noexcept { return ambient_; }
  std::span<const Exponent> powers() const noexcept { return powers_; }
  bool is_zero() const noexcept;
  PrimeSupport prime() const;
  MonomialIdeal ideal() const;
  /// this ⊆ other, decided on exponents.
  bool is_subideal_of(const IrreducibleComponent& other) const noexcept;

  friend auto operator<=>(const IrreducibleComponent& a, const IrreducibleComponent& b) {
    return a.powers_ <=> b.powers_;
  }
  friend bool operator==(const IrreducibleComponent& a, const IrreducibleComponent& b) {
    return a.powers_ == b.powers_;
  }

 private:
  Ambient ambient_;
  std::vector<Exponent> powers_;
};

struct PrimaryComponent {
  MonomialIdeal ideal;
  PrimeSupport prime;

  friend bool operator==(const PrimaryComponent&, const PrimaryComponent&) = default;
};

struct Decomposition {
  MonomialIdeal target;
  std::vector<PrimaryComponent> components;
};

/// Limits on the splitting recursion. Zero means unlimited.
struct DecompositionLimits {
  std::size_t max_subproblems = 0;
};

/// The unique irredundant irreducible decomposition, sorted by component
/// exponents. Throws DomainError on the unit ideal and ResourceCapExceeded
/// when the subproblem budget runs out.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal,
                                                            DecompositionLimits limits = {});

std::vector<PrimeSupport> associated_primes(const MonomialIdeal& ideal);
std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& ideal);
std::vector<PrimeSupport> embedded_primes(const MonomialIdeal& ideal);
/// Minimal elements of a set of primes under inclusion.
std::vector<PrimeSupport> minimal_elements(const std::vector<PrimeSupport>& primes);

/// Largest height of a minimal prime. Unit and zero ideals are rejected.
std::size_t bight(const MonomialIdeal& ideal);

Decomposition canonical_primary_decomposition(const MonomialIdeal& ideal);

/// Intersection matches, primes pairwise distinct, each component primary to
/// its stated prime, and no component can be dropped.
bool is_irredundant_primary_decomposition(const MonomialIdeal& ideal,
                                          const std::vector<PrimaryComponent>& components);

std::size_t ir_components(const MonomialIdeal& ideal);
std::size_t ir_at_prime(const MonomialIdeal& ideal, const PrimeSupport& prime);

/// Replaces the canonical component at `candidate.prime` by the candidate and
/// reports whether the result is still an irredundant primary decomposition.
bool mixes_into_canonical(const MonomialIdeal& ideal, const PrimaryComponent& candidate);

/// A p-primary component Q of I (p embedded) is maximal among the p-primary
/// components of irredundant primary decompositions of I iff ir(Q) equals the
/// socle dimension of R/I localized at p.
///
/// Throws DomainError if the prime is not embedded, and MembershipNotVerified
/// if Q cannot be shown to occur in an irredundant decomposition of I.
bool is_maximal_embedded_component(const MonomialIdeal& ideal, const PrimaryComponent& candidate);

}  // namespace monoir
