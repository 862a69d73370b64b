#pragma once

// Executable checks of the structural statements about the index of
// reducibility, run over a seeded random corpus and a fixed set of worked
// examples.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "monoir/decomposition.hpp"
#include "monoir/monomial.hpp"

namespace monoir {

struct CorpusSpec {
  std::uint64_t seed = 42;
  std::size_t arity = 3;
  std::size_t n_gens = 4;
  Exponent max_exp = 3;
  std::size_t count = 50;
};

/// Deterministic proper nonzero ideals over x1..x<arity>, exponents uniform in
/// [0, max_exp]. Throws DomainError on a degenerate spec.
std::vector<MonomialIdeal> random_monomial_ideal(const CorpusSpec& spec);

enum class Statement {
  socle_sum,                 ///< ir = sum of socle dimensions over Ass
  maximal_components_sum,    ///< ir is additive over the canonical primary components
  nonmaximal_component_excess,  ///< a non-maximal embedded component makes the sum overshoot
  per_prime_socle,           ///< p-primary component count = socle dimension at p
  power_degree_bounds,       ///< bight-1 <= deg Ir(n) <= analytic spread-1
  symbolic_degree,           ///< deg of ir(I^(n)) = bight-1
  parameter_power_binomial,  ///< ir(q^{n+1}) = binom(n+d-1, d-1)
};

inline constexpr Statement kAllStatements[] = {
    Statement::socle_sum,           Statement::maximal_components_sum, Statement::nonmaximal_component_excess,
    Statement::per_prime_socle,     Statement::power_degree_bounds,    Statement::symbolic_degree,
    Statement::parameter_power_binomial,
};

/// Wire identifiers used in reports ("lemma-2.3", "thm-3.2-suff", ...).
std::string_view statement_id(Statement s);
Statement parse_statement(std::string_view id);

enum class Outcome { pass, fail, skip };
std::string_view outcome_name(Outcome o);

struct VerificationReport {
  Statement statement;
  std::string instance;
  Outcome result = Outcome::skip;
  /// Replayable counterexample on failure ({"vars", "ideal", ...}), null otherwise.
  nlohmann::json witness;
};

/// The two routes to ir that the verifiers compare. Swappable so the harness
/// can be exercised against a deliberately broken route.
struct IrRoutes {
  std::function<std::size_t(const MonomialIdeal&)> by_components;
  std::function<std::uint64_t(const MonomialIdeal&)> by_socle;
  std::function<std::uint64_t(const MonomialIdeal&, const PrimeSupport&)> socle_at;

  static IrRoutes standard();
};

struct HarnessOptions {
  unsigned scan_n_max = 8;
  unsigned binomial_n_max = 5;
  std::size_t perturbation_budget = 500;
  std::uint64_t seed = 42;
  IrRoutes routes = IrRoutes::standard();
};

VerificationReport verify_socle_sum(const MonomialIdeal& ideal, std::string instance,
                                    const HarnessOptions& opts = {});
VerificationReport verify_maximal_components_sum(const MonomialIdeal& ideal, std::string instance,
                                                 const HarnessOptions& opts = {});
VerificationReport verify_nonmaximal_component_excess(const MonomialIdeal& ideal, std::string instance,
                                                      const HarnessOptions& opts = {});
VerificationReport verify_per_prime_socle(const MonomialIdeal& ideal, std::string instance,
                                          const HarnessOptions& opts = {});
VerificationReport verify_power_degree_bounds(const MonomialIdeal& ideal, std::string instance,
                                              const HarnessOptions& opts = {});
VerificationReport verify_symbolic_degree(const MonomialIdeal& ideal, std::string instance,
                                          const HarnessOptions& opts = {});
/// `q` must be generated by one pure power of every variable.
VerificationReport verify_parameter_power_binomial(const MonomialIdeal& q, std::string instance,
                                                   const HarnessOptions& opts = {});
/// Builds q = <x1^a1, ..., xd^ad>.
VerificationReport verify_parameter_power_binomial(const std::vector<Exponent>& exponents, unsigned n_max);

VerificationReport verify(Statement s, const MonomialIdeal& ideal, std::string instance,
                          const HarnessOptions& opts = {});

/// Searches for an irreducible p-primary W containing I such that
/// Q' = Q_p ∩ W is strictly inside the canonical p-component Q_p and still
/// fits into an irredundant primary decomposition with the other canonical
/// components. Candidates are tried by increasing exponent sum, ties in seeded
/// order, exponents up to max generator degree + 2, at most `budget` of them.
/// Throws DomainError unless p is an embedded prime of I.
std::optional<PrimaryComponent> perturb_embedded_component(const MonomialIdeal& ideal, const PrimeSupport& prime,
                                                           std::uint64_t seed, std::size_t budget = 500);

struct Instance {
  std::string id;
  MonomialIdeal ideal;
};

/// The fixed worked examples: <x^2,xy>, the hexagon and triangle edge ideals
/// and three monomial parameter ideals.
std::vector<Instance> example_instances();
Instance hexagon_instance();

/// Runs the requested statements over corpus + examples; reports are sorted by
/// instance id, then statement.
std::vector<VerificationReport> run_suite(const CorpusSpec& spec, const std::vector<Statement>& statements,
                                          const HarnessOptions& opts = {});

/// Re-runs the verifier named by a report on its witness.
VerificationReport replay(const VerificationReport& report, const HarnessOptions& opts = {});

}  // namespace monoir
