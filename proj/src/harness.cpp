#include "monoir/harness.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <tuple>

#include "monoir/asymptotics.hpp"
#include "monoir/socle.hpp"

namespace monoir {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Corpus

std::vector<MonomialIdeal> random_monomial_ideal(const CorpusSpec& spec) {
  if (spec.arity == 0 || spec.n_gens == 0 || spec.max_exp == 0) {
    throw DomainError("random corpus needs arity, n_gens and max_exp >= 1");
  }
  const Ambient ambient = std::make_shared<const VariableSet>(VariableSet::indexed("x", spec.arity));
  std::mt19937_64 rng(spec.seed);
  // Modular reduction keeps the stream identical across standard libraries.
  auto draw = [&] { return static_cast<Exponent>(rng() % (std::uint64_t{spec.max_exp} + 1)); };

  std::vector<MonomialIdeal> out;
  out.reserve(spec.count);
  while (out.size() < spec.count) {
    std::vector<Monomial> gens;
    for (std::size_t g = 0; g < spec.n_gens; ++g) {
      std::vector<Exponent> e(spec.arity);
      for (auto& x : e) x = draw();
      gens.emplace_back(std::move(e));
    }
    MonomialIdeal ideal(ambient, std::move(gens));
    if (ideal.is_unit() || ideal.is_zero()) continue;
    out.push_back(std::move(ideal));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Identifiers

std::string_view statement_id(Statement s) {
  switch (s) {
    case Statement::socle_sum: return "lemma-2.3";
    case Statement::maximal_components_sum: return "thm-3.2-suff";
    case Statement::nonmaximal_component_excess: return "thm-3.2-nec";
    case Statement::per_prime_socle: return "cor-3.4-i";
    case Statement::power_degree_bounds: return "thm-4.1";
    case Statement::symbolic_degree: return "prop-symbolic";
    case Statement::parameter_power_binomial: return "cor-5.3";
  }
  return "?";
}

Statement parse_statement(std::string_view id) {
  for (auto s : kAllStatements) {
    if (statement_id(s) == id) return s;
  }
  throw ParseError("unknown statement '" + std::string(id) + "'");
}

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::skip: return "skip";
  }
  return "?";
}

IrRoutes IrRoutes::standard() {
  return IrRoutes{
      [](const MonomialIdeal& i) { return ir_components(i); },
      [](const MonomialIdeal& i) { return ir_socle(i); },
      [](const MonomialIdeal& i, const PrimeSupport& p) { return socle_dimension_at(i, p); },
  };
}

// ---------------------------------------------------------------------------
// Verifiers

namespace {

json ideal_witness(const MonomialIdeal& ideal) {
  return json{{"vars", ideal.variables().to_string()}, {"ideal", to_string(ideal)}};
}

VerificationReport make_report(Statement s, std::string instance, Outcome o, json witness = nullptr) {
  return VerificationReport{s, std::move(instance), o, std::move(witness)};
}

VerificationReport fail(Statement s, std::string instance, const MonomialIdeal& ideal, json detail) {
  json w = ideal_witness(ideal);
  w["detail"] = std::move(detail);
  return make_report(s, std::move(instance), Outcome::fail, std::move(w));
}

json prime_json(const PrimeSupport& p, const VariableSet& vars) { return json(p.names(vars)); }

bool is_parameter_ideal(const MonomialIdeal& q) {
  if (q.size() != q.arity()) return false;
  std::vector<bool> seen(q.arity(), false);
  for (const auto& g : q.generators()) {
    if (!g.is_pure_power()) return false;
    seen[*g.first_variable()] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

Integer binomial(std::uint64_t n, std::uint64_t k) {
  Integer r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

VerificationReport verify_socle_sum(const MonomialIdeal& ideal, std::string instance, const HarnessOptions& opts) {
  const auto s = Statement::socle_sum;
  if (ideal.is_unit()) return make_report(s, std::move(instance), Outcome::skip);
  const auto counted = opts.routes.by_components(ideal);
  const auto socle = opts.routes.by_socle(ideal);
  if (counted != socle) {
    return fail(s, std::move(instance), ideal, {{"ir_components", counted}, {"ir_socle", socle}});
  }
  for (const auto& p : associated_primes(ideal)) {
    const auto at = ir_at_prime(ideal, p);
    const auto dim = opts.routes.socle_at(ideal, p);
    if (at != dim) {
      return fail(s, std::move(instance), ideal,
                  {{"prime", prime_json(p, ideal.variables())}, {"ir_at_prime", at}, {"socle_dimension", dim}});
    }
  }
  return make_report(s, std::move(instance), Outcome::pass);
}

VerificationReport verify_per_prime_socle(const MonomialIdeal& ideal, std::string instance,
                                          const HarnessOptions& opts) {
  const auto s = Statement::per_prime_socle;
  if (ideal.is_unit()) return make_report(s, std::move(instance), Outcome::skip);
  for (const auto& c : canonical_primary_decomposition(ideal).components) {
    const auto at = ir_at_prime(ideal, c.prime);
    const auto of_component = opts.routes.by_components(c.ideal);
    const auto dim = opts.routes.socle_at(ideal, c.prime);
    if (at != of_component || at != dim) {
      return fail(s, std::move(instance), ideal,
                  {{"prime", prime_json(c.prime, ideal.variables())},
                   {"ir_at_prime", at},
                   {"ir_component", of_component},
                   {"socle_dimension", dim}});
    }
  }
  return make_report(s, std::move(instance), Outcome::pass);
}

VerificationReport verify_maximal_components_sum(const MonomialIdeal& ideal, std::string instance,
                                                 const HarnessOptions& opts) {
  const auto s = Statement::maximal_components_sum;
  if (ideal.is_unit()) return make_report(s, std::move(instance), Outcome::skip);
  const auto d = canonical_primary_decomposition(ideal);
  std::uint64_t total = 0;
  for (const auto& c : d.components) total += opts.routes.by_components(c.ideal);
  const auto whole = opts.routes.by_socle(ideal);
  if (total != whole) {
    return fail(s, std::move(instance), ideal, {{"component_sum", total}, {"ir", whole}});
  }
  const auto embedded = embedded_primes(ideal);
  for (const auto& c : d.components) {
    if (std::find(embedded.begin(), embedded.end(), c.prime) == embedded.end()) continue;
    if (opts.routes.by_components(c.ideal) != opts.routes.socle_at(ideal, c.prime)) {
      return fail(s, std::move(instance), ideal,
                  {{"non_maximal_canonical_component", to_string(c.ideal)},
                   {"prime", prime_json(c.prime, ideal.variables())}});
    }
  }
  return make_report(s, std::move(instance), Outcome::pass);
}

std::optional<PrimaryComponent> perturb_embedded_component(const MonomialIdeal& ideal, const PrimeSupport& prime,
                                                           std::uint64_t seed, std::size_t budget) {
  const auto embedded = embedded_primes(ideal);
  if (std::find(embedded.begin(), embedded.end(), prime) == embedded.end()) {
    throw DomainError("perturbation needs an embedded prime");
  }
  const auto canonical = canonical_primary_decomposition(ideal);
  const auto it = std::find_if(canonical.components.begin(), canonical.components.end(),
                               [&](const PrimaryComponent& c) { return c.prime == prime; });
  const MonomialIdeal& qp = it->ideal;

  const auto top = static_cast<Exponent>(ideal.max_generator_degree() + 2);
  const std::size_t h = prime.height();
  std::vector<std::vector<Exponent>> boxes;
  std::vector<Exponent> current(h, 1);
  for (;;) {
    boxes.push_back(current);
    std::size_t i = 0;
    while (i < h && current[i] == top) current[i++] = 1;
    if (i == h) break;
    ++current[i];
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = boxes.size(); i > 1; --i) std::swap(boxes[i - 1], boxes[rng() % i]);
  auto weight = [](const std::vector<Exponent>& b) {
    std::uint64_t s = 0;
    for (auto e : b) s += e;
    return s;
  };
  std::stable_sort(boxes.begin(), boxes.end(),
                   [&](const auto& a, const auto& b) { return weight(a) < weight(b); });

  std::size_t tried = 0;
  for (const auto& b : boxes) {
    std::vector<Monomial> gens;
    for (std::size_t k = 0; k < h; ++k) gens.push_back(Monomial::variable_power(ideal.arity(), prime.vars()[k], b[k]));
    const MonomialIdeal w(ideal.ambient(), std::move(gens));
    if (!is_subideal(ideal, w) || is_subideal(qp, w)) continue;
    if (tried++ == budget) break;
    PrimaryComponent candidate{intersect(qp, w), prime};
    if (mixes_into_canonical(ideal, candidate)) return candidate;
  }
  return std::nullopt;
}

VerificationReport verify_nonmaximal_component_excess(const MonomialIdeal& ideal, std::string instance,
                                                      const HarnessOptions& opts) {
  const auto s = Statement::nonmaximal_component_excess;
  if (ideal.is_unit()) return make_report(s, std::move(instance), Outcome::skip);
  const auto embedded = embedded_primes(ideal);
  if (embedded.empty()) return make_report(s, std::move(instance), Outcome::skip);
  const auto whole = opts.routes.by_socle(ideal);
  const auto canonical = canonical_primary_decomposition(ideal);
  bool exercised = false;
  for (const auto& p : embedded) {
    const auto perturbed = perturb_embedded_component(ideal, p, opts.seed, opts.perturbation_budget);
    if (!perturbed) continue;
    exercised = true;
    std::uint64_t total = 0;
    for (const auto& c : canonical.components) {
      total += opts.routes.by_components(c.prime == p ? perturbed->ideal : c.ideal);
    }
    const bool maximal = opts.routes.by_components(perturbed->ideal) == opts.routes.socle_at(ideal, p) ||
                         is_maximal_embedded_component(ideal, *perturbed);
    if (total <= whole || maximal) {
      return fail(s, std::move(instance), ideal,
                  {{"prime", prime_json(p, ideal.variables())},
                   {"perturbed_component", to_string(perturbed->ideal)},
                   {"mixed_sum", total},
                   {"ir", whole},
                   {"judged_maximal", maximal}});
    }
  }
  return make_report(s, std::move(instance), exercised ? Outcome::pass : Outcome::skip);
}

VerificationReport verify_power_degree_bounds(const MonomialIdeal& ideal, std::string instance,
                                              const HarnessOptions& opts) {
  const auto s = Statement::power_degree_bounds;
  if (ideal.is_unit() || ideal.is_zero()) return make_report(s, std::move(instance), Outcome::skip);
  ScanReport scan = [&] {
    try {
      return ir_polynomial(ideal, opts.scan_n_max);
    } catch (const ResourceCapExceeded&) {
      return ScanReport{.ideal = ideal};
    }
  }();
  if (!scan.fitted_ir || !scan.analytic_spread) return make_report(s, std::move(instance), Outcome::skip);
  const int deg = scan.fitted_ir->polynomial.degree();
  const auto ell = static_cast<int>(*scan.analytic_spread);
  const auto bh = static_cast<int>(scan.bight);
  // With bight = analytic spread the bounds pin the degree.
  const bool ok = scan.bounds_ok && (bh != ell || deg == ell - 1);
  if (!ok) {
    json w = ideal_witness(ideal);
    w["detail"] = {{"degree", deg}, {"bight", bh}, {"analytic_spread", ell}};
    w["n_max"] = opts.scan_n_max;
    return make_report(s, std::move(instance), Outcome::fail, std::move(w));
  }
  return make_report(s, std::move(instance), Outcome::pass);
}

VerificationReport verify_symbolic_degree(const MonomialIdeal& ideal, std::string instance,
                                          const HarnessOptions& opts) {
  const auto s = Statement::symbolic_degree;
  if (ideal.is_unit() || ideal.is_zero()) return make_report(s, std::move(instance), Outcome::skip);
  const auto scan = symbolic_ir_polynomial(ideal, opts.scan_n_max);
  if (!scan.fitted_ir) return make_report(s, std::move(instance), Outcome::skip);
  if (!scan.bounds_ok) {
    json w = ideal_witness(ideal);
    w["detail"] = {{"degree", scan.fitted_ir->polynomial.degree()}, {"bight", scan.bight}};
    w["n_max"] = opts.scan_n_max;
    return make_report(s, std::move(instance), Outcome::fail, std::move(w));
  }
  return make_report(s, std::move(instance), Outcome::pass);
}

VerificationReport verify_parameter_power_binomial(const MonomialIdeal& q, std::string instance,
                                                   const HarnessOptions& opts) {
  const auto s = Statement::parameter_power_binomial;
  if (!is_parameter_ideal(q)) return make_report(s, std::move(instance), Outcome::skip);
  const std::uint64_t d = q.arity();
  MonomialIdeal current = q;
  for (unsigned n = 0; n <= opts.binomial_n_max; ++n) {
    // current = q^{n+1}
    const auto got = opts.routes.by_socle(current);
    const Integer expected = binomial(n + d - 1, d - 1);
    if (Integer(got) != expected) {
      json w = ideal_witness(q);
      w["detail"] = {{"n", n}, {"ir", got}, {"expected", expected.str()}};
      w["n_max"] = opts.binomial_n_max;
      return make_report(s, std::move(instance), Outcome::fail, std::move(w));
    }
    if (n < opts.binomial_n_max) current = multiply(current, q);
  }
  return make_report(s, std::move(instance), Outcome::pass);
}

VerificationReport verify_parameter_power_binomial(const std::vector<Exponent>& exponents, unsigned n_max) {
  if (exponents.empty()) throw DomainError("parameter ideal needs at least one variable");
  const Ambient ambient = std::make_shared<const VariableSet>(VariableSet::indexed("x", exponents.size()));
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) throw DomainError("parameter exponents must be positive");
    gens.push_back(Monomial::variable_power(exponents.size(), i, exponents[i]));
  }
  const MonomialIdeal q(ambient, std::move(gens));
  HarnessOptions opts;
  opts.binomial_n_max = n_max;
  return verify_parameter_power_binomial(q, to_string(q), opts);
}

VerificationReport verify(Statement s, const MonomialIdeal& ideal, std::string instance,
                          const HarnessOptions& opts) {
  switch (s) {
    case Statement::socle_sum: return verify_socle_sum(ideal, std::move(instance), opts);
    case Statement::maximal_components_sum: return verify_maximal_components_sum(ideal, std::move(instance), opts);
    case Statement::nonmaximal_component_excess:
      return verify_nonmaximal_component_excess(ideal, std::move(instance), opts);
    case Statement::per_prime_socle: return verify_per_prime_socle(ideal, std::move(instance), opts);
    case Statement::power_degree_bounds: return verify_power_degree_bounds(ideal, std::move(instance), opts);
    case Statement::symbolic_degree: return verify_symbolic_degree(ideal, std::move(instance), opts);
    case Statement::parameter_power_binomial:
      return verify_parameter_power_binomial(ideal, std::move(instance), opts);
  }
  throw DomainError("unknown statement");
}

// ---------------------------------------------------------------------------
// Suite

Instance hexagon_instance() {
  const Ambient six = make_ambient("x1,x2,x3,x4,x5,x6");
  return {"hexagon", parse_ideal("x1*x2, x2*x3, x3*x4, x4*x5, x5*x6, x6*x1", six)};
}

std::vector<Instance> example_instances() {
  const Ambient xy = make_ambient("x,y");
  const Ambient xyz = make_ambient("x,y,z");
  return {
      {"embedded-xy", parse_ideal("x^2, x*y", xy)},
      hexagon_instance(),
      {"triangle", parse_ideal("x*y, y*z, z*x", xyz)},
      {"param-x-y", parse_ideal("x, y", xy)},
      {"param-x2-y3", parse_ideal("x^2, y^3", xy)},
      {"param-x-y-z", parse_ideal("x, y, z", xyz)},
  };
}

std::vector<VerificationReport> run_suite(const CorpusSpec& spec, const std::vector<Statement>& statements,
                                          const HarnessOptions& opts) {
  std::vector<Instance> instances = example_instances();
  const auto corpus = random_monomial_ideal(spec);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    std::string id = std::to_string(i);
    id.insert(0, 4 - std::min<std::size_t>(4, id.size()), '0');
    instances.push_back({"corpus-" + id, corpus[i]});
  }

  std::vector<VerificationReport> reports;
  for (const auto& inst : instances) {
    for (auto s : statements) {
      if (s == Statement::parameter_power_binomial && !is_parameter_ideal(inst.ideal)) continue;
      reports.push_back(verify(s, inst.ideal, inst.id, opts));
    }
  }
  std::sort(reports.begin(), reports.end(), [](const VerificationReport& a, const VerificationReport& b) {
    return std::tie(a.instance, a.statement) < std::tie(b.instance, b.statement);
  });
  return reports;
}

VerificationReport replay(const VerificationReport& report, const HarnessOptions& opts) {
  if (!report.witness.is_object()) throw DomainError("report carries no witness to replay");
  const Ambient ambient = make_ambient(report.witness.at("vars").get<std::string>());
  const MonomialIdeal ideal = parse_ideal(report.witness.at("ideal").get<std::string>(), ambient);
  HarnessOptions replay_opts = opts;
  if (report.witness.contains("n_max")) {
    const auto n = report.witness.at("n_max").get<unsigned>();
    replay_opts.scan_n_max = n;
    replay_opts.binomial_n_max = n;
  }
  return verify(report.statement, ideal, report.instance, replay_opts);
}

}  // namespace monoir
