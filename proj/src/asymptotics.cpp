#include "monoir/asymptotics.hpp"

#include <algorithm>

#include "monoir/socle.hpp"

namespace monoir {

namespace {

void require_scannable(const MonomialIdeal& ideal, unsigned n_max) {
  if (ideal.is_unit()) throw DomainError("power scans need a proper ideal");
  if (ideal.is_zero()) throw DomainError("power scans need a nonzero ideal");
  if (n_max == 0) throw DomainError("n_max must be positive");
}

std::optional<PolynomialFit> fit_tail(const std::vector<std::int64_t>& values, unsigned n0) {
  if (n0 == 0 || values.size() < n0 - 1 + 4) return std::nullopt;
  const std::span<const std::int64_t> tail(values.begin() + (n0 - 1), values.end());
  return fit_polynomial(tail, n0);
}

std::vector<std::int64_t> ir_values_of(const std::vector<MonomialIdeal>& ideals) {
  std::vector<std::int64_t> out;
  out.reserve(ideals.size());
  for (const auto& i : ideals) out.push_back(static_cast<std::int64_t>(ir_socle(i)));
  return out;
}

std::vector<std::int64_t> mu_values_of(const std::vector<MonomialIdeal>& ideals) {
  std::vector<std::int64_t> out;
  out.reserve(ideals.size());
  for (const auto& i : ideals) out.push_back(static_cast<std::int64_t>(i.size()));
  return out;
}

std::optional<unsigned> stable_index(const std::vector<std::vector<PrimeSupport>>& ass) {
  const auto n_max = static_cast<unsigned>(ass.size());
  unsigned n0 = n_max;
  while (n0 > 1 && ass[n0 - 2] == ass.back()) --n0;
  if (n_max - n0 < 2) return std::nullopt;
  return n0;
}

}  // namespace

std::vector<MonomialIdeal> powers_up_to(const MonomialIdeal& ideal, unsigned n_max, ScanLimits limits) {
  std::vector<MonomialIdeal> out;
  out.reserve(n_max);
  for (unsigned n = 1; n <= n_max; ++n) {
    if (n == 1) {
      out.push_back(ideal);
    } else {
      const MonomialIdeal& prev = out.back();
      if (prev.size() * ideal.size() > limits.max_generators * 64) {
        throw ResourceCapExceeded("power " + std::to_string(n) + " would form " +
                                  std::to_string(prev.size() * ideal.size()) + " products");
      }
      out.push_back(multiply(prev, ideal));
    }
    if (out.back().size() > limits.max_generators) {
      throw ResourceCapExceeded("power " + std::to_string(n) + " has " + std::to_string(out.back().size()) +
                                " generators (cap " + std::to_string(limits.max_generators) + ")");
    }
  }
  return out;
}

std::vector<std::int64_t> ir_sequence(const MonomialIdeal& ideal, unsigned n_max, ScanLimits limits) {
  require_scannable(ideal, n_max);
  return ir_values_of(powers_up_to(ideal, n_max, limits));
}

std::vector<std::int64_t> mu_sequence(const MonomialIdeal& ideal, unsigned n_max, ScanLimits limits) {
  require_scannable(ideal, n_max);
  return mu_values_of(powers_up_to(ideal, n_max, limits));
}

std::optional<AssStabilization> ass_stabilization(const MonomialIdeal& ideal, unsigned n_max,
                                                  ScanLimits limits) {
  require_scannable(ideal, n_max);
  std::vector<std::vector<PrimeSupport>> ass;
  for (const auto& p : powers_up_to(ideal, n_max, limits)) ass.push_back(associated_primes_by_socle(p));
  const auto n0 = stable_index(ass);
  if (!n0) return std::nullopt;
  return AssStabilization{ass.back(), *n0};
}

std::size_t analytic_spread(const MonomialIdeal& ideal, unsigned n_max, ScanLimits limits) {
  const auto mu = mu_sequence(ideal, n_max, limits);
  if (mu.size() < 4) throw NotStabilized("analytic spread needs n_max >= 4");
  const auto fit = fit_polynomial(mu, 1);
  if (!fit) throw NotStabilized("generator counts not polynomial within n_max = " + std::to_string(n_max));
  return static_cast<std::size_t>(fit->polynomial.degree() + 1);
}

ScanReport ir_polynomial(const MonomialIdeal& ideal, unsigned n_max, ScanLimits limits) {
  require_scannable(ideal, n_max);
  const auto powers = powers_up_to(ideal, n_max, limits);
  ScanReport report{.kind = PowerKind::ordinary, .ideal = ideal, .n_min = 1, .n_max = n_max};
  report.mu_values = mu_values_of(powers);
  std::vector<std::vector<PrimeSupport>> ass;
  for (const auto& p : powers) {
    ass.push_back(associated_primes_by_socle(p));
    std::int64_t total = 0;
    for (const auto& prime : ass.back()) total += static_cast<std::int64_t>(socle_dimension_at(p, prime));
    report.ir_values.push_back(total);
  }
  report.bight = bight(ideal);
  report.ass_stable_at = stable_index(ass);
  if (report.ass_stable_at) {
    report.fitted_ir = fit_tail(report.ir_values, *report.ass_stable_at);
    report.fitted_mu = fit_tail(report.mu_values, *report.ass_stable_at);
  }
  if (report.fitted_mu) {
    report.analytic_spread = static_cast<std::size_t>(report.fitted_mu->polynomial.degree() + 1);
  }
  if (report.fitted_ir && report.analytic_spread) {
    const int deg = report.fitted_ir->polynomial.degree();
    report.bounds_ok = static_cast<int>(report.bight) - 1 <= deg &&
                       deg <= static_cast<int>(*report.analytic_spread) - 1;
  }
  return report;
}

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, unsigned n) {
  require_scannable(ideal, n);
  const MonomialIdeal full = power(ideal, n);
  std::vector<MonomialIdeal> parts;
  for (const auto& p : minimal_primes(radical(ideal))) {
    std::vector<Exponent> outside(ideal.arity(), 1);
    for (auto v : p.vars()) outside[v] = 0;
    const MonomialIdeal by(ideal.ambient(), {Monomial(std::move(outside))});
    parts.push_back(saturate(full, by));
  }
  return intersect(parts);
}

ScanReport symbolic_ir_polynomial(const MonomialIdeal& ideal, unsigned n_max) {
  require_scannable(ideal, n_max);
  ScanReport report{.kind = PowerKind::symbolic, .ideal = ideal, .n_min = 1, .n_max = n_max};
  for (unsigned n = 1; n <= n_max; ++n) {
    const MonomialIdeal sp = symbolic_power(ideal, n);
    report.ir_values.push_back(static_cast<std::int64_t>(ir_socle(sp)));
    report.mu_values.push_back(static_cast<std::int64_t>(sp.size()));
  }
  report.bight = bight(ideal);
  // Symbolic powers have exactly the minimal primes of I as associated primes.
  report.ass_stable_at = 1;
  report.fitted_ir = fit_tail(report.ir_values, 1);
  if (report.fitted_ir) {
    report.bounds_ok = report.fitted_ir->polynomial.degree() == static_cast<int>(report.bight) - 1;
  }
  return report;
}

}  // namespace monoir
