#pragma once

// Brute-force reference computations used only by tests. Nothing here calls
// into the decomposition or socle code it is meant to check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "monoir/monomial.hpp"
#include "monoir/rational_polynomial.hpp"

namespace monoir::oracle {

/// Membership agreement of two ideals on every monomial of degree <= bound.
inline bool agree_up_to(const MonomialIdeal& a, const MonomialIdeal& b, std::uint32_t bound) {
  for (const auto& m : monomials_up_to(a.arity(), bound)) {
    if (contains(a, m) != contains(b, m)) return false;
  }
  return true;
}

/// Membership in an intersection, decided one ideal at a time.
inline bool in_all(const std::vector<MonomialIdeal>& ideals, const Monomial& m) {
  return std::all_of(ideals.begin(), ideals.end(), [&](const MonomialIdeal& i) { return contains(i, m); });
}

/// Every exponent vector in the box [0, hi_0] x ... x [0, hi_k-1].
inline std::vector<Monomial> box(const std::vector<Exponent>& hi) {
  std::vector<Monomial> out;
  std::vector<Exponent> cur(hi.size(), 0);
  for (;;) {
    out.emplace_back(cur);
    std::size_t i = 0;
    while (i < hi.size() && cur[i] == hi[i]) cur[i++] = 0;
    if (i == hi.size()) break;
    ++cur[i];
  }
  return out;
}

/// Number of monomials in (J : m) ∩ (J : m^∞) outside J, J an ideal over
/// the variables of m = <all variables>. Counted inside the box bounded by the
/// generator exponents of J plus one.
inline std::uint64_t socle_count_by_colon(const MonomialIdeal& j) {
  if (j.is_unit() || j.is_zero()) return 0;
  std::vector<Monomial> vars;
  for (std::size_t i = 0; i < j.arity(); ++i) vars.push_back(Monomial::variable_power(j.arity(), i, 1));
  const MonomialIdeal maximal(j.ambient(), vars);
  const MonomialIdeal torsion = intersect(colon(j, maximal), saturate(j, maximal));
  auto hi = j.max_exponents();
  for (auto& h : hi) ++h;
  std::uint64_t count = 0;
  for (const auto& u : box(hi)) {
    if (contains(torsion, u) && !contains(j, u)) ++count;
  }
  return count;
}

/// Rank of an integer matrix by exact elimination over the rationals.
inline std::size_t rank(std::vector<std::vector<Rational>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

/// Seeded generator of small proper monomial ideals.
class IdealGenerator {
 public:
  IdealGenerator(std::uint64_t seed, Ambient ambient, std::size_t max_gens, Exponent max_exp)
      : rng_(seed), ambient_(std::move(ambient)), max_gens_(max_gens), max_exp_(max_exp) {}

  MonomialIdeal next() {
    for (;;) {
      const std::size_t n = 1 + rng_() % max_gens_;
      std::vector<Monomial> gens;
      for (std::size_t g = 0; g < n; ++g) gens.push_back(monomial());
      MonomialIdeal i(ambient_, std::move(gens));
      if (i.is_proper() && !i.is_zero()) return i;
    }
  }

  Monomial monomial() {
    std::vector<Exponent> e(ambient_->arity());
    for (auto& x : e) x = static_cast<Exponent>(rng_() % (max_exp_ + 1));
    return Monomial(std::move(e));
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
  Ambient ambient_;
  std::size_t max_gens_;
  Exponent max_exp_;
};

}  // namespace monoir::oracle
