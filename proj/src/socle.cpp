#include "monoir/socle.hpp"

#include <algorithm>
#include <stdexcept>

namespace monoir {

namespace {

constexpr std::size_t kMaxSupportForPrimeScan = 24;

// Membership test against generators sorted by degree; a generator of larger
// degree than the probe can never divide it.
class MembershipIndex {
 public:
  explicit MembershipIndex(const MonomialIdeal& ideal) {
    for (const auto& g : ideal.generators()) entries_.push_back({g.degree(), g});
    std::sort(entries_.begin(), entries_.end(),
              [](const auto& a, const auto& b) { return a.degree < b.degree; });
  }

  bool contains(std::span<const Exponent> u, std::uint64_t degree) const {
    for (const auto& e : entries_) {
      if (e.degree > degree) return false;
      bool divides = true;
      for (std::size_t i = 0; i < u.size() && divides; ++i) divides = e.gen[i] <= u[i];
      if (divides) return true;
    }
    return false;
  }

 private:
  struct Entry {
    std::uint64_t degree;
    Monomial gen;
  };
  std::vector<Entry> entries_;
};

}  // namespace

LocalizedIdeal localize_at(const MonomialIdeal& ideal, const PrimeSupport& prime) {
  if (prime.height() == 0) throw DomainError("localize_at: the zero prime leaves no variables");
  for (auto v : prime.vars()) {
    if (v >= ideal.arity()) throw AmbientMismatch("localize_at: prime variable out of range");
  }
  Ambient sub = make_ambient(prime.names(ideal.variables()));
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) {
    std::vector<Exponent> e;
    e.reserve(prime.height());
    for (auto v : prime.vars()) e.push_back(g[v]);
    gens.emplace_back(std::move(e));
  }
  return {prime, MonomialIdeal(std::move(sub), std::move(gens))};
}

std::vector<Monomial> socle_monomials(const MonomialIdeal& restricted) {
  if (restricted.is_unit() || restricted.is_zero()) return {};
  const std::size_t k = restricted.arity();

  // In coordinate i a socle monomial u has u_i = g_i - 1 for the generator g
  // that u * x_i lands on.
  std::vector<std::vector<Exponent>> candidates(k);
  for (const auto& g : restricted.generators()) {
    for (std::size_t i = 0; i < k; ++i) {
      if (g[i] > 0) candidates[i].push_back(g[i] - 1);
    }
  }
  for (auto& c : candidates) {
    if (c.empty()) return {};
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }

  const MembershipIndex index(restricted);
  const auto bounds = restricted.max_exponents();
  std::vector<Monomial> found;
  std::vector<Exponent> u(k, 0);

  // Coordinates < pos are fixed, the rest sit at their smallest candidate.
  // Raising coordinates only moves deeper into the ideal, so once that floor
  // is a member the whole branch is.
  auto floor_degree = [&](std::size_t pos) {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < k; ++i) d += i < pos ? u[i] : candidates[i].front();
    return d;
  };
  auto search = [&](auto& self, std::size_t pos) -> void {
    if (pos == k) {
      std::uint64_t d = floor_degree(k);
      if (index.contains(u, d)) return;
      for (std::size_t i = 0; i < k; ++i) {
        ++u[i];
        const bool inside = index.contains(u, d + 1);
        --u[i];
        if (!inside) return;
      }
      for (std::size_t i = 0; i < k; ++i) {
        if (u[i] >= bounds[i]) throw std::logic_error("socle monomial escaped the generator box");
      }
      found.emplace_back(u);
      return;
    }
    for (Exponent value : candidates[pos]) {
      u[pos] = value;
      std::vector<Exponent> probe(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
      for (std::size_t i = pos + 1; i < k; ++i) probe.push_back(candidates[i].front());
      if (index.contains(probe, floor_degree(pos + 1))) break;
      self(self, pos + 1);
    }
    u[pos] = 0;
  };
  search(search, 0);
  std::sort(found.begin(), found.end(), std::greater<>());
  return found;
}

std::uint64_t socle_dimension_at(const MonomialIdeal& ideal, const PrimeSupport& prime) {
  if (prime.height() == 0) return ideal.is_zero() ? 1 : 0;
  return socle_monomials(localize_at(ideal, prime).restricted).size();
}

namespace {

// Nonzero socle dimensions, keyed by prime, in prime order.
std::vector<std::pair<PrimeSupport, std::uint64_t>> socle_profile(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw DomainError("socle profile of the unit ideal");
  if (ideal.is_zero()) return {{PrimeSupport{}, 1}};
  std::vector<std::size_t> support;
  const auto maxes = ideal.max_exponents();
  for (std::size_t i = 0; i < maxes.size(); ++i) {
    if (maxes[i] > 0) support.push_back(i);
  }
  if (support.size() > kMaxSupportForPrimeScan) {
    throw ResourceCapExceeded("prime scan over " + std::to_string(support.size()) + " variables");
  }
  std::vector<std::pair<PrimeSupport, std::uint64_t>> out;
  const std::uint64_t subsets = std::uint64_t{1} << support.size();
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    std::vector<std::size_t> vars;
    for (std::size_t b = 0; b < support.size(); ++b) {
      if (mask >> b & 1) vars.push_back(support[b]);
    }
    PrimeSupport p(std::move(vars));
    if (const auto dim = socle_dimension_at(ideal, p); dim > 0) out.emplace_back(std::move(p), dim);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<PrimeSupport> associated_primes_by_socle(const MonomialIdeal& ideal) {
  std::vector<PrimeSupport> out;
  for (auto& [p, dim] : socle_profile(ideal)) out.push_back(std::move(p));
  return out;
}

std::uint64_t ir_socle(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw DomainError("ir_socle: the unit ideal is not proper");
  std::uint64_t total = 0;
  for (const auto& [p, dim] : socle_profile(ideal)) total += dim;
  return total;
}

std::uint64_t ir(const MonomialIdeal& ideal, IrCheck check) {
  const auto value = ir_socle(ideal);
  if (check == IrCheck::cross_check) {
    const auto counted = ir_components(ideal);
    if (counted != value) {
      throw std::logic_error("ir mismatch on " + to_string(ideal) + ": socle route " + std::to_string(value) +
                             ", component count " + std::to_string(counted));
    }
  }
  return value;
}

}  // namespace monoir
