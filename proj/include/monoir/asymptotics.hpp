#pragma once

// Behaviour of ir, the number of minimal generators and the associated primes
// along the powers I^n and the symbolic powers I^(n).
//
// Computations take place in the polynomial ring with its homogeneous maximal
// ideal standing in for the local case; for monomial ideals localizing at that
// ideal changes none of the counts involved.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "monoir/decomposition.hpp"
#include "monoir/monomial.hpp"
#include "monoir/rational_polynomial.hpp"

namespace monoir {

struct ScanLimits {
  std::size_t max_generators = 200000;
};

inline constexpr unsigned kDefaultMaxN = 8;

/// ir(I^n) for n = 1..n_max through socle counts.
std::vector<std::int64_t> ir_sequence(const MonomialIdeal& ideal, unsigned n_max, ScanLimits limits = {});
/// Minimal generator counts of I^n for n = 1..n_max.
std::vector<std::int64_t> mu_sequence(const MonomialIdeal& ideal, unsigned n_max, ScanLimits limits = {});

/// I, I^2, ..., I^n_max computed incrementally. Throws ResourceCapExceeded if
/// a power needs more than `limits.max_generators` generators.
std::vector<MonomialIdeal> powers_up_to(const MonomialIdeal& ideal, unsigned n_max, ScanLimits limits = {});

struct AssStabilization {
  std::vector<PrimeSupport> primes;
  unsigned n0 = 1;
};

/// Smallest n0 such that Ass(I^n) is the same set for every n in
/// [n0, n_max] and that window spans at least three powers.
std::optional<AssStabilization> ass_stabilization(const MonomialIdeal& ideal, unsigned n_max,
                                                  ScanLimits limits = {});

/// 1 + degree of the fitted polynomial n -> mu(I^n). Throws NotStabilized.
std::size_t analytic_spread(const MonomialIdeal& ideal, unsigned n_max = kDefaultMaxN, ScanLimits limits = {});

enum class PowerKind { ordinary, symbolic };

struct ScanReport {
  PowerKind kind = PowerKind::ordinary;
  MonomialIdeal ideal;
  unsigned n_min = 1;
  unsigned n_max = 1;
  std::vector<std::int64_t> ir_values{};
  std::vector<std::int64_t> mu_values{};
  std::optional<unsigned> ass_stable_at{};
  std::optional<PolynomialFit> fitted_ir{};
  std::optional<PolynomialFit> fitted_mu{};
  std::size_t bight = 0;
  std::optional<std::size_t> analytic_spread{};
  /// Ordinary scans: bight-1 <= deg(fitted_ir) <= analytic_spread-1.
  /// Symbolic scans: deg(fitted_ir) == bight-1.
  bool bounds_ok = false;
};

/// Full scan of I^n for n = 1..n_max. Fits are taken on the values from the
/// Ass stabilization index on; missing stabilization leaves them empty.
ScanReport ir_polynomial(const MonomialIdeal& ideal, unsigned n_max = kDefaultMaxN, ScanLimits limits = {});

/// Intersection over minimal primes p of the saturation of I^n by the product
/// of the variables outside p.
MonomialIdeal symbolic_power(const MonomialIdeal& ideal, unsigned n);

/// Scan of ir(I^(n)), n = 1..n_max.
ScanReport symbolic_ir_polynomial(const MonomialIdeal& ideal, unsigned n_max = kDefaultMaxN);

}  // namespace monoir
