#pragma once

// Localization at monomial primes and socle dimensions.
//
// Localizing a monomial ideal at <x_i : i in p> inverts the other variables,
// so each generator simply forgets its exponents outside p. The socle of the
// localized quotient is spanned by the monomials u outside the ideal with
// u * x_i inside for every i in p; its dimension over the residue field is a
// plain count. Summing these counts over the associated primes gives the
// index of reducibility without building any decomposition.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "monoir/decomposition.hpp"
#include "monoir/monomial.hpp"

namespace monoir {

struct LocalizedIdeal {
  PrimeSupport prime;         // indices into the original ambient
  MonomialIdeal restricted;   // over the variables of `prime`, in order
};

/// Rejects the zero prime (the localized ring would have no variables).
LocalizedIdeal localize_at(const MonomialIdeal& ideal, const PrimeSupport& prime);

/// Socle monomials of the localized quotient, over the restricted ring.
std::vector<Monomial> socle_monomials(const MonomialIdeal& restricted);

std::uint64_t socle_dimension_at(const MonomialIdeal& ideal, const PrimeSupport& prime);

/// Primes with a nonzero socle contribution, found by scanning every subset of
/// the variables occurring in the ideal. Agrees with associated_primes but
/// never decomposes.
std::vector<PrimeSupport> associated_primes_by_socle(const MonomialIdeal& ideal);

std::uint64_t ir_socle(const MonomialIdeal& ideal);

enum class IrCheck { none, cross_check };

/// Index of reducibility through socles. With IrCheck::cross_check the
/// splitting decomposition is also counted and a mismatch throws
/// std::logic_error.
std::uint64_t ir(const MonomialIdeal& ideal, IrCheck check = IrCheck::none);

}  // namespace monoir
