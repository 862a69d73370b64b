#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace monoir {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" with q > 0, also for integers ("3/1").
std::string to_string(const Rational& r);
/// Accepts "p/q" or "p".
Rational parse_rational(const std::string& text);

/// Dense univariate polynomial with exact rational coefficients, constant
/// term first. Trailing zero coefficients are never stored, so the zero
/// polynomial has no coefficients and degree -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);

  static RationalPolynomial constant(Rational c);
  /// n - shift
  static RationalPolynomial linear_shift(const Rational& shift);

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const Rational& leading_coefficient() const { return coeffs_.back(); }

  Rational operator()(const Rational& n) const;

  RationalPolynomial& operator+=(const RationalPolynomial& other);
  RationalPolynomial& operator*=(const RationalPolynomial& other);
  RationalPolynomial& operator*=(const Rational& scalar);

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& s) { return a *= s; }
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  /// Human-readable form in the variable `var`, e.g. "1/2*n^2 + 1/2*n".
  std::string to_string(const std::string& var = "n") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// binom(n - shift, k) as a polynomial in n.
RationalPolynomial shifted_binomial(std::int64_t shift, unsigned k);

struct PolynomialFit {
  RationalPolynomial polynomial;
  std::int64_t tail_start = 0;  ///< first argument of the certified tail
};

/// Exact fit of an eventually-polynomial sequence values[i] = f(n_start + i).
///
/// Tries degrees d = 0, 1, ... in order. Degree d is accepted on the longest
/// tail whose (d+1)-st forward differences all vanish, provided that tail has
/// at least d+3 points (so the d-th difference is seen constant three times).
/// The polynomial is assembled in Newton forward form from the tail start and
/// expanded. Returns nullopt when no degree is certified, and throws
/// DomainError when fewer than four values are given.
std::optional<PolynomialFit> fit_polynomial(std::span<const std::int64_t> values, std::int64_t n_start);

}  // namespace monoir
