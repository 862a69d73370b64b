#pragma once

// Monomials and monomial ideals in a polynomial ring over a fixed, named set
// of variables. No coefficient field is represented: every operation here is
// combinatorial on exponent vectors.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monoir/error.hpp"

namespace monoir {

using Exponent = std::uint32_t;

/// Largest exponent any operation may produce.
inline constexpr Exponent kMaxExponent = Exponent{1} << 30;

class VariableSet {
 public:
  explicit VariableSet(std::vector<std::string> names);

  /// Comma separated list, e.g. "x,y,z".
  static VariableSet parse(std::string_view csv);
  /// prefix1, prefix2, ..., prefix<count>
  static VariableSet indexed(std::string_view prefix, std::size_t count);

  std::size_t arity() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::string to_string() const;

  bool operator==(const VariableSet&) const = default;

 private:
  std::vector<std::string> names_;
};

using Ambient = std::shared_ptr<const VariableSet>;

Ambient make_ambient(std::string_view csv);
Ambient make_ambient(std::vector<std::string> names);

bool same_ambient(const Ambient& a, const Ambient& b);

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}

  static Monomial unit(std::size_t arity) { return Monomial(std::vector<Exponent>(arity, 0)); }
  static Monomial variable_power(std::size_t arity, std::size_t var, Exponent e);

  std::size_t arity() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  std::uint64_t degree() const noexcept;
  std::size_t support_size() const noexcept;
  bool is_unit() const noexcept { return support_size() == 0; }
  /// True for x_i^a with a >= 1.
  bool is_pure_power() const noexcept { return support_size() == 1; }
  /// Index of the lowest variable with a positive exponent, if any.
  std::optional<std::size_t> first_variable() const noexcept;

  bool divides(const Monomial& other) const noexcept;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

Monomial operator*(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
/// a / gcd(a, b): the generator of <a> : b.
Monomial colon_quotient(const Monomial& a, const Monomial& b);
/// Squarefree part x^{supp(a)}.
Monomial support_monomial(const Monomial& a);

/// Inclusive bound on total degree for brute-force enumeration.
struct DegreeBound {
  std::uint32_t value = 0;
};

/// An ideal stored by its minimal monomial generators. The generator list is
/// always a divisibility antichain in lexicographically descending order, so
/// equality of ideals is equality of generator lists.
class MonomialIdeal {
 public:
  /// Minimalizes `gens`; all monomials must have the ambient's arity.
  MonomialIdeal(Ambient ambient, std::vector<Monomial> gens);

  static MonomialIdeal zero(Ambient ambient);
  static MonomialIdeal unit(Ambient ambient);

  const Ambient& ambient() const noexcept { return ambient_; }
  const VariableSet& variables() const noexcept { return *ambient_; }
  std::size_t arity() const noexcept { return ambient_->arity(); }

  std::span<const Monomial> generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_unit(); }
  bool is_proper() const noexcept { return !is_unit(); }
  std::uint64_t max_generator_degree() const noexcept;
  /// Highest power of each variable occurring in a generator.
  std::vector<Exponent> max_exponents() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

 private:
  struct Canonical {};
  MonomialIdeal(Canonical, Ambient ambient, std::vector<Monomial> gens)
      : ambient_(std::move(ambient)), gens_(std::move(gens)) {}

  friend MonomialIdeal minimalize(Ambient, std::vector<Monomial>);

  Ambient ambient_;
  std::vector<Monomial> gens_;
};

/// Divisibility antichain of `gens`, in canonical order.
MonomialIdeal minimalize(Ambient ambient, std::vector<Monomial> gens);

bool contains(const MonomialIdeal& ideal, const Monomial& m);
/// small ⊆ big.
bool is_subideal(const MonomialIdeal& small, const MonomialIdeal& big);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
/// power(I, 0) is the unit ideal.
MonomialIdeal power(const MonomialIdeal& ideal, unsigned n);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// Intersection of a nonempty list.
MonomialIdeal intersect(std::span<const MonomialIdeal> ideals);
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);
MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by);
MonomialIdeal saturate(const MonomialIdeal& ideal, const MonomialIdeal& by);
MonomialIdeal radical(const MonomialIdeal& ideal);

/// Monomials of total degree <= bound outside the ideal, ordered by degree and
/// lexicographically descending within a degree (1, x, y, x^2, xy, y^2, ...).
std::vector<Monomial> standard_monomials_below(const MonomialIdeal& ideal, DegreeBound bound);

/// All monomials of total degree <= bound in `arity` variables, same order.
std::vector<Monomial> monomials_up_to(std::size_t arity, std::uint32_t bound);

/// Grammar: ideal := mono ("," mono)*; mono := "1" | factor ("*" factor)*;
/// factor := name ("^" posint)?. The single token "0" denotes the zero ideal.
MonomialIdeal parse_ideal(std::string_view text, const Ambient& ambient);
Monomial parse_monomial(std::string_view text, const VariableSet& vars);

std::string to_string(const Monomial& m, const VariableSet& vars);
std::string to_string(const MonomialIdeal& ideal);

}  // namespace monoir
