#include "monoir/rational_polynomial.hpp"

#include <algorithm>

#include "monoir/error.hpp"

namespace monoir {

std::string to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    const Integer den(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(Integer(text.substr(0, slash)), den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const ParseError*>(&e)) throw;
    throw ParseError("malformed rational '" + text + "'");
  }
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RationalPolynomial RationalPolynomial::constant(Rational c) { return RationalPolynomial({std::move(c)}); }

RationalPolynomial RationalPolynomial::linear_shift(const Rational& shift) {
  return RationalPolynomial({-shift, Rational(1)});
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::operator()(const Rational& n) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string num = denominator(mag) == 1 ? numerator(mag).str() : monoir::to_string(mag);
    if (k == 0) {
      out += num;
    } else {
      if (mag != 1) out += num + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

RationalPolynomial shifted_binomial(std::int64_t shift, unsigned k) {
  RationalPolynomial p = RationalPolynomial::constant(1);
  Integer factorial = 1;
  for (unsigned j = 0; j < k; ++j) {
    p *= RationalPolynomial::linear_shift(Rational(shift + static_cast<std::int64_t>(j)));
    factorial *= j + 1;
  }
  return p * Rational(1, factorial);
}

std::optional<PolynomialFit> fit_polynomial(std::span<const std::int64_t> values, std::int64_t n_start) {
  if (values.size() < 4) throw DomainError("fit_polynomial needs at least four values");
  // table[k][i] is the k-th forward difference at position i.
  std::vector<std::vector<Integer>> table;
  table.emplace_back(values.begin(), values.end());
  while (table.back().size() > 1) {
    const auto& prev = table.back();
    std::vector<Integer> next(prev.size() - 1);
    for (std::size_t i = 0; i + 1 < prev.size(); ++i) next[i] = prev[i + 1] - prev[i];
    table.push_back(std::move(next));
  }

  const std::size_t count = values.size();
  for (std::size_t d = 0; d + 3 <= count; ++d) {
    const auto& diffs = table[d + 1];
    // Longest all-zero suffix of the (d+1)-st differences.
    std::size_t first_zero = diffs.size();
    while (first_zero > 0 && diffs[first_zero - 1] == 0) --first_zero;
    const std::size_t tail = first_zero;  // tail occupies values[tail..]
    if (count - tail < d + 3) continue;

    RationalPolynomial poly;
    const std::int64_t t = n_start + static_cast<std::int64_t>(tail);
    for (std::size_t k = 0; k <= d; ++k) {
      poly += shifted_binomial(t, static_cast<unsigned>(k)) * Rational(table[k][tail]);
    }
    return PolynomialFit{std::move(poly), t};
  }
  return std::nullopt;
}

}  // namespace monoir
