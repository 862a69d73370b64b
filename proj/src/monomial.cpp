#include "monoir/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace monoir {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void require_same_ambient(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!same_ambient(a.ambient(), b.ambient())) {
    throw AmbientMismatch("ideals over different variable sets: {" + a.variables().to_string() +
                          "} vs {" + b.variables().to_string() + "}");
  }
}

Exponent checked_add(Exponent a, Exponent b) {
  const std::uint64_t s = std::uint64_t{a} + b;
  if (s > kMaxExponent) throw ResourceCapExceeded("exponent overflow");
  return static_cast<Exponent>(s);
}

}  // namespace

// ---------------------------------------------------------------------------
// VariableSet

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw ParseError("variable set must not be empty");
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) throw ParseError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw ParseError("duplicate variable name '" + n + "'");
  }
}

VariableSet VariableSet::parse(std::string_view csv) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const auto comma = csv.find(',', start);
    const auto end = comma == std::string_view::npos ? csv.size() : comma;
    names.emplace_back(trim(csv.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return VariableSet(std::move(names));
}

VariableSet VariableSet::indexed(std::string_view prefix, std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return VariableSet(std::move(names));
}

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::string VariableSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out += ',';
    out += names_[i];
  }
  return out;
}

Ambient make_ambient(std::string_view csv) {
  return std::make_shared<const VariableSet>(VariableSet::parse(csv));
}

Ambient make_ambient(std::vector<std::string> names) {
  return std::make_shared<const VariableSet>(std::move(names));
}

bool same_ambient(const Ambient& a, const Ambient& b) { return a == b || *a == *b; }

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable_power(std::size_t arity, std::size_t var, Exponent e) {
  std::vector<Exponent> v(arity, 0);
  v.at(var) = e;
  return Monomial(std::move(v));
}

std::uint64_t Monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

std::size_t Monomial::support_size() const noexcept {
  return static_cast<std::size_t>(std::count_if(exps_.begin(), exps_.end(), [](Exponent e) { return e > 0; }));
}

std::optional<std::size_t> Monomial::first_variable() const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0) return i;
  }
  return std::nullopt;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Exponent e : m.exponents()) {
    h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<Exponent> v(a.arity());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked_add(a[i], b[i]);
  return Monomial(std::move(v));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Exponent> v(a.arity());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::max(a[i], b[i]);
  return Monomial(std::move(v));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<Exponent> v(a.arity());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::min(a[i], b[i]);
  return Monomial(std::move(v));
}

Monomial colon_quotient(const Monomial& a, const Monomial& b) {
  std::vector<Exponent> v(a.arity());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] > b[i] ? a[i] - b[i] : 0;
  return Monomial(std::move(v));
}

Monomial support_monomial(const Monomial& a) {
  std::vector<Exponent> v(a.arity());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] > 0 ? 1 : 0;
  return Monomial(std::move(v));
}

// ---------------------------------------------------------------------------
// MonomialIdeal

MonomialIdeal minimalize(Ambient ambient, std::vector<Monomial> gens) {
  const std::size_t arity = ambient->arity();
  for (const auto& g : gens) {
    if (g.arity() != arity) {
      throw AmbientMismatch("monomial of arity " + std::to_string(g.arity()) + " in ring of arity " +
                            std::to_string(arity));
    }
  }
  // A divisor never has larger degree, so one pass in degree order suffices.
  std::vector<std::pair<std::uint64_t, Monomial>> by_degree;
  by_degree.reserve(gens.size());
  for (auto& g : gens) by_degree.emplace_back(g.degree(), std::move(g));
  std::sort(by_degree.begin(), by_degree.end());
  by_degree.erase(std::unique(by_degree.begin(), by_degree.end()), by_degree.end());

  std::vector<Monomial> kept;
  for (auto& [deg, g] : by_degree) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
    if (!kept.empty() && kept.front().is_unit()) break;
  }
  std::sort(kept.begin(), kept.end(), std::greater<>());
  return MonomialIdeal(MonomialIdeal::Canonical{}, std::move(ambient), std::move(kept));
}

MonomialIdeal::MonomialIdeal(Ambient ambient, std::vector<Monomial> gens)
    : MonomialIdeal(minimalize(std::move(ambient), std::move(gens))) {}

MonomialIdeal MonomialIdeal::zero(Ambient ambient) { return MonomialIdeal(std::move(ambient), {}); }

MonomialIdeal MonomialIdeal::unit(Ambient ambient) {
  const auto arity = ambient->arity();
  return MonomialIdeal(std::move(ambient), {Monomial::unit(arity)});
}

std::uint64_t MonomialIdeal::max_generator_degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

std::vector<Exponent> MonomialIdeal::max_exponents() const {
  std::vector<Exponent> out(arity(), 0);
  for (const auto& g : gens_) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i], g[i]);
  }
  return out;
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
  return same_ambient(a.ambient_, b.ambient_) && a.gens_ == b.gens_;
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
  const auto gens = ideal.generators();
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool is_subideal(const MonomialIdeal& small, const MonomialIdeal& big) {
  require_same_ambient(small, big);
  const auto gens = small.generators();
  return std::all_of(gens.begin(), gens.end(), [&](const Monomial& g) { return contains(big, g); });
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  std::vector<Monomial> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return minimalize(a.ambient(), std::move(gens));
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(g * h);
  }
  return minimalize(a.ambient(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned n) {
  MonomialIdeal result = MonomialIdeal::unit(ideal.ambient());
  for (unsigned k = 0; k < n; ++k) result = multiply(result, ideal);
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
  }
  return minimalize(a.ambient(), std::move(gens));
}

MonomialIdeal intersect(std::span<const MonomialIdeal> ideals) {
  if (ideals.empty()) throw DomainError("intersection of an empty family");
  MonomialIdeal acc = ideals.front();
  for (const auto& next : ideals.subspan(1)) acc = intersect(acc, next);
  return acc;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(colon_quotient(g, m));
  return minimalize(ideal.ambient(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  require_same_ambient(ideal, by);
  if (by.is_zero()) throw DomainError("colon by the zero ideal");
  std::vector<MonomialIdeal> parts;
  parts.reserve(by.size());
  for (const auto& h : by.generators()) parts.push_back(colon(ideal, h));
  return intersect(parts);
}

MonomialIdeal saturate(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  MonomialIdeal current = ideal;
  for (;;) {
    MonomialIdeal next = colon(current, by);
    if (next == current) return current;
    current = std::move(next);
  }
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(support_monomial(g));
  return minimalize(ideal.ambient(), std::move(gens));
}

std::vector<Monomial> monomials_up_to(std::size_t arity, std::uint32_t bound) {
  std::vector<Monomial> out;
  std::vector<Exponent> current(arity, 0);
  // Emits all exponent vectors of exactly `remaining` total degree from
  // position `pos` on, largest leading exponent first.
  std::function<void(std::size_t, std::uint32_t)> fill = [&](std::size_t pos, std::uint32_t remaining) {
    if (pos + 1 == arity) {
      current[pos] = remaining;
      out.emplace_back(current);
      return;
    }
    for (std::uint32_t e = remaining + 1; e-- > 0;) {
      current[pos] = e;
      fill(pos + 1, remaining - e);
    }
    current[pos] = 0;
  };
  for (std::uint32_t d = 0; d <= bound; ++d) fill(0, d);
  return out;
}

std::vector<Monomial> standard_monomials_below(const MonomialIdeal& ideal, DegreeBound bound) {
  std::vector<Monomial> out;
  for (auto& m : monomials_up_to(ideal.arity(), bound.value)) {
    if (!contains(ideal, m)) out.push_back(std::move(m));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::string_view identifier() {
    skip_space();
    const auto start = pos_;
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
    }
    return text_.substr(start, pos_ - start);
  }
  std::string_view digits() {
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Monomial parse_mono(Lexer& lex, const VariableSet& vars) {
  std::vector<Exponent> exps(vars.arity(), 0);
  if (lex.peek() == '1') {
    const auto d = lex.digits();
    if (d != "1") lex.fail("malformed token '" + std::string(d) + "'");
    return Monomial(std::move(exps));
  }
  do {
    const auto name = lex.identifier();
    if (name.empty()) lex.fail("expected a variable name");
    const auto idx = vars.index_of(name);
    if (!idx) lex.fail("unknown variable '" + std::string(name) + "'");
    Exponent e = 1;
    if (lex.accept('^')) {
      if (lex.peek() == '-') lex.fail("negative exponent");
      const auto d = lex.digits();
      if (d.empty()) lex.fail("expected an exponent");
      if (d.size() > 9) lex.fail("exponent too large");
      e = static_cast<Exponent>(std::stoul(std::string(d)));
      if (e == 0) lex.fail("exponent must be positive");
    }
    exps[*idx] = checked_add(exps[*idx], e);
  } while (lex.accept('*'));
  return Monomial(std::move(exps));
}

}  // namespace

Monomial parse_monomial(std::string_view text, const VariableSet& vars) {
  Lexer lex(text);
  Monomial m = parse_mono(lex, vars);
  if (!lex.at_end()) lex.fail("trailing input");
  return m;
}

MonomialIdeal parse_ideal(std::string_view text, const Ambient& ambient) {
  if (trim(text) == "0") return MonomialIdeal::zero(ambient);
  Lexer lex(text);
  if (lex.at_end()) lex.fail("empty ideal text");
  std::vector<Monomial> gens;
  do {
    gens.push_back(parse_mono(lex, *ambient));
  } while (lex.accept(','));
  if (!lex.at_end()) lex.fail("malformed token '" + std::string(1, lex.peek()) + "'");
  return minimalize(ambient, std::move(gens));
}

std::string to_string(const Monomial& m, const VariableSet& vars) {
  if (m.is_unit()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  std::string out;
  for (const auto& g : ideal.generators()) {
    if (!out.empty()) out += ", ";
    out += to_string(g, ideal.variables());
  }
  return out;
}

}  // namespace monoir
