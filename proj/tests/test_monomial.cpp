#include <doctest.h>

#include "monoir/monomial.hpp"
#include "oracles.hpp"

using namespace monoir;

namespace {

const Ambient kXY = make_ambient("x,y");
const Ambient kXYZ = make_ambient("x,y,z");

MonomialIdeal I(const char* text, const Ambient& a = kXY) { return parse_ideal(text, a); }
Monomial M(const char* text, const Ambient& a = kXY) { return parse_monomial(text, *a); }

}  // namespace

TEST_CASE("variable sets") {
  CHECK(VariableSet::parse("x, y ,z").names() == std::vector<std::string>{"x", "y", "z"});
  CHECK(VariableSet::indexed("x", 3).to_string() == "x1,x2,x3");
  CHECK_THROWS_AS(VariableSet::parse("x,x"), ParseError);
  CHECK_THROWS_AS(VariableSet::parse("x,1y"), ParseError);
  CHECK_THROWS_AS(VariableSet::parse(""), ParseError);
}

TEST_CASE("parse_ideal") {
  SUBCASE("minimal generators in canonical order") {
    const auto i = I("x^2, x*y");
    REQUIRE(i.size() == 2);
    CHECK(i.generators()[0] == Monomial({2, 0}));
    CHECK(i.generators()[1] == Monomial({1, 1}));
    CHECK(to_string(i) == "x^2, x*y");
  }
  SUBCASE("unit") { CHECK(I("1").is_unit()); }
  SUBCASE("divisibility pruning") { CHECK(I("x^2, x^3") == I("x^2")); }
  SUBCASE("whitespace and repeated factors") { CHECK(I(" x * x ,y^ 3") == I("x^2, y^3")); }
  SUBCASE("zero ideal token") { CHECK(I("0").is_zero()); }
  SUBCASE("errors") {
    CHECK_THROWS_AS(I("x^2, w"), ParseError);
    CHECK_THROWS_AS(I("x^-1"), ParseError);
    CHECK_THROWS_AS(I("x^0"), ParseError);
    CHECK_THROWS_AS(I("x^"), ParseError);
    CHECK_THROWS_AS(I("x,,y"), ParseError);
    CHECK_THROWS_AS(I("x y"), ParseError);
    CHECK_THROWS_AS(I(""), ParseError);
    CHECK_THROWS_AS(I("2*x"), ParseError);
  }
}

TEST_CASE("minimalize") {
  CHECK(minimalize(kXY, {M("x^2"), M("x^3"), M("x*y")}) == I("x^2, x*y"));
  CHECK(minimalize(kXY, {}).is_zero());
  CHECK(minimalize(kXY, {M("x*y"), M("x^2*y"), M("x*y^2")}) == I("x*y"));
  CHECK_THROWS_AS(minimalize(kXY, {Monomial({1, 0, 0})}), AmbientMismatch);
}

TEST_CASE("contains") {
  CHECK(contains(I("x^2, x*y"), M("x^2*y^3")));
  CHECK_FALSE(contains(I("x^2, x*y"), M("x")));
  CHECK_FALSE(contains(MonomialIdeal::zero(kXY), M("x^5*y")));
}

TEST_CASE("sum, multiply, power") {
  CHECK(power(I("x, y"), 2) == I("x^2, x*y, y^2"));
  CHECK(multiply(I("x"), I("y")) == I("x*y"));
  CHECK(power(I("x, y"), 0).is_unit());
  CHECK(sum(I("x^2"), I("x*y, y^3")) == I("x^2, x*y, y^3"));

  const auto p = power(I("x^2, x*y"), 2);
  CHECK(p == I("x^4, x^3*y, x^2*y^2"));
  // membership oracle: m in I^2 iff m is divisible by a product of two generators
  const std::vector<Monomial> gens = {M("x^2"), M("x*y")};
  for (const auto& m : monomials_up_to(2, 6)) {
    bool expected = false;
    for (const auto& a : gens) {
      for (const auto& b : gens) expected = expected || (a * b).divides(m);
    }
    CHECK(contains(p, m) == expected);
  }
}

TEST_CASE("intersect") {
  CHECK(intersect(I("x"), I("y")) == I("x*y"));
  CHECK(intersect(I("x"), I("x^2, y")) == I("x^2, x*y"));
  CHECK(intersect(I("x^2, y"), I("x, y^2")) == I("x^2, x*y, y^2"));
  CHECK(oracle::agree_up_to(intersect(I("x"), I("x^2, y")), I("x^2, x*y"), 4));
  const std::vector<MonomialIdeal> three = {I("x"), I("y"), I("x^2, y^2")};
  CHECK(intersect(three) == I("x^2*y, x*y^2"));
}

TEST_CASE("colon") {
  CHECK(colon(I("x^2, x*y"), I("x")) == I("x, y"));
  CHECK(colon(I("x^2, x*y"), I("x, y")) == I("x"));
  CHECK(colon(I("x^2, x*y"), MonomialIdeal::unit(kXY)) == I("x^2, x*y"));
  CHECK_THROWS_AS(colon(I("x"), MonomialIdeal::zero(kXY)), DomainError);
  // (x^2, xy) : (x, y) by definition: monomials u with ux, uy in I
  const auto c = colon(I("x^2, x*y"), I("x, y"));
  for (const auto& u : monomials_up_to(2, 4)) {
    const bool expected = contains(I("x^2, x*y"), u * M("x")) && contains(I("x^2, x*y"), u * M("y"));
    CHECK(contains(c, u) == expected);
  }
}

TEST_CASE("saturate") {
  CHECK(saturate(I("x^2, x*y"), I("x, y")) == I("x"));
  CHECK(saturate(I("x"), I("y")) == I("x"));
  CHECK(saturate(I("x^2, x*y, y^3"), I("y")).is_unit());
}

TEST_CASE("radical") {
  CHECK(radical(I("x^2, x*y")) == I("x"));
  CHECK(radical(I("x^2, y^3")) == I("x, y"));
  const auto tri = I("x*y, y*z, z*x", kXYZ);
  CHECK(radical(tri) == tri);
}

TEST_CASE("standard_monomials_below") {
  const auto sm = standard_monomials_below(I("x^2, x*y"), DegreeBound{2});
  CHECK(sm == std::vector<Monomial>{M("1"), M("x"), M("y"), M("y^2")});
  CHECK(standard_monomials_below(MonomialIdeal::unit(kXY), DegreeBound{3}).empty());
  CHECK(standard_monomials_below(MonomialIdeal::zero(kXY), DegreeBound{1}) ==
        std::vector<Monomial>{M("1"), M("x"), M("y")});
}

TEST_CASE("exponent overflow is reported") {
  const auto big = MonomialIdeal(kXY, {Monomial({kMaxExponent, 0})});
  CHECK_THROWS_AS(multiply(big, big), ResourceCapExceeded);
}

TEST_CASE("algebraic laws on seeded ideals") {
  oracle::IdealGenerator gen(7, kXYZ, 4, 3);
  for (int round = 0; round < 60; ++round) {
    const auto a = gen.next();
    const auto b = gen.next();
    const auto m = gen.monomial();
    const std::uint32_t bound =
        static_cast<std::uint32_t>(std::max(a.max_generator_degree(), b.max_generator_degree()) + 2);

    // minimalize keeps the ideal and yields an antichain
    std::vector<Monomial> noisy(a.generators().begin(), a.generators().end());
    noisy.push_back(a.generators().front() * m);
    std::reverse(noisy.begin(), noisy.end());
    CHECK(minimalize(kXYZ, noisy) == a);
    for (const auto& g : a.generators()) {
      for (const auto& h : a.generators()) CHECK((g == h || !g.divides(h)));
    }

    // intersection membership
    const auto ab = intersect(a, b);
    for (const auto& u : monomials_up_to(3, bound)) {
      CHECK(contains(ab, u) == (contains(a, u) && contains(b, u)));
    }

    // (I ∩ J) : m = (I : m) ∩ (J : m)
    CHECK(colon(ab, m) == intersect(colon(a, m), colon(b, m)));

    // power(I, s+t) = power(I, s) * power(I, t)
    CHECK(power(a, 3) == multiply(power(a, 1), power(a, 2)));

    // order independence
    CHECK(intersect(a, b) == intersect(b, a));
    CHECK(multiply(a, b) == multiply(b, a));

    // the saturation is a fixed point and contains the ideal
    const auto p = MonomialIdeal(kXYZ, {Monomial({1, 1, 0})});
    const auto sat = saturate(a, p);
    CHECK(colon(sat, p) == sat);
    CHECK(is_subideal(a, sat));
  }
}
