#include <doctest.h>

#include "monoir/harness.hpp"
#include "monoir/socle.hpp"
#include "oracles.hpp"

using namespace monoir;

namespace {

const Ambient kXY = make_ambient("x,y");
const Ambient kXYZ = make_ambient("x,y,z");

MonomialIdeal I(const char* text, const Ambient& a = kXY) { return parse_ideal(text, a); }
PrimeSupport P(const char* csv, const Ambient& a = kXY) { return PrimeSupport::parse(csv, *a); }

}  // namespace

TEST_CASE("localization forgets exponents outside the prime") {
  const auto loc = localize_at(I("x^2, x*y"), P("x"));
  CHECK(loc.prime == P("x"));
  CHECK(loc.restricted.arity() == 1);
  CHECK(to_string(loc.restricted) == "x");
  CHECK(to_string(localize_at(I("x^2*y, y^3*z", kXYZ), P("x,y", kXYZ)).restricted) == "x^2*y, y^3");
  CHECK_THROWS_AS(localize_at(I("x"), PrimeSupport{}), DomainError);
}

TEST_CASE("socle dimensions of <x^2, xy>") {
  const auto i = I("x^2, x*y");
  CHECK(socle_dimension_at(i, P("x")) == 1);
  CHECK(socle_dimension_at(i, P("x,y")) == 1);
  CHECK(socle_dimension_at(i, P("y")) == 0);
  CHECK(socle_monomials(i) == std::vector<Monomial>{Monomial({1, 0})});
  CHECK(ir_socle(i) == 2);
  CHECK(ir(i, IrCheck::cross_check) == 2);
}

TEST_CASE("socle of a parameter ideal is one corner") {
  const auto q = I("x^5, y^5");
  CHECK(socle_monomials(q) == std::vector<Monomial>{Monomial({4, 4})});
  CHECK(socle_dimension_at(q, P("x,y")) == 1);
  CHECK(socle_dimension_at(power(q, 3), P("x,y")) == 3);
}

TEST_CASE("examples through the socle route") {
  CHECK(ir(I("x*y, y*z, x*z", kXYZ), IrCheck::cross_check) == 3);
  const auto hex = hexagon_instance().ideal;
  CHECK(ir(hex, IrCheck::cross_check) == 5);
  CHECK(associated_primes_by_socle(hex) == associated_primes(hex));
}

TEST_CASE("degenerate ideals") {
  CHECK_THROWS_AS(ir_socle(MonomialIdeal::unit(kXY)), DomainError);
  CHECK(socle_dimension_at(MonomialIdeal::zero(kXY), PrimeSupport{}) == 1);
  CHECK(socle_dimension_at(I("x"), PrimeSupport{}) == 0);
  CHECK(ir(MonomialIdeal::zero(kXY)) == 1);
}

TEST_CASE("socle properties on seeded ideals") {
  for (const auto& amb : {kXY, kXYZ, make_ambient("a,b,c,d")}) {
    oracle::IdealGenerator gen(100 + amb->arity(), amb, 5, 4);
    for (int round = 0; round < 40; ++round) {
      const auto i = gen.next();
      const auto ass = associated_primes(i);

      // dual route
      CHECK(ir_socle(i) == ir_components(i));
      CHECK(associated_primes_by_socle(i) == ass);

      // every nonempty subset of the variables: socle count matches the
      // colon-ideal count and the component count, and is positive exactly on Ass
      for (std::size_t mask = 1; mask < (std::size_t{1} << amb->arity()); ++mask) {
        std::vector<std::size_t> vars;
        for (std::size_t v = 0; v < amb->arity(); ++v) {
          if (mask >> v & 1) vars.push_back(v);
        }
        const PrimeSupport p(vars);
        const auto loc = localize_at(i, p);
        const auto dim = socle_dimension_at(i, p);
        CHECK(dim == oracle::socle_count_by_colon(loc.restricted));
        CHECK(dim == ir_at_prime(i, p));
        CHECK((dim > 0) == std::binary_search(ass.begin(), ass.end(), p));
        // localizing twice changes nothing
        CHECK(localize_at(loc.restricted, PrimeSupport::all(p.height())).restricted == loc.restricted);
      }
    }
  }
}
