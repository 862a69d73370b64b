#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "monoir/cli.hpp"
#include "monoir/report_io.hpp"

using namespace monoir;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "monoir");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = MONOIR_DATA_DIR;

}  // namespace

TEST_CASE("parse prints canonical generators") {
  const auto r = cli({"parse", "--vars", "x,y", "--ideal", "x*y, x^2, x^3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "x^2, x*y\n");
}

TEST_CASE("ir of <x^2, xy>") {
  CHECK(cli({"ir", "--vars", "x,y", "--ideal", "x^2, x*y"}).out == "2\n");
  CHECK(cli({"ir", "--vars", "x,y,z", "--ideal", "x*y, y*z, x*z", "--check"}).out == "3\n");
  const auto j = json::parse(cli({"ir", "--vars", "x,y", "--ideal", "x^2, x*y", "--json"}).out);
  CHECK(j.at("ir") == 2);
}

TEST_CASE("decompose") {
  const auto r = cli({"decompose", "--vars", "x,y", "--ideal", "x^2, x*y", "--json"});
  REQUIRE(r.code == kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j.at("target") == "x^2, x*y");
  REQUIRE(j.at("components").size() == 2);
  CHECK(j["components"][0]["ideal"] == "x");
  CHECK(j["components"][1]["ideal"] == "x^2, y");
  CHECK(cli({"decompose", "--vars", "x,y", "--ideal", "x^2, x*y"}).out == "(x) ∩ (x^2, y)\n");
}

TEST_CASE("assoc, socle, bight, ell") {
  CHECK(cli({"assoc", "--vars", "x,y", "--ideal", "x^2, x*y"}).out == "associated (x) (x,y); embedded (x,y)\n");
  CHECK(cli({"socle", "--vars", "x,y", "--ideal", "x^2, x*y"}).out == "(x)=1 (x,y)=1\n");
  CHECK(cli({"socle", "--vars", "x,y", "--ideal", "x^2, x*y", "--prime", "y"}).out == "(y)=0\n");
  CHECK(cli({"bight", "--vars", "x,y", "--ideal", "x^2, x*y"}).out == "1\n");
  CHECK(cli({"ell", "--vars", "x,y", "--ideal", "x^2, x*y"}).out == "2\n");
}

TEST_CASE("scan writes JSON and CSV") {
  const auto csv = std::filesystem::temp_directory_path() / "monoir_scan_test.csv";
  const auto r = cli({"scan", "--vars", "x,y", "--ideal", "x^2, x*y", "--max-n", "6", "--csv", csv.string()});
  REQUIRE(r.code == kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j.at("ir_values") == json({2, 3, 4, 5, 6, 7}));
  CHECK(j.at("fitted_ir").at("coeffs") == json({"1/1", "1/1"}));
  CHECK(j.at("bight") == 1);
  CHECK(j.at("analytic_spread") == 2);
  CHECK(j.at("bounds_ok") == true);
  std::ifstream f(csv);
  std::stringstream s;
  s << f.rdbuf();
  CHECK(s.str() == "n,ir,mu\n1,2,2\n2,3,3\n3,4,4\n4,5,5\n5,6,6\n6,7,7\n");
  std::filesystem::remove(csv);
}

TEST_CASE("short scans do not stabilize") {
  const auto j = json::parse(cli({"scan", "--vars", "x,y", "--ideal", "x^2, x*y", "--max-n", "3"}).out);
  CHECK(j.at("fitted_ir") == "not stabilized");
}

TEST_CASE("fit") {
  CHECK(cli({"fit", "--values", "1,3,6,10,15"}).out == "1/2*n^2 + 1/2*n\n");
  const auto j = json::parse(cli({"fit", "--values", "2,3,4,5", "--json"}).out);
  CHECK(rational_polynomial_from_json(j) == RationalPolynomial({1, 1}));
  CHECK(cli({"fit", "--values", "1,2,4,8"}).code == kExitVerificationFailure);
  CHECK(cli({"fit", "--values", "1,2,x"}).code == kExitUsage);
}

TEST_CASE("symbolic") {
  CHECK(cli({"symbolic", "--vars", "x,y,z", "--ideal", "x*y, y*z, x*z", "--n", "2"}).out ==
        "x^2*y^2, x^2*z^2, x*y*z, y^2*z^2\n");
  const auto j = json::parse(cli({"symbolic", "--vars", "x,y,z", "--ideal", "x*y, y*z, x*z", "--max-n", "6"}).out);
  CHECK(j.at("ir_values") == json({3, 6, 9, 12, 15, 18}));
  CHECK(j.at("kind") == "symbolic");
}

TEST_CASE("usage and parse errors") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  const auto r = cli({"ir", "--vars", "x,y", "--ideal", "x^2, w"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("w") != std::string::npos);
  CHECK(cli({"ir", "--ideal", "x"}).code == kExitUsage);
  CHECK(cli({"ir", "--vars", "x,y", "--ideal", "1"}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("resource cap") {
  CHECK(cli({"scan", "--vars", "x,y", "--ideal", "x^2, x*y, y^3", "--cap", "5"}).code == kExitResourceCap);
}

TEST_CASE("gen-random is deterministic") {
  const auto a = cli({"gen-random", "--seed", "9", "--count", "5"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == cli({"gen-random", "--seed", "9", "--count", "5"}).out);
  CHECK(a.out.rfind("vars: x1,x2,x3\n", 0) == 0);
  const auto corpus = parse_corpus(a.out);
  CHECK(corpus.entries.size() == 5);
}

TEST_CASE("verify over a corpus file") {
  const auto r = cli({"verify", "--file", kData + "/examples.corpus", "--suite", "lemma-2.3,thm-3.2-suff", "--max-n", "4"});
  CHECK(r.code == kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j.at("summary").at("fail") == 0);
  CHECK(j.at("summary").at("pass") == 12);
}

TEST_CASE("JSON shapes") {
  const Ambient xy = make_ambient("x,y");
  CHECK(to_json(PrimeSupport::parse("x,y", *xy), *xy) == json({"x", "y"}));
  CHECK(to_json(RationalPolynomial({Rational(1, 2), 0, 3})) == json({{"coeffs", {"1/2", "0/1", "3/1"}}, {"degree", 2}}));
  CHECK(rational_polynomial_from_json(to_json(RationalPolynomial({Rational(-7, 3), 1}))) ==
        RationalPolynomial({Rational(-7, 3), 1}));
  CHECK(emit_report_json(json::object({{"b", 1}, {"a", 2}})) == "{\n  \"a\": 2,\n  \"b\": 1\n}\n");
}

TEST_CASE("corpus files") {
  SUBCASE("bundled examples are in canonical form") {
    const auto corpus = load_corpus(kData + "/examples.corpus");
    CHECK(corpus.entries.size() == 6);
    std::ifstream f(kData + "/examples.corpus");
    std::stringstream s;
    s << f.rdbuf();
    // comments are dropped on formatting, everything else is preserved
    std::string text = s.str();
    text.erase(0, text.find('\n') + 1);
    CHECK(format_corpus(corpus) == text);
  }
  SUBCASE("round trip") {
    const std::string text = "vars: a,b\nfirst: a^2, a*b\nsecond: b^3\nvars: u\nthird: u\n";
    CHECK(format_corpus(parse_corpus(text)) == text);
  }
  SUBCASE("duplicate names name the line") {
    try {
      parse_corpus("vars: x,y\n# c\nfoo: x\nfoo: y\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
  }
  SUBCASE("missing header") { CHECK_THROWS_AS(parse_corpus("foo: x\n"), ParseError); }
  SUBCASE("bad ideal") { CHECK_THROWS_AS(parse_corpus("vars: x\nfoo: y\n"), ParseError); }
}
