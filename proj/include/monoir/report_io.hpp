#pragma once

// JSON and CSV emission, and the corpus file format:
//
//   vars: x1,x2,x3
//   # comment
//   name: x1^2*x2, x3
//   vars: x,y        (starts a new section over other variables)
//   other: x^2, x*y
//
// JSON output uses sorted keys and never floating point: rationals are
// "p/q" strings, counts are integers.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "monoir/asymptotics.hpp"
#include "monoir/decomposition.hpp"
#include "monoir/harness.hpp"
#include "monoir/rational_polynomial.hpp"

namespace monoir {

nlohmann::json to_json(const PrimeSupport& p, const VariableSet& vars);
nlohmann::json to_json(const Decomposition& d);
nlohmann::json to_json(const std::vector<IrreducibleComponent>& comps, const MonomialIdeal& target);
nlohmann::json to_json(const RationalPolynomial& p);
nlohmann::json to_json(const PolynomialFit& fit);
nlohmann::json to_json(const ScanReport& report);
nlohmann::json to_json(const VerificationReport& report);
/// {"reports": [...], "summary": {"fail": n, "pass": n, "skip": n}}
nlohmann::json suite_json(const std::vector<VerificationReport>& reports);

RationalPolynomial rational_polynomial_from_json(const nlohmann::json& j);

/// Two-space indented dump with a trailing newline.
std::string emit_report_json(const nlohmann::json& j);

/// "n,ir,mu" header plus one row per power.
std::string scan_csv(const ScanReport& report);

struct CorpusEntry {
  std::string name;
  MonomialIdeal ideal;
};

struct CorpusFile {
  Ambient ambient;  ///< the header's variables; entries may use later sections
  std::vector<CorpusEntry> entries;
};

/// Throws ParseError naming the offending line.
CorpusFile parse_corpus(std::string_view text);
CorpusFile load_corpus(const std::filesystem::path& path);
std::string format_corpus(const CorpusFile& corpus);

}  // namespace monoir
