#include "monoir/report_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace monoir {

using nlohmann::json;

namespace {

constexpr std::string_view kNotStabilized = "not stabilized";

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

json to_json(const PrimeSupport& p, const VariableSet& vars) { return json(p.names(vars)); }

json to_json(const Decomposition& d) {
  json comps = json::array();
  for (const auto& c : d.components) {
    comps.push_back({{"prime", to_json(c.prime, d.target.variables())}, {"ideal", to_string(c.ideal)}});
  }
  return {{"target", to_string(d.target)}, {"components", std::move(comps)}};
}

json to_json(const std::vector<IrreducibleComponent>& comps, const MonomialIdeal& target) {
  json out = json::array();
  for (const auto& c : comps) {
    out.push_back({{"prime", to_json(c.prime(), target.variables())}, {"ideal", to_string(c.ideal())}});
  }
  return {{"target", to_string(target)}, {"components", std::move(out)}};
}

json to_json(const RationalPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(to_string(c));
  return {{"coeffs", std::move(coeffs)}, {"degree", p.degree()}};
}

json to_json(const PolynomialFit& fit) {
  json j = to_json(fit.polynomial);
  j["tail_start"] = fit.tail_start;
  j["text"] = fit.polynomial.to_string();
  return j;
}

RationalPolynomial rational_polynomial_from_json(const json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
  RationalPolynomial p(std::move(coeffs));
  if (j.contains("degree") && j.at("degree").get<int>() != p.degree()) {
    throw ParseError("polynomial degree does not match its coefficients");
  }
  return p;
}

json to_json(const ScanReport& r) {
  auto optional_fit = [](const std::optional<PolynomialFit>& f) -> json {
    return f ? to_json(*f) : json(kNotStabilized);
  };
  json j{
      {"kind", r.kind == PowerKind::ordinary ? "ordinary" : "symbolic"},
      {"vars", r.ideal.variables().to_string()},
      {"ideal", to_string(r.ideal)},
      {"n_range", {r.n_min, r.n_max}},
      {"ir_values", r.ir_values},
      {"mu_values", r.mu_values},
      {"ass_stable_at", r.ass_stable_at ? json(*r.ass_stable_at) : json(kNotStabilized)},
      {"fitted_ir", optional_fit(r.fitted_ir)},
      {"fitted_mu", optional_fit(r.fitted_mu)},
      {"bight", r.bight},
      {"analytic_spread", r.analytic_spread ? json(*r.analytic_spread) : json(kNotStabilized)},
      {"bounds_ok", r.bounds_ok},
  };
  return j;
}

json to_json(const VerificationReport& r) {
  return {{"statement", statement_id(r.statement)},
          {"instance", r.instance},
          {"result", outcome_name(r.result)},
          {"witness", r.witness}};
}

json suite_json(const std::vector<VerificationReport>& reports) {
  json list = json::array();
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& r : reports) {
    list.push_back(to_json(r));
    ++counts[static_cast<int>(r.result)];
  }
  return {{"reports", std::move(list)},
          {"summary", {{"pass", counts[0]}, {"fail", counts[1]}, {"skip", counts[2]}}}};
}

std::string emit_report_json(const json& j) { return j.dump(2) + "\n"; }

std::string scan_csv(const ScanReport& report) {
  std::ostringstream out;
  out << "n,ir,mu\n";
  for (std::size_t i = 0; i < report.ir_values.size(); ++i) {
    out << report.n_min + i << ',' << report.ir_values[i] << ',' << report.mu_values[i] << '\n';
  }
  return out.str();
}

CorpusFile parse_corpus(std::string_view text) {
  std::optional<CorpusFile> corpus;
  Ambient section;
  std::set<std::string> names;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto end = nl == std::string_view::npos ? text.size() : nl;
    const std::string_view line = trim(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    const std::string where = "corpus line " + std::to_string(line_no) + ": ";
    if (!line.empty() && line.front() != '#') {
      const auto colon = line.find(':');
      if (colon == std::string_view::npos) throw ParseError(where + "expected 'name: ideal'");
      const std::string key(trim(line.substr(0, colon)));
      const std::string_view value = trim(line.substr(colon + 1));
      try {
        if (!corpus) {
          if (key != "vars") throw ParseError("first entry must be the 'vars:' header");
          corpus = CorpusFile{make_ambient(value), {}};
          section = corpus->ambient;
        } else if (key == "vars") {
          section = make_ambient(value);
        } else {
          if (key.empty()) throw ParseError("empty entry name");
          if (!names.insert(key).second) throw ParseError("duplicate name '" + key + "'");
          corpus->entries.push_back({key, parse_ideal(value, section)});
        }
      } catch (const Error& e) {
        throw ParseError(where + e.what());
      }
    }
    if (nl == std::string_view::npos) break;
  }
  if (!corpus) throw ParseError("corpus has no 'vars:' header");
  return *std::move(corpus);
}

CorpusFile load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open corpus file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

std::string format_corpus(const CorpusFile& corpus) {
  std::string out = "vars: " + corpus.ambient->to_string() + "\n";
  const VariableSet* section = corpus.ambient.get();
  for (const auto& e : corpus.entries) {
    if (e.ideal.variables() != *section) {
      section = &e.ideal.variables();
      out += "vars: " + section->to_string() + "\n";
    }
    out += e.name + ": " + to_string(e.ideal) + "\n";
  }
  return out;
}

}  // namespace monoir
