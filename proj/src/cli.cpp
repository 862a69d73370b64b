#include "monoir/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "monoir/asymptotics.hpp"
#include "monoir/decomposition.hpp"
#include "monoir/harness.hpp"
#include "monoir/report_io.hpp"
#include "monoir/socle.hpp"

namespace monoir {

using nlohmann::json;

namespace {

struct Options {
  std::string vars;
  std::string ideal;
  std::string file;
  unsigned max_n = kDefaultMaxN;
  std::string csv;
  bool json = false;
  std::uint64_t seed = 42;
  std::size_t cap = 200000;

  // subcommand specific
  std::string kind = "primary";
  std::string prime;
  bool check = false;
  std::string values;
  std::int64_t start = 1;
  unsigned n = 0;
  std::string suite = "all";
  std::size_t count = 50;
  std::size_t arity = 3;
  std::size_t gens = 4;
  Exponent max_exp = 3;
};

struct Target {
  std::string name;
  MonomialIdeal ideal;
};

std::vector<Target> targets(const Options& o) {
  if (!o.file.empty()) {
    if (!o.ideal.empty()) throw ParseError("--ideal and --file are mutually exclusive");
    std::vector<Target> out;
    for (auto& e : load_corpus(o.file).entries) out.push_back({e.name, std::move(e.ideal)});
    return out;
  }
  if (o.ideal.empty()) throw ParseError("one of --ideal or --file is required");
  if (o.vars.empty()) throw ParseError("--vars is required with --ideal");
  return {{"ideal", parse_ideal(o.ideal, make_ambient(o.vars))}};
}

// Per-target result: JSON value plus its plain text rendering.
struct Result {
  json value;
  std::string text;
};

void emit(const Options& o, const std::vector<Target>& ts, const std::function<Result(const Target&)>& fn,
          std::ostream& out) {
  if (o.file.empty()) {
    const Result r = fn(ts.front());
    out << (o.json ? emit_report_json(r.value) : r.text + "\n");
    return;
  }
  json all = json::object();
  std::string text;
  for (const auto& t : ts) {
    Result r = fn(t);
    text += t.name + ": " + r.text + "\n";
    all[t.name] = std::move(r.value);
  }
  out << (o.json ? emit_report_json(all) : text);
}

std::string join_primes(const std::vector<PrimeSupport>& ps, const VariableSet& vars) {
  std::string s;
  for (const auto& p : ps) {
    if (!s.empty()) s += ' ';
    s += to_string(p, vars);
  }
  return s.empty() ? "none" : s;
}

json primes_json(const std::vector<PrimeSupport>& ps, const VariableSet& vars) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(to_json(p, vars));
  return a;
}

std::vector<std::int64_t> parse_values(const std::string& csv) {
  std::vector<std::int64_t> v;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ParseError("malformed value '" + item + "' in --values");
    }
  }
  return v;
}

std::vector<Statement> parse_suite(const std::string& suite) {
  if (suite == "all") return {std::begin(kAllStatements), std::end(kAllStatements)};
  std::vector<Statement> out;
  std::stringstream ss(suite);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_statement(item));
  return out;
}

int run_command(const std::string& cmd, const Options& o, std::ostream& out) {
  const ScanLimits limits{o.cap};

  if (cmd == "parse") {
    if (!o.file.empty()) {
      const auto corpus = load_corpus(o.file);
      if (o.json) {
        json j = json::object();
        for (const auto& e : corpus.entries) j[e.name] = {{"vars", e.ideal.variables().to_string()}, {"ideal", to_string(e.ideal)}};
        out << emit_report_json(j);
      } else {
        out << format_corpus(corpus);
      }
      return kExitOk;
    }
    emit(o, targets(o), [](const Target& t) {
      json gens = json::array();
      for (const auto& g : t.ideal.generators()) gens.push_back(to_string(g, t.ideal.variables()));
      return Result{{{"vars", t.ideal.variables().to_string()}, {"ideal", to_string(t.ideal)}, {"generators", gens}},
                    to_string(t.ideal)};
    }, out);
    return kExitOk;
  }

  if (cmd == "decompose") {
    if (o.kind != "primary" && o.kind != "irreducible") throw ParseError("--kind must be primary or irreducible");
    emit(o, targets(o), [&](const Target& t) {
      json j;
      if (o.kind == "irreducible") {
        j = to_json(irreducible_decomposition(t.ideal, {o.cap}), t.ideal);
      } else {
        j = to_json(canonical_primary_decomposition(t.ideal));
      }
      std::string text;
      for (const auto& c : j["components"]) {
        if (!text.empty()) text += " ∩ ";
        text += "(" + c["ideal"].get<std::string>() + ")";
      }
      return Result{j, text};
    }, out);
    return kExitOk;
  }

  if (cmd == "assoc") {
    emit(o, targets(o), [](const Target& t) {
      const auto& vars = t.ideal.variables();
      const auto ass = associated_primes(t.ideal);
      const auto min = minimal_elements(ass);
      const auto emb = embedded_primes(t.ideal);
      return Result{{{"associated", primes_json(ass, vars)},
                     {"minimal", primes_json(min, vars)},
                     {"embedded", primes_json(emb, vars)}},
                    "associated " + join_primes(ass, vars) + "; embedded " + join_primes(emb, vars)};
    }, out);
    return kExitOk;
  }

  if (cmd == "ir") {
    emit(o, targets(o), [&](const Target& t) {
      const auto value = ir(t.ideal, o.check ? IrCheck::cross_check : IrCheck::none);
      return Result{{{"ideal", to_string(t.ideal)}, {"ir", value}}, std::to_string(value)};
    }, out);
    return kExitOk;
  }

  if (cmd == "socle") {
    emit(o, targets(o), [&](const Target& t) {
      const auto& vars = t.ideal.variables();
      std::vector<PrimeSupport> primes;
      if (o.prime.empty()) {
        primes = associated_primes_by_socle(t.ideal);
      } else {
        primes.push_back(PrimeSupport::parse(o.prime, vars));
      }
      json list = json::array();
      std::string text;
      std::uint64_t total = 0;
      for (const auto& p : primes) {
        const auto dim = socle_dimension_at(t.ideal, p);
        total += dim;
        list.push_back({{"prime", to_json(p, vars)}, {"dimension", dim}});
        if (!text.empty()) text += ' ';
        text += to_string(p, vars) + "=" + std::to_string(dim);
      }
      return Result{{{"ideal", to_string(t.ideal)}, {"socle", list}, {"total", total}}, text};
    }, out);
    return kExitOk;
  }

  if (cmd == "scan") {
    const auto ts = targets(o);
    if (ts.size() != 1) throw ParseError("scan takes a single ideal");
    const auto report = ir_polynomial(ts.front().ideal, o.max_n, limits);
    if (!o.csv.empty()) {
      std::ofstream f(o.csv);
      if (!f) throw ParseError("cannot write " + o.csv);
      f << scan_csv(report);
    }
    out << emit_report_json(to_json(report));
    return kExitOk;
  }

  if (cmd == "fit") {
    const auto values = parse_values(o.values);
    const auto fit = fit_polynomial(values, o.start);
    if (!fit) throw NotStabilized("no polynomial certified over the given values");
    out << (o.json ? emit_report_json(to_json(*fit)) : fit->polynomial.to_string() + "\n");
    return kExitOk;
  }

  if (cmd == "ell") {
    emit(o, targets(o), [&](const Target& t) {
      const auto ell = analytic_spread(t.ideal, o.max_n, limits);
      return Result{{{"ideal", to_string(t.ideal)}, {"analytic_spread", ell}}, std::to_string(ell)};
    }, out);
    return kExitOk;
  }

  if (cmd == "bight") {
    emit(o, targets(o), [](const Target& t) {
      const auto b = bight(t.ideal);
      return Result{{{"ideal", to_string(t.ideal)}, {"bight", b}}, std::to_string(b)};
    }, out);
    return kExitOk;
  }

  if (cmd == "symbolic") {
    if (o.n > 0) {
      emit(o, targets(o), [&](const Target& t) {
        const auto sp = symbolic_power(t.ideal, o.n);
        return Result{{{"ideal", to_string(t.ideal)}, {"n", o.n}, {"symbolic_power", to_string(sp)}}, to_string(sp)};
      }, out);
      return kExitOk;
    }
    const auto ts = targets(o);
    if (ts.size() != 1) throw ParseError("symbolic scans take a single ideal");
    const auto report = symbolic_ir_polynomial(ts.front().ideal, o.max_n);
    if (!o.csv.empty()) {
      std::ofstream f(o.csv);
      if (!f) throw ParseError("cannot write " + o.csv);
      f << scan_csv(report);
    }
    out << emit_report_json(to_json(report));
    return kExitOk;
  }

  if (cmd == "verify") {
    const auto statements = parse_suite(o.suite);
    HarnessOptions hopts;
    hopts.seed = o.seed;
    hopts.scan_n_max = std::max(o.max_n, 4u);
    std::vector<VerificationReport> reports;
    if (!o.file.empty()) {
      for (const auto& t : targets(o)) {
        for (auto s : statements) reports.push_back(verify(s, t.ideal, t.name, hopts));
      }
    } else {
      const CorpusSpec spec{o.seed, o.arity, o.gens, o.max_exp, o.count};
      reports = run_suite(spec, statements, hopts);
    }
    out << emit_report_json(suite_json(reports));
    const bool failed = std::any_of(reports.begin(), reports.end(),
                                    [](const VerificationReport& r) { return r.result == Outcome::fail; });
    return failed ? kExitVerificationFailure : kExitOk;
  }

  if (cmd == "gen-random") {
    const CorpusSpec spec{o.seed, o.arity, o.gens, o.max_exp, o.count};
    const auto ideals = random_monomial_ideal(spec);
    CorpusFile corpus{ideals.empty() ? make_ambient(VariableSet::indexed("x", o.arity).to_string())
                                     : ideals.front().ambient(),
                      {}};
    for (std::size_t i = 0; i < ideals.size(); ++i) corpus.entries.push_back({"r" + std::to_string(i), ideals[i]});
    if (o.json) {
      json j = json::array();
      for (const auto& e : corpus.entries) j.push_back({{"name", e.name}, {"ideal", to_string(e.ideal)}});
      out << emit_report_json({{"vars", corpus.ambient->to_string()}, {"ideals", j}});
    } else {
      out << format_corpus(corpus);
    }
    return kExitOk;
  }

  throw ParseError("unknown subcommand " + cmd);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Index of reducibility and decompositions of monomial ideals", "monoir"};
  app.require_subcommand(1);
  Options o;

  auto add_ideal_flags = [&](CLI::App* sub) {
    sub->add_option("--vars", o.vars, "Comma separated variable names");
    sub->add_option("--ideal", o.ideal, "Ideal text, e.g. \"x^2, x*y\"");
    sub->add_option("--file", o.file, "Corpus file");
    sub->add_flag("--json", o.json, "Emit JSON");
    sub->add_option("--cap", o.cap, "Generator / subproblem cap");
  };
  auto add_corpus_flags = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Corpus seed");
    sub->add_option("--count", o.count, "Number of random ideals");
    sub->add_option("--arity", o.arity, "Variables per random ideal");
    sub->add_option("--gens", o.gens, "Generators drawn per random ideal");
    sub->add_option("--max-exp", o.max_exp, "Largest exponent drawn");
  };

  std::map<std::string, CLI::App*> subs;
  for (const char* name : {"parse", "decompose", "assoc", "ir", "socle", "scan", "fit", "ell", "bight", "symbolic",
                           "verify", "gen-random"}) {
    subs[name] = app.add_subcommand(name);
  }
  subs["parse"]->description("Print the canonical minimal generating set");
  subs["decompose"]->description("Irredundant primary or irreducible decomposition");
  subs["assoc"]->description("Associated, minimal and embedded primes");
  subs["ir"]->description("Index of reducibility");
  subs["socle"]->description("Socle dimensions at monomial primes");
  subs["scan"]->description("ir(I^n) and mu(I^n) with fitted polynomials and degree bounds");
  subs["fit"]->description("Exact polynomial fit of an integer sequence");
  subs["ell"]->description("Analytic spread from the growth of mu(I^n)");
  subs["bight"]->description("Big height");
  subs["symbolic"]->description("Symbolic power I^(n), or a scan of ir(I^(n))");
  subs["verify"]->description("Run the verification suite");
  subs["gen-random"]->description("Emit a seeded random corpus");

  for (const char* name : {"parse", "decompose", "assoc", "ir", "socle", "scan", "ell", "bight", "symbolic"}) {
    add_ideal_flags(subs[name]);
  }
  subs["decompose"]->add_option("--kind", o.kind, "primary | irreducible");
  subs["socle"]->add_option("--prime", o.prime, "Prime as a variable list, e.g. x,y");
  subs["ir"]->add_flag("--check", o.check, "Also count components and compare");
  for (const char* name : {"scan", "ell", "symbolic", "verify"}) {
    subs[name]->add_option("--max-n", o.max_n, "Largest power scanned");
  }
  for (const char* name : {"scan", "symbolic"}) subs[name]->add_option("--csv", o.csv, "Write n,ir,mu rows");
  subs["symbolic"]->add_option("--n", o.n, "Compute I^(n) only");
  subs["fit"]->add_option("--values", o.values, "Comma separated integers")->required();
  subs["fit"]->add_option("--start", o.start, "Argument of the first value");
  subs["fit"]->add_flag("--json", o.json, "Emit JSON");
  subs["verify"]->add_option("--suite", o.suite, "all or a comma separated list of statement ids");
  subs["verify"]->add_option("--file", o.file, "Verify the ideals of a corpus file instead");
  subs["verify"]->add_option("--cap", o.cap, "Generator cap");
  add_corpus_flags(subs["verify"]);
  add_corpus_flags(subs["gen-random"]);
  subs["gen-random"]->add_flag("--json", o.json, "Emit JSON");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return run_command(cmd, o, out);
  } catch (const ResourceCapExceeded& e) {
    err << "monoir: resource cap: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const NotStabilized& e) {
    err << "monoir: not stabilized: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const Error& e) {
    err << "monoir: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace monoir
