#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>

#include "cmeadow/evaluator.hpp"
#include "cmeadow/events.hpp"
#include "cmeadow/flattener.hpp"
#include "cmeadow/measures.hpp"
#include "cmeadow/oracle.hpp"

using namespace cmeadow;

namespace {

constexpr int kOk = 0;
constexpr int kSuiteFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string mode = "bot";
  std::string carrier = "approx";
  std::string term;
  std::vector<std::string> bindings;
  std::vector<std::string> functions;
  std::string variant = "direct";
  std::string p_path;
  std::string q_path;
  std::string suite;
  std::uint64_t seed = 1;
  std::size_t count = 1000;
  int depth = 4;
  double tolerance = oracle::kDefaultTolerance;
  unsigned threads = 0;
  bool verbose = false;
};

Mode parse_mode(const std::string& s) {
  if (s == "bot") return Mode::Bottom;
  if (s == "signed") return Mode::Signed;
  if (s == "suppes") return Mode::SuppesOno;
  throw UsageError("unknown mode: " + s);
}

Carrier parse_carrier(const std::string& s) {
  if (s == "exact") return Carrier::Exact;
  if (s == "approx") return Carrier::Approx;
  throw UsageError("unknown carrier: " + s);
}

std::pair<std::string, std::string> split_binding(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == text.size())
    throw UsageError("expected name=value, got '" + text + "'");
  return {text.substr(0, eq), text.substr(eq + 1)};
}

Environment build_environment(const Options& o) {
  Environment env;
  std::optional<std::vector<std::string>> labels;
  for (const auto& b : o.bindings) {
    auto [name, value] = split_binding(b);
    env.bind(name, parse_exact_value(value));
  }
  for (const auto& f : o.functions) {
    auto [name, path] = split_binding(f);
    Pmf p = load_pmf(path);
    std::map<std::string, ExactValue> table;
    for (const auto& [label, w] : p.entries()) table[label] = ExactValue::ordinary(w);
    if (labels && *labels != p.labels()) throw UsageError("function files disagree on their labels");
    labels = p.labels();
    env.bind_function(name, std::move(table));
  }
  if (labels) env.declare_labels(*labels);
  return env;
}

MeasureVariant parse_measure_variant(const std::string& s) {
  auto v = parse_variant(s);
  if (!v) throw UsageError("unknown variant: " + s);
  return *v;
}

int run_eval(const Options& o) {
  Term t = parse(o.term);
  std::cout << eval(t, build_environment(o), parse_mode(o.mode), parse_carrier(o.carrier)).to_string() << "\n";
  return kOk;
}

int run_flatten(const Options& o) {
  if (parse_mode(o.mode) != Mode::Bottom) throw UsageError("flatten is only defined in bot mode");
  FlatFracterm f = flatten(parse(o.term));
  std::cout << "(" << print(f.numerator) << ") / (" << print(f.denominator) << ")\n";
  return kOk;
}

int run_measure(const std::string& command, const Options& o) {
  Mode mode = parse_mode(o.mode);
  Carrier carrier = parse_carrier(o.carrier);
  MeasureVariant variant = parse_measure_variant(o.variant);
  Pmf p = load_pmf(o.p_path);
  std::optional<Pmf> q;
  if (command != "entropy") q = load_pmf(o.q_path);
  if (q) require_same_labels(p, *q);

  MeadowValue result = [&] {
    if (variant == MeasureVariant::Direct) {
      if (command == "entropy") return entropy(p, carrier, mode);
      if (command == "crossentropy") return cross_entropy(p, *q, carrier, mode);
      if (command == "kl") return kl_divergence(p, *q, carrier, mode);
      return js_divergence(p, *q, carrier, mode);
    }
    Term t = [&] {
      if (command == "entropy") return build_entropy_term(p.size(), variant);
      if (command == "crossentropy") return build_cross_entropy_term(p.size(), variant);
      throw UsageError(command + " has no builder variants; use --variant direct");
    }();
    return eval(t, measure_environment(p, q ? &*q : nullptr), mode, carrier);
  }();
  std::cout << result.to_string() << "\n";
  return kOk;
}

int run_bayes(const Options& o) {
  EventSpace space(load_pmf(o.p_path));
  BayesReport r = bayes_check(space);
  std::cout << "pairs " << r.pairs << "\n"
            << "guarded pairs " << r.guarded_pairs << "\n"
            << "guarded failures " << r.guarded_failures.size() << "\n"
            << "unguarded differences " << r.unguarded_differences.size() << "\n";
  auto show = [&](const char* tag, const BayesPair& d) {
    std::cout << tag << " A=" << space.describe(d.a) << " B=" << space.describe(d.b) << " lhs=" << format_value(d.lhs)
              << " rhs=" << format_value(d.rhs) << "\n";
  };
  for (const auto& d : r.guarded_failures) show("FAIL", d);
  if (!r.unguarded_differences.empty()) show("example", r.unguarded_differences.front());
  return r.ok() ? kOk : kSuiteFailure;
}

int run_check(const Options& o) {
  oracle::SuiteOptions opts;
  opts.seed = o.seed;
  opts.random_term_count = o.count;
  opts.random_term_depth = o.depth;
  opts.tolerance = o.tolerance;
  opts.threads = o.threads;
  auto start = std::chrono::steady_clock::now();
  auto verdicts = oracle::run_suite(o.suite, opts);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::size_t failures = 0;
  for (const auto& v : verdicts) {
    failures += !v.pass;
    if (!v.pass || o.verbose) std::cout << oracle::describe(v) << "\n";
  }
  char summary[128];
  std::snprintf(summary, sizeof summary, "%zu checks, %zu failed (%.2fs)", verdicts.size(), failures, secs);
  std::cout << o.suite << ": " << summary << "\n";
  return failures ? kSuiteFailure : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetic in common meadows with totalized log2, information measures and identity checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--mode", o.mode, "bot, signed or suppes")->check(CLI::IsMember({"bot", "signed", "suppes"}));
  app.add_option("--carrier", o.carrier, "exact or approx")->check(CLI::IsMember({"exact", "approx"}));

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a term");
  eval_cmd->add_option("term", o.term, "term text")->required();
  eval_cmd->add_option("--bind,-b", o.bindings, "variable binding name=value");
  eval_cmd->add_option("--fun,-f", o.functions, "function binding name=pmf.tsv");

  auto* flatten_cmd = app.add_subcommand("flatten", "Rewrite a term into a flat fracterm");
  flatten_cmd->add_option("term", o.term, "term text")->required();

  std::vector<std::pair<std::string, CLI::App*>> measures;
  for (const char* name : {"entropy", "crossentropy", "kl", "js"}) {
    auto* cmd = app.add_subcommand(name, std::string("Compute ") + name + " from TSV Pmf files");
    cmd->add_option("p", o.p_path, "Pmf file")->required()->check(CLI::ExistingFile);
    if (std::string(name) != "entropy") cmd->add_option("q", o.q_path, "second Pmf file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--variant", o.variant, "direct, seqmul, seqmul-div, composite-f, sign-chain or f-xy");
    measures.emplace_back(name, cmd);
  }

  auto* bayes_cmd = app.add_subcommand("bayes", "Check the guarded Bayes-Price identity on every event pair");
  bayes_cmd->add_option("p", o.p_path, "Pmf file")->required()->check(CLI::ExistingFile);

  auto* check_cmd = app.add_subcommand("check", "Run an identity suite");
  std::string suites = "all";
  for (const auto& s : oracle::suite_names()) suites += ", " + s;
  check_cmd->add_option("suite", o.suite, suites)->required();
  check_cmd->add_option("--seed", o.seed, "random term seed");
  check_cmd->add_option("--count", o.count, "number of random terms");
  check_cmd->add_option("--depth", o.depth, "maximum random term depth");
  check_cmd->add_option("--tolerance", o.tolerance, "relative tolerance on the approx carrier");
  check_cmd->add_option("--threads", o.threads, "worker threads, 0 for all cores");
  check_cmd->add_flag("--verbose,-v", o.verbose, "print passing checks too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (eval_cmd->parsed()) return run_eval(o);
    if (flatten_cmd->parsed()) return run_flatten(o);
    for (const auto& [name, cmd] : measures)
      if (cmd->parsed()) return run_measure(name, o);
    if (bayes_cmd->parsed()) return run_bayes(o);
    if (check_cmd->parsed()) return run_check(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
