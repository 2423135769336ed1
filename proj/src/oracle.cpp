#include "cmeadow/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <thread>

#include "cmeadow/evaluator.hpp"
#include "cmeadow/events.hpp"
#include "cmeadow/flattener.hpp"
#include "cmeadow/measures.hpp"

namespace cmeadow::oracle {

Grid Grid::standard() {
  Grid g;
  g.values.push_back(ExactValue::bottom());
  for (const char* v : {"-2", "-1", "-1/2", "0", "1/2", "1", "2"}) g.values.push_back(parse_exact_value(v));
  return g;
}

Grid Grid::ordinary() {
  Grid g = standard();
  g.values.erase(g.values.begin());
  return g;
}

void Grid::validate() const {
  bool bottom = false, zero = false, pos = false, negative = false;
  for (const auto& v : values) {
    bottom |= v.is_bottom();
    zero |= v.is_zero();
    pos |= v.is_ordinary() && sgn(v.number()) > 0;
    negative |= v.is_ordinary() && sgn(v.number()) < 0;
  }
  if (!(bottom && zero && pos && negative))
    throw Error("grid must contain bot, 0, a positive and a negative value");
}

std::string describe(const Assignment& a) {
  std::string out;
  for (const auto& [name, v] : a) {
    if (!out.empty()) out += ", ";
    out += name + "=" + format_value(v);
  }
  return out.empty() ? "(no variables)" : out;
}

std::string describe(const Verdict& v) {
  std::string out = (v.pass ? "PASS " : "FAIL ") + v.name + " [" + std::to_string(v.checked) + " checks]";
  if (v.counterexample)
    out += " counterexample: " + describe(v.counterexample->assignment) + " lhs=" + v.counterexample->lhs +
           " rhs=" + v.counterexample->rhs;
  if (!v.detail.empty()) out += " (" + v.detail + ")";
  return out;
}

namespace {

/// Calls f(assignment) for every point of grid^vars, in odometer order.
template <typename F>
void for_each_assignment(const std::vector<std::string>& vars, const Grid& grid, F&& f) {
  std::vector<std::size_t> idx(vars.size(), 0);
  Assignment a(vars.size());
  for (;;) {
    for (std::size_t i = 0; i < vars.size(); ++i) a[i] = {vars[i], grid.values[idx[i]]};
    if (!f(a)) return;
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == grid.values.size()) idx[k++] = 0;
    if (k == idx.size()) return;
  }
}

constexpr const char* kInexactTag = "inexact: ";

}  // namespace

Verdict equiv(const Term& lhs, const Term& rhs, const std::vector<std::string>& vars, const Grid& grid, Mode mode,
              Carrier carrier, double tolerance, std::string name) {
  Verdict v;
  v.name = name.empty() ? print(lhs) + " = " + print(rhs) : std::move(name);
  double tol = carrier == Carrier::Exact ? 0.0 : tolerance;
  Environment env;
  for_each_assignment(vars, grid, [&](const Assignment& a) {
    for (const auto& [n, val] : a) env.bind(n, val);
    ++v.checked;
    try {
      MeadowValue l = eval(lhs, env, mode, carrier);
      MeadowValue r = eval(rhs, env, mode, carrier);
      if (values_agree(l, r, tol)) return true;
      v.pass = false;
      v.counterexample = Counterexample{a, l.to_string(), r.to_string()};
    } catch (const InexactError& e) {
      v.pass = false;
      v.counterexample = Counterexample{a, "error", "error"};
      v.detail = std::string(kInexactTag) + e.what();
    } catch (const Error& e) {
      v.pass = false;
      v.counterexample = Counterexample{a, "error", "error"};
      v.detail = e.what();
    }
    return false;
  });
  return v;
}

// ---------------------------------------------------------------------------
// Random terms

Signature Signature::full_bottom() {
  Signature s;
  s.ops = {Op::Add, Op::Neg, Op::Mul, Op::Div, Op::Log2, Op::Cond, Op::SeqMul, Op::Sign};
  return s;
}

Signature Signature::field() {
  Signature s;
  s.ops = {Op::Add, Op::Neg, Op::Mul, Op::Div};
  return s;
}

bool conforms(const Term& t, const Signature& sig) {
  switch (t.op()) {
    case Op::Var:
      return std::find(sig.variables.begin(), sig.variables.end(), t.node().name) != sig.variables.end();
    case Op::Const:
      if (t.node().constant.is_infinite()) return false;
      return sig.bottom_literal || !t.node().constant.is_bottom();
    case Op::FunApp: return false;
    default: break;
  }
  if (!sig.ops.count(t.op())) return false;
  return std::all_of(t.args().begin(), t.args().end(), [&](const Term& a) { return conforms(a, sig); });
}

namespace {

class TermGenerator {
 public:
  TermGenerator(std::uint64_t seed, const Signature& sig) : rng_(seed), sig_(sig), ops_(sig.ops.begin(), sig.ops.end()) {
    if (ops_.empty() && sig_.variables.empty()) throw Error("empty signature");
    if (sig_.variables.size() > 3) throw Error("generated terms use at most 3 variables");
  }

  Term generate(int depth, bool root) {
    bool leaf = depth <= 0 || ops_.empty() || (!root && pick(4) == 0);
    if (leaf) return make_leaf();
    Op op = ops_[pick(ops_.size())];
    auto sub = [&] { return generate(depth - 1, false); };
    switch (op) {
      case Op::Neg: return Term::neg(sub());
      case Op::Log2: return Term::log2(sub());
      case Op::Sign: return Term::sign(sub());
      case Op::Cond: {
        Term x = sub();
        Term y = sub();
        return Term::cond(x, y, sub());
      }
      default: break;
    }
    Term l = sub();
    Term r = sub();
    switch (op) {
      case Op::Add: return Term::add(l, r);
      case Op::Mul: return Term::mul(l, r);
      case Op::Div: return Term::div(l, r);
      case Op::SeqMul: return Term::seqmul(l, r);
      default: throw Error("operator cannot be generated: " + std::string(op_name(op)));
    }
  }

 private:
  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

  Term make_leaf() {
    if (!sig_.variables.empty() && pick(2) == 0) return Term::var(sig_.variables[pick(sig_.variables.size())]);
    static const char* constants[] = {"0", "1", "2", "1/2"};
    std::size_t n = std::size(constants) + (sig_.bottom_literal ? 1 : 0);
    std::size_t k = pick(n);
    if (k == std::size(constants)) return Term::bottom();
    return Term::constant(parse_exact_value(constants[k]));
  }

  std::mt19937_64 rng_;
  const Signature& sig_;
  std::vector<Op> ops_;
};

}  // namespace

std::vector<Term> random_terms(std::uint64_t seed, int max_depth, const Signature& sig, std::size_t count) {
  TermGenerator gen(seed, sig);
  std::vector<Term> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen.generate(max_depth, true));
  return out;
}

// ---------------------------------------------------------------------------
// Suites

namespace {

using Suite = std::vector<Verdict>;

std::vector<std::string> vars_of(const Term& a, const Term& b) {
  auto s = free_variables(a);
  auto t = free_variables(b);
  s.insert(t.begin(), t.end());
  return {s.begin(), s.end()};
}

/// EXACT when every log2 argument is a power of two, APPROX otherwise.
Verdict equiv_best(const Term& lhs, const Term& rhs, const Grid& grid, double tol, std::string name,
                   Mode mode = Mode::Bottom) {
  auto vars = vars_of(lhs, rhs);
  Verdict v = equiv(lhs, rhs, vars, grid, mode, Carrier::Exact, tol, name);
  if (!v.pass && v.detail.rfind(kInexactTag, 0) == 0) {
    v = equiv(lhs, rhs, vars, grid, mode, Carrier::Approx, tol, name);
    v.detail = v.detail.empty() ? "approximate carrier" : v.detail;
  }
  return v;
}

Verdict equiv_text(const std::string& lhs, const std::string& rhs, const Grid& grid, double tol,
                   Mode mode = Mode::Bottom) {
  return equiv_best(parse(lhs), parse(rhs), grid, tol, lhs + " = " + rhs, mode);
}

/// Passes when the two terms differ somewhere on the grid.
Verdict must_differ(const std::string& lhs, const std::string& rhs, const Grid& grid, Mode mode = Mode::Bottom) {
  Term l = parse(lhs), r = parse(rhs);
  Verdict v = equiv(l, r, vars_of(l, r), grid, mode, Carrier::Exact, 0.0, lhs + " != " + rhs);
  v.pass = !v.pass;
  return v;
}

/// Closed term evaluates to the expected textual value.
Verdict point(const std::string& text, const std::string& expected, Mode mode = Mode::Bottom,
              Carrier carrier = Carrier::Exact) {
  Verdict v;
  v.name = text + " -> " + expected;
  v.checked = 1;
  try {
    std::string got = eval(parse(text), Environment{}, mode, carrier).to_string();
    v.pass = got == expected;
    if (!v.pass) v.counterexample = Counterexample{{}, got, expected};
  } catch (const Error& e) {
    v.pass = false;
    v.detail = e.what();
  }
  return v;
}

Verdict check(std::string name, bool ok, std::string detail = {}) {
  Verdict v;
  v.name = std::move(name);
  v.pass = ok;
  v.checked = 1;
  if (!ok) v.detail = std::move(detail);
  return v;
}

/// Accumulates a many-case check into one verdict.
struct Tally {
  Verdict v;
  explicit Tally(std::string name) { v.name = std::move(name); }
  void expect(bool ok, const std::function<std::string()>& what) {
    ++v.checked;
    if (ok || !v.pass) {
      if (!ok) v.pass = false;
      return;
    }
    v.pass = false;
    v.detail = what();
  }
};

// -- absorption -------------------------------------------------------------

Suite absorption_suite() {
  Suite out;
  Grid g = Grid::standard();
  auto unary = [&](const char* name, auto op) {
    Tally t(std::string("absorption ") + name);
    for (const auto& x : g.values) {
      if (!x.is_bottom()) continue;
      auto r = op(x, Mode::Bottom);
      t.expect(r.is_bottom(), [&] { return std::string(name) + "(bot) = " + format_value(r); });
    }
    out.push_back(t.v);
  };
  auto binary = [&](const char* name, auto op) {
    Tally t(std::string("absorption ") + name);
    for (const auto& x : g.values)
      for (const auto& y : g.values) {
        if (!x.is_bottom() && !y.is_bottom()) continue;
        auto r = op(x, y, Mode::Bottom);
        t.expect(r.is_bottom(), [&] {
          return std::string(name) + "(" + format_value(x) + ", " + format_value(y) + ") = " + format_value(r);
        });
      }
    out.push_back(t.v);
  };
  binary("add", [](const auto& a, const auto& b, Mode m) { return add(a, b, m); });
  unary("neg", [](const auto& a, Mode m) { return neg(a, m); });
  binary("mul", [](const auto& a, const auto& b, Mode m) { return mul(a, b, m); });
  binary("div", [](const auto& a, const auto& b, Mode m) { return div(a, b, m); });
  unary("log2", [](const auto& a, Mode m) { return log2(a, m); });
  unary("sign", [](const auto& a, Mode m) { return sign(a, m); });
  out.push_back(point("1/0", "bot"));
  out.push_back(point("1/0 + 5", "bot"));
  out.push_back(point("log2(-1)", "bot"));
  out.push_back(point("log2(0)", "bot"));
  out.push_back(point("0 * bot", "bot"));
  return out;
}

// -- conditional ------------------------------------------------------------

Suite conditional_suite() {
  Suite out;
  Grid g = Grid::standard();
  Term cond_term = parse("cond(x; y; z)");
  Term seq_term = parse("x |*| y");
  Tally table("cond three-case table");
  Tally seq("seqmul table");
  Environment env;
  for (const auto& x : g.values)
    for (const auto& y : g.values)
      for (const auto& z : g.values) {
        env.bind("x", x).bind("y", y).bind("z", z);
        ExactValue expected = y.is_bottom() ? ExactValue::bottom() : y.is_zero() ? z : x;
        ExactValue got = evaluate<Rational>(cond_term, env, Mode::Bottom);
        table.expect(got == expected, [&] {
          return "cond(" + format_value(x) + "; " + format_value(y) + "; " + format_value(z) + ") = " +
                 format_value(got) + ", expected " + format_value(expected);
        });
      }
  for (const auto& x : g.values)
    for (const auto& y : g.values) {
      env.bind("x", x).bind("y", y);
      ExactValue expected = x.is_bottom()                  ? ExactValue::bottom()
                            : x.is_zero()                  ? ExactValue::ordinary(0)
                            : y.is_bottom()                ? ExactValue::bottom()
                                                           : ExactValue::ordinary(x.number() * y.number());
      ExactValue got = evaluate<Rational>(seq_term, env, Mode::Bottom);
      seq.expect(got == expected, [&] {
        return format_value(x) + " |*| " + format_value(y) + " = " + format_value(got);
      });
    }
  out.push_back(table.v);
  out.push_back(seq.v);
  out.push_back(equiv_text("x |*| y", "cond(x * y; x; 0)", g, 0.0));
  out.push_back(point("cond(bot; 0; 1)", "1"));
  out.push_back(point("cond(5; 2; 9)", "5"));
  out.push_back(point("cond(5; bot; 9)", "bot"));
  out.push_back(point("0 |*| bot", "0"));
  out.push_back(point("2 |*| 3", "6"));
  out.push_back(point("bot |*| 5", "bot"));
  return out;
}

// -- interdefinability ------------------------------------------------------

Suite interdefinability_suite() {
  Suite out;
  Grid g = Grid::standard();
  out.push_back(equiv_text("s(x) * s(x)", "x |*| (1/x)", g, 0.0));
  out.push_back(equiv_text("cond(x; y; z)", "s(y) * s(y) |*| x + (1 - s(y) * s(y)) |*| z", g, 0.0));
  Verdict d = must_differ("x |*| y", "x * y", g);
  if (d.pass && d.counterexample) d.detail = "first difference: " + describe(d.counterexample->assignment);
  out.push_back(d);
  out.push_back(point("s(-3)", "-1"));
  out.push_back(point("s(bot)", "bot"));
  return out;
}

// -- log2 of a quotient ----------------------------------------------------

const char* kLogQuotientRhs = "(log2(x * x) - log2(y * y))/(2 + 0 * log2(x * y))";

Suite log_quotient_suite(double tol) {
  Suite out;
  Grid g = Grid::standard();
  Term l = parse("log2(x/y)");
  Term r = parse(kLogQuotientRhs);
  out.push_back(equiv(l, r, {"x", "y"}, g, Mode::Bottom, Carrier::Approx, tol, "log2 quotient identity (approximate)"));
  out.push_back(equiv(l, r, {"x", "y"}, g, Mode::Bottom, Carrier::Exact, 0.0, "log2 quotient identity (exact)"));
  out.push_back(check("flattener log2 rule has the quotient-identity form",
                      combine::log2({Term::var("x"), Term::var("y")}).to_term() == r));
  return out;
}

// -- rewrite rules ----------------------------------------------------------

Suite rules_suite(double tol) {
  Suite out;
  Grid g = Grid::standard();
  for (const auto& rule : rewrite_rules()) {
    out.push_back(equiv_best(rule.lhs, rule.rhs, g, tol, "rule " + rule.name + ": " + print(rule.lhs) +
                                                             " => " + print(rule.rhs)));
  }
  // The rules used are the published identities, verbatim up to syntax.
  std::map<std::string, std::string> published{
      {"cond-left", "cond(x; y; z)/cond(x1; y; 1)"},
      {"cond-test", "cond(x; y; z) * y1/y1"},
      {"cond-right", "cond(x; y; z)/cond(1; y; z1)"},
      {"seqmul-left", "(x |*| y)/x1"},
      {"seqmul-right", "x * x * x |*| (y * (y1 + 1 - s(x) * s(x)))/((x |*| y1) * (x |*| y1) + 1 - s(x) * s(x))"},
      {"log2", kLogQuotientRhs},
      {"sign-squared", "s(x) * s(x)/(s(y) * s(y))"},
      {"bot", "1/0"},
      {"leaf", "x/1"},
  };
  for (const auto& rule : rewrite_rules()) {
    auto it = published.find(rule.name);
    if (it == published.end()) continue;
    out.push_back(check("rule " + rule.name + " matches " + it->second, rule.rhs == parse(it->second),
                        "built " + print(rule.rhs)));
  }
  return out;
}

// -- flattening soundness ---------------------------------------------------

struct TermCheck {
  bool shape = true;
  bool reflatten = true;
  Verdict sound;
};

TermCheck check_flattening(const Term& t, const Grid& grid, double tol) {
  TermCheck c;
  FlatFracterm f = flatten(t);
  Term flat = f.to_term();
  c.shape = is_flat_fracterm(flat) && count_op(flat, Op::Div) == 1;
  Term reparsed = parse(print(flat));
  c.reflatten = reparsed == flat && is_flat_fracterm(flatten(reparsed).to_term());
  Carrier carrier = contains_op(t, Op::Log2) ? Carrier::Approx : Carrier::Exact;
  c.sound = equiv(t, flat, vars_of(t, flat), grid, Mode::Bottom, carrier, tol, print(t));
  return c;
}

template <typename F>
void parallel_for(std::size_t n, unsigned threads, F&& f) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += threads) f(i);
    });
  for (auto& th : pool) th.join();
}

Suite flattening_suite(const SuiteOptions& opt) {
  Suite out = rules_suite(opt.tolerance);
  bool rules_ok = std::all_of(out.begin(), out.end(), [](const Verdict& v) { return v.pass; });
  if (!rules_ok) {
    out.push_back(check("flattening soundness", false, "skipped: rule-level validation failed"));
    return out;
  }
  Grid g = Grid::standard();
  auto terms = random_terms(opt.seed, opt.random_term_depth, Signature::full_bottom(), opt.random_term_count);
  std::vector<TermCheck> results(terms.size());
  std::vector<std::string> errors(terms.size());
  parallel_for(terms.size(), opt.threads, [&](std::size_t i) {
    try {
      results[i] = check_flattening(terms[i], g, opt.tolerance);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  Verdict shape, sound;
  shape.name = "flattened shape: one division at the root, no bot literal, stable under reparse";
  sound.name = "flattening soundness on " + std::to_string(terms.size()) + " random terms (seed " +
               std::to_string(opt.seed) + ", depth <= " + std::to_string(opt.random_term_depth) + ")";
  std::size_t mismatches = 0, assignments = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    ++shape.checked;
    ++sound.checked;
    if (!errors[i].empty()) {
      ++mismatches;
      if (sound.pass) sound.detail = print(terms[i]) + ": " + errors[i];
      sound.pass = false;
      continue;
    }
    const auto& r = results[i];
    assignments += r.sound.checked;
    if ((!r.shape || !r.reflatten) && shape.pass) {
      shape.pass = false;
      shape.detail = "term " + print(terms[i]);
    }
    if (!r.sound.pass) {
      ++mismatches;
      if (sound.pass) {
        sound.counterexample = r.sound.counterexample;
        sound.detail = "term " + print(terms[i]) + (r.sound.detail.empty() ? "" : "; " + r.sound.detail);
      }
      sound.pass = false;
    }
  }
  std::string summary = std::to_string(mismatches) + " mismatching terms, " + std::to_string(assignments) +
                        " assignments evaluated";
  sound.detail = sound.detail.empty() ? summary : summary + "; first: " + sound.detail;
  out.push_back(shape);
  out.push_back(sound);
  return out;
}

// -- signed infinities ------------------------------------------------------

Suite signed_suite() {
  Suite out;
  const Mode m = Mode::Signed;
  out.push_back(point("+inf + +inf", "+inf", m));
  out.push_back(point("+inf * +inf", "+inf", m));
  out.push_back(point("+inf + -inf", "bot", m));
  out.push_back(point("0 * +inf", "0", m));
  out.push_back(point("s(+inf)", "1", m));
  out.push_back(point("s(-inf)", "-1", m));
  out.push_back(point("-(+inf)", "-inf", m));
  out.push_back(point("log2(0)", "-inf", m));
  out.push_back(point("log2(-1)", "bot", m));
  out.push_back(point("log2(8)", "3", m));
  out.push_back(point("log2(1/0)", "bot", m));
  out.push_back(point("cond(5; +inf; 9)", "5", m));

  Grid g = Grid::standard();
  g.values.push_back(ExactValue::pos_inf());
  g.values.push_back(ExactValue::neg_inf());
  Tally quotient("x / +inf = bot"), sum("a + +inf = +inf for real a"), pos("+inf * a = +inf for real a > 0"),
      negative("+inf * a = -inf for real a < 0"), comm("+ and * commute");
  for (const auto& x : g.values) {
    quotient.expect(div(x, ExactValue::pos_inf(), m).is_bottom(), [&] { return format_value(x); });
    for (const auto& y : g.values) {
      comm.expect(add(x, y, m) == add(y, x, m) && mul(x, y, m) == mul(y, x, m),
                  [&] { return format_value(x) + ", " + format_value(y); });
    }
    if (!x.is_ordinary()) continue;
    sum.expect(add(x, ExactValue::pos_inf(), m).kind() == Kind::PosInf, [&] { return format_value(x); });
    int s = sgn(x.number());
    if (s > 0) pos.expect(mul(ExactValue::pos_inf(), x, m).kind() == Kind::PosInf, [&] { return format_value(x); });
    if (s < 0)
      negative.expect(mul(ExactValue::pos_inf(), x, m).kind() == Kind::NegInf, [&] { return format_value(x); });
  }
  for (auto* t : {&quotient, &sum, &pos, &negative, &comm}) out.push_back(t->v);

  // Distributivity is lost: inf * (2 - 1) = inf but inf * 2 - inf * 1 = bot.
  Verdict d = point("+inf * (2 - 1)", "+inf", m);
  Verdict e = point("+inf * 2 - +inf * 1", "bot", m);
  out.push_back(d);
  out.push_back(e);
  out.push_back(must_differ("x * (2 - 1)", "x * 2 - x * 1", g, m));
  // The table gives -(1/2) * (-inf) = +inf; a -inf reading contradicts a < 0 => inf * a = -inf.
  out.push_back(point("-(1/2) * -inf", "+inf", m));
  out.push_back(point("-1/2 * -inf", "+inf", m));

  Pmf p = Pmf::from_weights({Rational(1, 2), Rational(1, 2)});
  Pmf q = Pmf::from_weights({Rational(0), Rational(1)});
  MeadowValue h = cross_entropy(p, q, Carrier::Exact, m);
  out.push_back(check("signed cross-entropy of P=(1/2,1/2), Q=(0,1) is +inf", h.kind() == Kind::PosInf,
                      "got " + h.to_string()));
  return out;
}

// -- information measures ---------------------------------------------------

Pmf pmf(std::initializer_list<Rational> w) { return Pmf::from_weights(w); }

bool has_unsupported_mass(const Pmf& p, const Pmf& q) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.weight(i) > 0 && q.weight(i) == 0) return true;
  return false;
}

Suite measures_suite(double tol) {
  Suite out;
  const Carrier A = Carrier::Approx;
  auto agrees = [&](const MeadowValue& a, const MeadowValue& b) { return values_agree(a, b, tol); };

  out.push_back(check("H(1/2,1/2) = 1", entropy(pmf({Rational(1, 2), Rational(1, 2)}), Carrier::Exact).to_string() == "1"));
  out.push_back(check("H(1,0) = 0", entropy(pmf({1, 0}), Carrier::Exact).to_string() == "0"));
  out.push_back(check("H(1/4,1/4,1/4,1/4) = 2",
                      entropy(pmf({Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)}), Carrier::Exact)
                              .to_string() == "2"));

  for (auto variant : {MeasureVariant::SeqMul, MeasureVariant::SeqMulDiv, MeasureVariant::CompositeF,
                       MeasureVariant::SignChain}) {
    Tally t("entropy term " + std::string(to_string(variant)) + " = direct entropy, n = 1..5");
    for (std::size_t n = 1; n <= 5; ++n) {
      Term term = build_entropy_term(n, variant);
      for (const auto& p : enumerate_pmfs(n, 4)) {
        MeadowValue got = eval(term, measure_environment(p), Mode::Bottom, A);
        MeadowValue want = entropy(p, A);
        t.expect(agrees(got, want), [&] { return write_pmf_tsv(p) + " term " + got.to_string() + " direct " + want.to_string(); });
      }
    }
    out.push_back(t.v);
  }

  for (auto variant : {MeasureVariant::SeqMul, MeasureVariant::SeqMulDiv, MeasureVariant::FXY,
                       MeasureVariant::SignChain}) {
    bool ordinary_only = variant == MeasureVariant::SignChain;
    Tally t("cross-entropy term " + std::string(to_string(variant)) + " = direct cross-entropy" +
            (ordinary_only ? " (ordinary cases)" : "") + ", n = 1..4");
    std::size_t bottom_cases = 0, bottom_matches = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
      Term term = build_cross_entropy_term(n, variant);
      auto grid = enumerate_pmfs(n, 4);
      for (const auto& p : grid)
        for (const auto& q : grid) {
          MeadowValue got = eval(term, measure_environment(p, &q), Mode::Bottom, A);
          MeadowValue want = cross_entropy(p, q, A);
          if (ordinary_only && !want.is_ordinary()) {
            ++bottom_cases;
            bottom_matches += got.is_bottom();
            continue;
          }
          t.expect(agrees(got, want), [&] { return "term " + got.to_string() + " direct " + want.to_string(); });
        }
    }
    if (ordinary_only)
      t.v.detail += (t.v.detail.empty() ? "" : "; ") + std::string("bot cases: ") + std::to_string(bottom_matches) +
                    "/" + std::to_string(bottom_cases) + " also bot";
    out.push_back(t.v);
  }

  Tally iff("cross-entropy is bot iff P(x) > 0 and Q(x) = 0 somewhere");
  Tally self("H(P) = H(P,P)");
  Tally kl_self("KL(P||P) = 0");
  Tally kl_decomp("KL(P||Q) = H(P,Q) - H(P), bot together");
  Tally js("JS never bot, symmetric, JS(P,P) = 0");
  Tally kl_term("KL term = direct KL");
  Tally js_term("JS term = direct JS");
  for (std::size_t n = 1; n <= 4; ++n) {
    auto grid = enumerate_pmfs(n, 4);
    Term klt = build_kl_term(n);
    Term jst = build_js_term(n);
    for (const auto& p : grid) {
      self.expect(agrees(entropy(p, A), cross_entropy(p, p, A)), [] { return std::string("mismatch"); });
      kl_self.expect(kl_divergence(p, p, A).to_string() == "0", [] { return std::string("nonzero"); });
      js.expect(js_divergence(p, p, A).to_string() == "0", [] { return std::string("JS(P,P) != 0"); });
      for (const auto& q : grid) {
        MeadowValue h = cross_entropy(p, q, A);
        iff.expect(h.is_bottom() == has_unsupported_mass(p, q), [&] { return "H(P,Q) = " + h.to_string(); });
        MeadowValue kl = kl_divergence(p, q, A);
        if (h.is_ordinary()) {
          double want = h.to_double() - entropy(p, A).to_double();
          kl_decomp.expect(kl.is_ordinary() && values_agree(kl, MeadowValue(ApproxValue::ordinary(want)), tol),
                           [&] { return "KL " + kl.to_string(); });
        } else {
          kl_decomp.expect(kl.is_bottom(), [&] { return "KL " + kl.to_string() + " but H(P,Q) = bot"; });
        }
        MeadowValue pq = js_divergence(p, q, A);
        MeadowValue qp = js_divergence(q, p, A);
        js.expect(pq.is_ordinary() && agrees(pq, qp), [&] { return pq.to_string() + " vs " + qp.to_string(); });
        Environment env = measure_environment(p, &q);
        kl_term.expect(agrees(eval(klt, env, Mode::Bottom, A), kl), [] { return std::string("mismatch"); });
        js_term.expect(agrees(eval(jst, env, Mode::Bottom, A), pq), [] { return std::string("mismatch"); });
      }
    }
  }
  for (auto* t : {&iff, &self, &kl_self, &kl_decomp, &js, &kl_term, &js_term}) out.push_back(t->v);

  Pmf half = pmf({Rational(1, 2), Rational(1, 2)});
  Pmf zero_one = pmf({0, 1});
  out.push_back(check("H(P,Q) = bot for P=(1/2,1/2), Q=(0,1)",
                      cross_entropy(half, zero_one, Carrier::Exact).is_bottom() &&
                          eval(build_cross_entropy_term(2, MeasureVariant::SeqMul),
                               measure_environment(half, &zero_one), Mode::Bottom, Carrier::Exact)
                              .is_bottom()));
  out.push_back(check("JS((1,0),(0,1)) = 2", js_divergence(pmf({1, 0}), zero_one, Carrier::Exact).to_string() == "2"));

  auto f = [](const char* a, const char* b) {
    return std::map<std::string, ExactValue>{{"c1", parse_exact_value(a)}, {"c2", parse_exact_value(b)}};
  };
  out.push_back(check("E_P(F) = bot when F = bot on the support",
                      seq_expected_value(half, f("bot", "3"), Carrier::Exact).is_bottom()));
  out.push_back(check("E_P(F) ignores F off the support",
                      seq_expected_value(zero_one, f("bot", "3"), Carrier::Exact).to_string() == "3"));
  out.push_back(check("E_P(F) is the mean", seq_expected_value(half, f("2", "4"), Carrier::Exact).to_string() == "3"));

  out.push_back(equiv_best(f_xy(Term::var("x"), Term::var("y")), f_xy_sign_form(Term::var("x"), Term::var("y")),
                           Grid::standard(), tol, "f(x,y) equals its s^2 form"));

  Tally perm("measures are invariant under relabelling");
  std::vector<std::size_t> order{0, 1, 2};
  auto grid3 = enumerate_pmfs(3, 4);
  do {
    for (const auto& p : grid3)
      for (const auto& q : grid3) {
        Pmf pp = p.permuted(order);
        Pmf qq = q.permuted(order);
        perm.expect(agrees(entropy(p, A), entropy(pp, A)) && agrees(cross_entropy(p, q, A), cross_entropy(pp, qq, A)) &&
                        agrees(kl_divergence(p, q, A), kl_divergence(pp, qq, A)) &&
                        agrees(js_divergence(p, q, A), js_divergence(pp, qq, A)),
                    [] { return std::string("measure changed under permutation"); });
      }
  } while (std::next_permutation(order.begin(), order.end()));
  out.push_back(perm.v);
  return out;
}

// -- Bayes-Price ------------------------------------------------------------

Suite bayes_suite() {
  Suite out;
  Tally guarded("guarded Bayes-Price on all spaces with <= 4 outcomes (quarter weights)");
  Tally bottom_iff("P(A|B) = bot iff P(B) = 0");
  std::size_t counterexamples = 0;
  bool all_of_expected_shape = true;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& p : enumerate_pmfs(n, 4)) {
      EventSpace space(p);
      BayesReport r = bayes_check(space);
      guarded.v.checked += r.guarded_pairs - 1;
      guarded.expect(r.ok(), [&] {
        const auto& f = r.guarded_failures.front();
        return space.describe(f.a) + " | " + space.describe(f.b) + " in " + write_pmf_tsv(p);
      });
      for (const auto& d : r.unguarded_differences) {
        ++counterexamples;
        all_of_expected_shape &= space.prob(d.a) == 0 && space.prob(d.b) > 0 && d.rhs.is_bottom();
      }
      const std::uint64_t count = space.everything().mask() + 1;
      for (std::uint64_t a = 0; a < count; ++a)
        for (std::uint64_t b = 0; b < count; ++b)
          bottom_iff.expect(space.cond_prob(Event(a), Event(b)).is_bottom() == (space.prob(Event(b)) == 0),
                            [] { return std::string("mismatch"); });
    }
  }
  out.push_back(guarded.v);
  out.push_back(bottom_iff.v);
  out.push_back(check("every unguarded difference has P(A) = 0 and P(B) > 0", all_of_expected_shape));

  EventSpace space(pmf({0, 1}));
  Event a = space.event({"c1"});
  Event b = space.event({"c2"});
  ExactValue lhs = space.cond_prob(a, b);
  ExactValue rhs = space.bayes_rhs(a, b);
  out.push_back(check("counterexample P=(0,1), A={c1}, B={c2}: P(A|B) = 0, rhs = bot",
                      format_value(lhs) == "0" && rhs.is_bottom(),
                      "lhs " + format_value(lhs) + " rhs " + format_value(rhs)));
  out.push_back(check("unguarded counterexamples exist", counterexamples > 0));
  return out;
}

// -- Suppes-Ono comparison --------------------------------------------------

Suite suppes_suite(double tol) {
  Suite out;
  const Mode so = Mode::SuppesOno;
  out.push_back(point("1/0", "0", so));
  out.push_back(point("log2(0)", "0", so));
  out.push_back(point("log2(-2)", "0", so));

  Grid g = Grid::ordinary();
  Tally total("Suppes-Ono operations stay ordinary");
  for (const auto& x : g.values) {
    for (auto r : {neg(x, so), log2(x, so), sign(x, so)}) total.expect(r.is_ordinary(), [] { return std::string("peripheral"); });
    for (const auto& y : g.values)
      for (auto r : {add(x, y, so), mul(x, y, so), div(x, y, so), seqmul(x, y, so)})
        total.expect(r.is_ordinary(), [] { return std::string("peripheral"); });
  }
  out.push_back(total.v);

  Tally same("Suppes-Ono entropy = bottom-mode entropy");
  std::size_t disagreements = 0;
  std::string example;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto grid = enumerate_pmfs(n, 4);
    for (const auto& p : grid) {
      same.expect(values_agree(entropy(p, Carrier::Approx, so), entropy(p, Carrier::Approx), tol),
                  [] { return std::string("mismatch"); });
      for (const auto& q : grid) {
        MeadowValue b = cross_entropy(p, q, Carrier::Approx);
        MeadowValue s = cross_entropy(p, q, Carrier::Approx, so);
        if (b.is_bottom() && s.is_ordinary()) {
          if (!disagreements) example = "P = " + write_pmf_tsv(p) + "Q = " + write_pmf_tsv(q) + "gives " + s.to_string();
          ++disagreements;
        }
      }
    }
  }
  out.push_back(same.v);
  Verdict v = check("Suppes-Ono cross-entropy is ordinary where bottom mode gives bot", disagreements > 0);
  v.checked = disagreements;
  v.detail = std::to_string(disagreements) + " such pairs";
  out.push_back(v);
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"absorption", "conditional", "interdefinability", "log-quotient", "rules",
                                              "flattening", "signed",      "measures",          "bayes",   "suppes"};
  return names;
}

std::vector<Verdict> run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "all") {
    std::vector<Verdict> all;
    for (const auto& n : suite_names()) {
      if (n == "rules") continue;  // flattening runs the rules first
      auto part = run_suite(n, options);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  if (name == "absorption") return absorption_suite();
  if (name == "conditional") return conditional_suite();
  if (name == "interdefinability") return interdefinability_suite();
  if (name == "log-quotient") return log_quotient_suite(options.tolerance);
  if (name == "rules") return rules_suite(options.tolerance);
  if (name == "flattening") return flattening_suite(options);
  if (name == "signed") return signed_suite();
  if (name == "measures") return measures_suite(options.tolerance);
  if (name == "bayes") return bayes_suite();
  if (name == "suppes") return suppes_suite(options.tolerance);
  throw UnknownSuiteError("unknown suite: " + name);
}

}  // namespace cmeadow::oracle
