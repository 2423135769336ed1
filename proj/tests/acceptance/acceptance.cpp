// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cmeadow/evaluator.hpp"
#include "cmeadow/events.hpp"
#include "cmeadow/measures.hpp"
#include "cmeadow/oracle.hpp"

using namespace cmeadow;
using namespace cmeadow::oracle;

namespace {

constexpr double kTol = 1e-9;

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome from_verdicts(const std::vector<Verdict>& vs) {
  Outcome o;
  std::size_t checks = 0, failed = 0;
  for (const auto& v : vs) {
    checks += v.checked;
    if (!v.pass) {
      if (o.pass) o.detail = describe(v) + "; ";
      o.pass = false;
      ++failed;
    }
  }
  o.detail += std::to_string(vs.size()) + " verdicts, " + std::to_string(checks) + " checks, " +
              std::to_string(failed) + " failed";
  return o;
}

Outcome only(const std::vector<Verdict>& vs, const std::function<bool(const Verdict&)>& keep) {
  std::vector<Verdict> picked;
  for (const auto& v : vs)
    if (keep(v)) picked.push_back(v);
  if (picked.empty()) return {false, "no matching verdicts"};
  return from_verdicts(picked);
}

bool starts_with(const std::string& s, const char* prefix) { return s.rfind(prefix, 0) == 0; }

Pmf pmf(std::initializer_list<Rational> w) { return Pmf::from_weights(w); }

bool unsupported(const Pmf& p, const Pmf& q) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.weight(i) > 0 && q.weight(i) == 0) return true;
  return false;
}

Outcome absorption() { return from_verdicts(run_suite("absorption")); }

Outcome conditional() { return from_verdicts(run_suite("conditional")); }

Outcome interdefinability() {
  Grid g = Grid::standard();
  return from_verdicts({
      equiv(parse("s(x) * s(x)"), parse("x |*| (1/x)"), {"x"}, g, Mode::Bottom, Carrier::Exact, 0.0),
      equiv(parse("cond(x; y; z)"), parse("s(y) * s(y) |*| x + (1 - s(y) * s(y)) |*| z"), {"x", "y", "z"}, g,
            Mode::Bottom, Carrier::Exact, 0.0),
  });
}

Outcome log_quotient() {
  return from_verdicts({equiv(parse("log2(x/y)"), parse("(log2(x * x) - log2(y * y))/(2 + 0 * log2(x * y))"),
                              {"x", "y"}, Grid::standard(), Mode::Bottom, Carrier::Approx, kTol)});
}

Outcome flattening() {
  SuiteOptions o;
  o.seed = 1;
  o.random_term_count = 1000;
  o.random_term_depth = 4;
  o.tolerance = kTol;
  auto vs = run_suite("flattening", o);
  Outcome out = only(vs, [](const Verdict& v) { return starts_with(v.name, "flatten"); });
  if (out.pass) out.detail += "; " + vs.back().detail;
  return out;
}

Outcome rules() {
  auto vs = run_suite("rules");
  Outcome o = from_verdicts(vs);
  bool div_by_term = false, sign = false;
  for (const auto& v : vs) {
    div_by_term |= starts_with(v.name, "rule div-by-term:");
    sign |= starts_with(v.name, "rule sign:");
  }
  if (!div_by_term || !sign) return {false, "nested-division or sign rule missing"};
  return o;
}

Outcome exact_entropy() {
  Rational h(1, 2), q(1, 4);
  std::string a = entropy(pmf({h, h}), Carrier::Exact).to_string();
  std::string b = entropy(pmf({1, 0}), Carrier::Exact).to_string();
  std::string c = entropy(pmf({q, q, q, q}), Carrier::Exact).to_string();
  return {a == "1" && b == "0" && c == "2", "H = " + a + ", " + b + ", " + c};
}

Outcome builders() {
  std::size_t checked = 0, failed = 0, chain_bot = 0, chain_bot_match = 0;
  std::string first;
  auto expect = [&](bool ok, const std::string& what) {
    ++checked;
    if (!ok && !failed++) first = what;
  };
  for (std::size_t n = 1; n <= 4; ++n) {
    auto grid = enumerate_pmfs(n, 4);
    for (auto variant : {MeasureVariant::SeqMul, MeasureVariant::SeqMulDiv, MeasureVariant::CompositeF,
                         MeasureVariant::SignChain}) {
      Term t = build_entropy_term(n, variant);
      for (const auto& p : grid) {
        MeadowValue got = eval(t, measure_environment(p), Mode::Bottom, Carrier::Approx);
        expect(values_agree(got, entropy(p, Carrier::Approx), kTol),
               "entropy " + std::string(to_string(variant)) + " n=" + std::to_string(n));
      }
    }
    for (auto variant : {MeasureVariant::SeqMul, MeasureVariant::SeqMulDiv, MeasureVariant::FXY,
                         MeasureVariant::SignChain}) {
      Term t = build_cross_entropy_term(n, variant);
      for (const auto& p : grid)
        for (const auto& q : grid) {
          MeadowValue got = eval(t, measure_environment(p, &q), Mode::Bottom, Carrier::Approx);
          MeadowValue want = cross_entropy(p, q, Carrier::Approx);
          if (variant == MeasureVariant::SignChain && !want.is_ordinary()) {
            ++chain_bot;
            chain_bot_match += got.is_bottom();
            continue;
          }
          expect(values_agree(got, want, kTol), "cross-entropy " + std::string(to_string(variant)) +
                                                    " n=" + std::to_string(n));
        }
    }
  }
  std::string detail = std::to_string(checked) + " comparisons, " + std::to_string(failed) +
                       " failed; sign-chain cross-entropy bot cases " + std::to_string(chain_bot_match) + "/" +
                       std::to_string(chain_bot) + " also bot (not asserted)";
  if (failed) detail = "first failure: " + first + "; " + detail;
  return {failed == 0, detail};
}

Outcome bottom_propagation() {
  std::size_t checked = 0, failed = 0, bottoms = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto grid = enumerate_pmfs(n, 4);
    for (const auto& p : grid)
      for (const auto& q : grid) {
        bool bot = cross_entropy(p, q, Carrier::Approx).is_bottom();
        ++checked;
        bottoms += bot;
        failed += bot != unsupported(p, q);
      }
  }
  Pmf half = pmf({Rational(1, 2), Rational(1, 2)});
  Pmf zero_one = pmf({0, 1});
  bool example = cross_entropy(half, zero_one, Carrier::Exact).is_bottom();
  return {failed == 0 && example, std::to_string(checked) + " pairs, " + std::to_string(bottoms) + " bot, " +
                                      std::to_string(failed) + " failed; P=(1/2,1/2), Q=(0,1) gives " +
                                      cross_entropy(half, zero_one, Carrier::Exact).to_string()};
}

Outcome kl_js() {
  std::size_t checked = 0, failed = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto grid = enumerate_pmfs(n, 4);
    for (const auto& p : grid) {
      ++checked;
      failed += kl_divergence(p, p, Carrier::Approx).to_string() != "0";
      for (const auto& q : grid) {
        ++checked;
        MeadowValue kl = kl_divergence(p, q, Carrier::Approx);
        MeadowValue h = cross_entropy(p, q, Carrier::Approx);
        if (h.is_ordinary()) {
          double want = h.to_double() - entropy(p, Carrier::Approx).to_double();
          failed += !(kl.is_ordinary() && values_agree(kl, MeadowValue(ApproxValue::ordinary(want)), kTol));
        }
        MeadowValue a = js_divergence(p, q, Carrier::Approx);
        MeadowValue b = js_divergence(q, p, Carrier::Approx);
        failed += !(a.is_ordinary() && values_agree(a, b, kTol));
      }
    }
  }
  std::string js = js_divergence(pmf({1, 0}), pmf({0, 1}), Carrier::Exact).to_string();
  return {failed == 0 && js == "2", std::to_string(checked) + " checks, " + std::to_string(failed) +
                                        " failed; JS((1,0),(0,1)) = " + js};
}

Outcome signed_mode() {
  auto vs = run_suite("signed");
  Outcome o = from_verdicts(vs);
  std::string l = eval(parse("+inf * (2 - 1)"), Environment{}, Mode::Signed, Carrier::Exact).to_string();
  std::string r = eval(parse("+inf * 2 - +inf * 1"), Environment{}, Mode::Signed, Carrier::Exact).to_string();
  std::string lg = eval(parse("log2(0)"), Environment{}, Mode::Signed, Carrier::Exact).to_string();
  std::string h =
      cross_entropy(pmf({Rational(1, 2), Rational(1, 2)}), pmf({0, 1}), Carrier::Exact, Mode::Signed).to_string();
  o.pass = o.pass && l == "+inf" && r == "bot" && lg == "-inf" && h == "+inf";
  o.detail += "; distributivity (" + l + ", " + r + "), log2 0 = " + lg + ", H((1/2,1/2),(0,1)) = " + h;
  return o;
}

Outcome bayes() {
  std::size_t spaces = 0, pairs = 0, guarded_failures = 0, counterexamples = 0;
  bool shape = false;
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& p : enumerate_pmfs(n, 4)) {
      EventSpace space(p);
      BayesReport r = bayes_check(space);
      ++spaces;
      pairs += r.pairs;
      guarded_failures += r.guarded_failures.size();
      counterexamples += r.unguarded_differences.size();
      for (const auto& d : r.unguarded_differences)
        shape |= space.prob(d.a) == 0 && space.prob(d.b) > 0 && format_value(d.lhs) == "0" && d.rhs.is_bottom();
    }
  return {guarded_failures == 0 && shape, std::to_string(spaces) + " spaces, " + std::to_string(pairs) +
                                               " pairs, " + std::to_string(guarded_failures) +
                                               " guarded failures, " + std::to_string(counterexamples) +
                                               " unguarded counterexamples (lhs 0, rhs bot)"};
}

Outcome suppes() { return from_verdicts(run_suite("suppes")); }

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"absorption", absorption},
      {"conditional and left-sequential multiplication", conditional},
      {"interdefinability of s^2, |*| and cond", interdefinability},
      {"log2 of a quotient", log_quotient},
      {"flattening soundness", flattening},
      {"rule-level validation", rules},
      {"exact entropy values", exact_entropy},
      {"builder equivalence", builders},
      {"bot-propagation of cross-entropy", bottom_propagation},
      {"KL and JS divergence", kl_js},
      {"signed infinities", signed_mode},
      {"guarded Bayes-Price", bayes},
      {"Suppes-Ono comparison", suppes},
  };
  int failures = 0;
  auto start = std::chrono::steady_clock::now();
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.pass;
    std::printf("%s %2d %s [%.2fs] %s\n", o.pass ? "PASS" : "FAIL", index, c.name, secs, o.detail.c_str());
  }
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%d criteria passed in %.2fs\n", index - failures, index, total);
  return failures ? 1 : 0;
}
