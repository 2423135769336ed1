#include "cmeadow/measures.hpp"

#include "cmeadow/meadow_core.hpp"

namespace cmeadow {

namespace {

template <typename Num>
Value<Num> weight_value(const Rational& w) {
  if constexpr (std::is_same_v<Num, double>) {
    return Value<Num>::ordinary(w.get_d());
  } else {
    return Value<Num>::ordinary(w);
  }
}

template <typename Num, typename Summand>
Value<Num> sum_over(std::size_t n, Mode mode, Summand&& summand) {
  Value<Num> acc = summand(0);
  for (std::size_t i = 1; i < n; ++i) acc = add(acc, summand(i), mode);
  return acc;
}

template <typename Num>
Value<Num> cross_entropy_impl(const Pmf& p, const Pmf& q, Mode mode) {
  return neg(sum_over<Num>(p.size(), mode,
                           [&](std::size_t i) {
                             return seqmul(weight_value<Num>(p.weight(i)),
                                           log2(weight_value<Num>(q.weight(i)), mode), mode);
                           }),
             mode);
}

template <typename Num>
Value<Num> kl_impl(const std::vector<Rational>& p, const std::vector<Rational>& q, Mode mode) {
  return sum_over<Num>(p.size(), mode, [&](std::size_t i) {
    auto pi = weight_value<Num>(p[i]);
    return seqmul(pi, log2(div(pi, weight_value<Num>(q[i]), mode), mode), mode);
  });
}

std::vector<Rational> weights(const Pmf& p) {
  std::vector<Rational> w;
  for (const auto& e : p.entries()) w.push_back(e.second);
  return w;
}

template <typename F>
MeadowValue on_carrier(Carrier carrier, F&& f) {
  if (carrier == Carrier::Exact) return MeadowValue(f(Rational()));
  return MeadowValue(f(0.0));
}

}  // namespace

MeadowValue entropy(const Pmf& p, Carrier carrier, Mode mode) {
  return cross_entropy(p, p, carrier, mode);
}

MeadowValue cross_entropy(const Pmf& p, const Pmf& q, Carrier carrier, Mode mode) {
  require_same_labels(p, q);
  return on_carrier(carrier, [&](auto tag) { return cross_entropy_impl<decltype(tag)>(p, q, mode); });
}

MeadowValue kl_divergence(const Pmf& p, const Pmf& q, Carrier carrier, Mode mode) {
  require_same_labels(p, q);
  return on_carrier(carrier, [&](auto tag) { return kl_impl<decltype(tag)>(weights(p), weights(q), mode); });
}

MeadowValue js_divergence(const Pmf& p, const Pmf& q, Carrier carrier, Mode mode) {
  require_same_labels(p, q);
  auto pw = weights(p);
  auto qw = weights(q);
  std::vector<Rational> m;
  for (std::size_t i = 0; i < pw.size(); ++i) m.push_back((pw[i] + qw[i]) / 2);
  return on_carrier(carrier, [&](auto tag) {
    using Num = decltype(tag);
    return add(kl_impl<Num>(pw, m, mode), kl_impl<Num>(qw, m, mode), mode);
  });
}

MeadowValue seq_expected_value(const Pmf& p, const std::map<std::string, ExactValue>& f, Carrier carrier,
                               Mode mode) {
  auto value_at = [&](std::size_t i) -> const ExactValue& {
    auto it = f.find(p.label(i));
    if (it == f.end()) throw LabelMismatchError("function is not defined on label " + p.label(i));
    return it->second;
  };
  return on_carrier(carrier, [&](auto tag) {
    using Num = decltype(tag);
    return sum_over<Num>(p.size(), mode, [&](std::size_t i) {
      Value<Num> fx;
      if constexpr (std::is_same_v<Num, double>) {
        fx = to_approx(value_at(i));
      } else {
        fx = value_at(i);
      }
      return seqmul(weight_value<Num>(p.weight(i)), fx, mode);
    });
  });
}

// ---------------------------------------------------------------------------
// Term builders

std::string_view to_string(MeasureVariant v) {
  switch (v) {
    case MeasureVariant::Direct: return "direct";
    case MeasureVariant::SeqMul: return "seqmul";
    case MeasureVariant::SeqMulDiv: return "seqmul-div";
    case MeasureVariant::CompositeF: return "composite-f";
    case MeasureVariant::SignChain: return "sign-chain";
    case MeasureVariant::FXY: return "f-xy";
  }
  return "?";
}

std::optional<MeasureVariant> parse_variant(std::string_view text) {
  for (auto v : {MeasureVariant::Direct, MeasureVariant::SeqMul, MeasureVariant::SeqMulDiv,
                 MeasureVariant::CompositeF, MeasureVariant::SignChain, MeasureVariant::FXY})
    if (to_string(v) == text) return v;
  return std::nullopt;
}

std::string sample_label(std::size_t i) { return "c" + std::to_string(i); }

namespace {

constexpr std::string_view kPlaceholder = "_c";

Term alpha(std::string_view label = kPlaceholder) { return Term::fun_app(std::string(kAlpha), std::string(label)); }
Term beta(std::string_view label = kPlaceholder) { return Term::fun_app(std::string(kBeta), std::string(label)); }

std::vector<std::string> labels(std::size_t n) {
  if (n == 0) throw Error("sample space size must be at least 1");
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(sample_label(i));
  return out;
}

Term sum(const Term& body, std::size_t n) { return generalized_sum(body, kPlaceholder, labels(n)); }

/// t_1 = alpha(c1); t_{i+1} = s^2(alpha(c_{i+1})) * alpha(c_{i+1}) + (1 - s^2(alpha(c_{i+1}))) * t_i.
/// For a Pmf this is the weight of the last label carrying nonzero mass.
Term last_nonzero_chain(std::size_t n) {
  Term t = alpha(sample_label(1));
  for (std::size_t i = 2; i <= n; ++i) {
    Term a = alpha(sample_label(i));
    Term s2 = Term::sign_squared(a);
    t = Term::add(Term::mul(s2, a), Term::mul(Term::sub(Term::constant(1), s2), t));
  }
  return t;
}

/// alpha(c) * log2(s^2(alpha(c)) * arg + (1 - s^2(alpha(c))) * fallback)
Term guarded_summand(const Term& arg, const Term& fallback) {
  Term a = alpha();
  Term s2 = Term::sign_squared(a);
  return Term::mul(a, Term::log2(Term::add(Term::mul(s2, arg), Term::mul(Term::sub(Term::constant(1), s2), fallback))));
}

Term half() { return Term::constant(ExactValue::ordinary(Rational(1, 2))); }

}  // namespace

Term composite_f(const Term& x) { return Term::seqmul(x, Term::log2(x)); }

Term f_xy(const Term& x, const Term& y) {
  return Term::add(Term::seqmul(x, Term::div(Term::log2(Term::mul(y, y)), Term::constant(2))),
                   Term::mul(Term::constant(0), y));
}

Term f_xy_sign_form(const Term& x, const Term& y) {
  Term arg = Term::sub(Term::add(Term::mul(y, y), Term::constant(1)), Term::sign_squared(x));
  return Term::mul(x, Term::div(Term::log2(arg), Term::constant(2)));
}

Term build_entropy_term(std::size_t n, MeasureVariant variant) {
  switch (variant) {
    case MeasureVariant::SeqMul: return Term::neg(sum(Term::seqmul(alpha(), Term::log2(alpha())), n));
    case MeasureVariant::SeqMulDiv:
      return sum(Term::seqmul(alpha(), Term::log2(Term::div(Term::constant(1), alpha()))), n);
    case MeasureVariant::CompositeF: return Term::neg(sum(composite_f(alpha()), n));
    case MeasureVariant::SignChain: return Term::neg(sum(guarded_summand(alpha(), last_nonzero_chain(n)), n));
    default: break;
  }
  throw InvalidVariantError("variant " + std::string(to_string(variant)) + " does not define entropy");
}

Term build_cross_entropy_term(std::size_t n, MeasureVariant variant) {
  switch (variant) {
    case MeasureVariant::SeqMul: return Term::neg(sum(Term::seqmul(alpha(), Term::log2(beta())), n));
    case MeasureVariant::SeqMulDiv:
      return sum(Term::seqmul(alpha(), Term::log2(Term::div(Term::constant(1), beta()))), n);
    case MeasureVariant::SignChain: return Term::neg(sum(guarded_summand(beta(), last_nonzero_chain(n)), n));
    case MeasureVariant::FXY: return Term::neg(sum(f_xy(alpha(), beta()), n));
    default: break;
  }
  throw InvalidVariantError("variant " + std::string(to_string(variant)) + " does not define cross-entropy");
}

Term build_kl_term(std::size_t n) {
  return sum(Term::seqmul(alpha(), Term::log2(Term::div(alpha(), beta()))), n);
}

Term build_js_term(std::size_t n) {
  Term m = Term::mul(half(), Term::add(alpha(), beta()));
  return Term::add(sum(Term::seqmul(alpha(), Term::log2(Term::div(alpha(), m))), n),
                   sum(Term::seqmul(beta(), Term::log2(Term::div(beta(), m))), n));
}

Environment measure_environment(const Pmf& p, const Pmf* q) {
  auto table = [](const Pmf& d) {
    std::map<std::string, ExactValue> t;
    for (std::size_t i = 0; i < d.size(); ++i) t[sample_label(i + 1)] = ExactValue::ordinary(d.weight(i));
    return t;
  };
  Environment env;
  env.declare_labels(labels(p.size()));
  env.bind_function(std::string(kAlpha), table(p));
  if (q) {
    require_same_labels(p, *q);
    env.bind_function(std::string(kBeta), table(*q));
  }
  return env;
}

}  // namespace cmeadow
