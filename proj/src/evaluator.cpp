#include "cmeadow/evaluator.hpp"

namespace cmeadow {

Environment& Environment::bind(std::string name, ExactValue value) {
  vars_[std::move(name)] = std::move(value);
  return *this;
}

Environment& Environment::bind_function(std::string function, std::map<std::string, ExactValue> table) {
  funs_[std::move(function)] = std::move(table);
  return *this;
}

Environment& Environment::declare_labels(std::vector<std::string> labels) {
  labels_ = std::move(labels);
  return *this;
}

const ExactValue& Environment::variable(const std::string& name) const {
  auto it = vars_.find(name);
  if (it == vars_.end()) throw UnboundSymbolError("unbound variable: " + name);
  return it->second;
}

const ExactValue& Environment::apply(const std::string& function, const std::string& label) const {
  auto f = funs_.find(function);
  if (f == funs_.end()) throw UnboundSymbolError("unbound function variable: " + function);
  auto v = f->second.find(label);
  if (v == f->second.end())
    throw UnboundSymbolError("function variable " + function + " is not defined on label " + label);
  return v->second;
}

namespace {

template <typename Num>
Value<Num> lift(const ExactValue& v) {
  if constexpr (std::is_same_v<Num, double>) {
    return to_approx(v);
  } else {
    return v;
  }
}

template <typename Num>
Value<Num> literal(const ExactValue& v, Mode mode) {
  if (v.is_bottom() && mode == Mode::SuppesOno)
    throw IllegalValueError("bot literal in Suppes-Ono mode");
  if (v.is_infinite() && mode != Mode::Signed)
    throw IllegalValueError("signed infinity literal outside signed mode");
  return lift<Num>(v);
}

}  // namespace

template <typename Num>
Value<Num> evaluate(const Term& t, const Environment& env, Mode mode) {
  const auto& n = t.node();
  auto arg = [&](std::size_t i) { return evaluate<Num>(n.args[i], env, mode); };
  switch (n.op) {
    case Op::Const: return literal<Num>(n.constant, mode);
    case Op::Var: return literal<Num>(env.variable(n.name), mode);
    case Op::FunApp: return literal<Num>(env.apply(n.name, n.label), mode);
    case Op::Add: return add(arg(0), arg(1), mode);
    case Op::Neg: return neg(arg(0), mode);
    case Op::Mul: return mul(arg(0), arg(1), mode);
    case Op::Div: return div(arg(0), arg(1), mode);
    case Op::Log2: return log2(arg(0), mode);
    case Op::Cond: return cond(arg(0), arg(1), arg(2), mode);
    case Op::SeqMul: return seqmul(arg(0), arg(1), mode);
    case Op::Sign: return sign(arg(0), mode);
  }
  return Value<Num>::bottom();
}

template Value<Rational> evaluate<Rational>(const Term&, const Environment&, Mode);
template Value<double> evaluate<double>(const Term&, const Environment&, Mode);

MeadowValue eval(const Term& t, const Environment& env, Mode mode, Carrier carrier) {
  if (carrier == Carrier::Exact) return evaluate<Rational>(t, env, mode);
  return evaluate<double>(t, env, mode);
}

}  // namespace cmeadow
