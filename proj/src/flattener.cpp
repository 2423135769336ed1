#include "cmeadow/flattener.hpp"

#include <optional>

#include "cmeadow/errors.hpp"

namespace cmeadow {

namespace {

bool is_one(const Term& t) { return t.is_integer_constant(1); }

Term one() { return Term::constant(1); }

Term cube(const Term& t) { return Term::mul(Term::mul(t, t), t); }

Term square(const Term& t) { return Term::mul(t, t); }

/// a * b, dropping a literal 1 factor.
Term product(const Term& a, const Term& b) {
  if (is_one(a)) return b;
  if (is_one(b)) return a;
  return Term::mul(a, b);
}

Term times(const std::optional<Term>& acc, const Term& t) { return acc ? product(*acc, t) : t; }

}  // namespace

namespace combine {

FlatFracterm leaf(const Term& t) {
  if (t.is_constant()) {
    const auto& c = t.node().constant;
    if (c.is_bottom()) return {one(), Term::constant(0)};
    if (c.is_infinite()) throw IllegalValueError("signed infinity cannot be flattened");
  }
  return {t, one()};
}

// (p/q) + (r/s) = (p*s + r*q) / (q*s)
FlatFracterm add(const FlatFracterm& a, const FlatFracterm& b) {
  return {Term::add(product(a.numerator, b.denominator), product(b.numerator, a.denominator)),
          product(a.denominator, b.denominator)};
}

FlatFracterm neg(const FlatFracterm& a) { return {Term::neg(a.numerator), a.denominator}; }

FlatFracterm mul(const FlatFracterm& a, const FlatFracterm& b) {
  return {product(a.numerator, b.numerator), product(a.denominator, b.denominator)};
}

// (p/q) / (r/s) = (p*s*s) / (q*r*s); the extra s keeps s = 0 visible.
FlatFracterm div(const FlatFracterm& a, const FlatFracterm& b) {
  const Term& s = b.denominator;
  return {product(product(a.numerator, s), s), product(product(a.denominator, b.numerator), s)};
}

// log2(x/y) = (log2(x*x) - log2(y*y)) / (2 + 0 * log2(x*y))
FlatFracterm log2(const FlatFracterm& a) {
  const Term& x = a.numerator;
  const Term& y = a.denominator;
  if (is_one(y)) return {Term::log2(x), one()};
  return {Term::sub(Term::log2(square(x)), Term::log2(square(y))),
          Term::add(Term::constant(2), Term::mul(Term::constant(0), Term::log2(Term::mul(x, y))))};
}

FlatFracterm sign(const FlatFracterm& a) {
  if (is_one(a.denominator)) return {Term::sign(a.numerator), one()};
  return {Term::sign(a.numerator), Term::sign(a.denominator)};
}

// Applies, one position at a time:
//   (x/x') <| y |> z = (x <| y |> z) / (x' <| y |> 1)
//   x <| y/y' |> z   = ((x <| y |> z) * y') / y'
//   x <| y |> (z/z') = (x <| y |> z) / (1 <| y |> z')
// and folds the nested quotients with (a/b)/c = a/(b*c) and (a/b)*c = (a*c)/b.
FlatFracterm cond(const FlatFracterm& x, const FlatFracterm& y, const FlatFracterm& z) {
  Term num = Term::cond(x.numerator, y.numerator, z.numerator);
  std::optional<Term> den;
  if (!is_one(x.denominator)) den = Term::cond(x.denominator, y.numerator, one());
  if (!is_one(z.denominator)) den = times(den, Term::cond(one(), y.numerator, z.denominator));
  if (!is_one(y.denominator)) {
    num = Term::mul(num, y.denominator);
    den = times(den, y.denominator);
  }
  return {num, den ? *den : one()};
}

// (x/x') |*| y = (x |*| y) / x'
// x |*| (y/y') = (x^3 |*| (y * (y' + 1 - s^2(x)))) / ((x |*| y')^2 + 1 - s^2(x))
FlatFracterm seqmul(const FlatFracterm& x, const FlatFracterm& y) {
  const Term& u = x.numerator;
  const Term& v = y.denominator;
  std::optional<Term> den;
  Term num = is_one(v) ? Term::seqmul(u, y.numerator)
                       : Term::seqmul(cube(u), Term::mul(y.numerator,
                                                         Term::sub(Term::add(v, one()), Term::sign_squared(u))));
  if (!is_one(v)) den = Term::sub(Term::add(square(Term::seqmul(u, v)), one()), Term::sign_squared(u));
  if (!is_one(x.denominator)) den = times(den, x.denominator);
  return {num, den ? *den : one()};
}

}  // namespace combine

FlatFracterm flatten(const Term& t) {
  const auto& n = t.node();
  switch (n.op) {
    case Op::Const:
    case Op::Var:
    case Op::FunApp: return combine::leaf(t);
    default: break;
  }
  std::vector<FlatFracterm> kids;
  kids.reserve(n.args.size());
  for (const auto& a : n.args) kids.push_back(flatten(a));
  switch (n.op) {
    case Op::Add: return combine::add(kids[0], kids[1]);
    case Op::Neg: return combine::neg(kids[0]);
    case Op::Mul: return combine::mul(kids[0], kids[1]);
    case Op::Div: return combine::div(kids[0], kids[1]);
    case Op::Log2: return combine::log2(kids[0]);
    case Op::Sign: return combine::sign(kids[0]);
    case Op::Cond: return combine::cond(kids[0], kids[1], kids[2]);
    case Op::SeqMul: return combine::seqmul(kids[0], kids[1]);
    default: break;
  }
  throw Error("unreachable operator in flatten");
}

bool is_flat_fracterm(const Term& t) {
  if (t.op() != Op::Div) return false;
  for (const auto& part : t.args())
    if (contains_op(part, Op::Div) || contains_literal(part, Kind::Bottom) ||
        contains_literal(part, Kind::PosInf) || contains_literal(part, Kind::NegInf))
      return false;
  return true;
}

std::vector<RewriteRule> rewrite_rules() {
  auto v = [](const char* name) { return Term::var(name); };
  auto frac = [&](const char* p, const char* q) { return FlatFracterm{v(p), v(q)}; };
  auto plain = [&](const char* p) { return FlatFracterm{v(p), one()}; };
  auto lhs_frac = [&](const char* p, const char* q) { return Term::div(v(p), v(q)); };

  std::vector<RewriteRule> rules;
  rules.push_back({"leaf", {"x"}, v("x"), combine::leaf(v("x")).to_term()});
  rules.push_back({"unit-right", {"x"}, Term::mul(v("x"), Term::constant(1)), v("x")});
  rules.push_back({"unit-left", {"x"}, Term::mul(Term::constant(1), v("x")), v("x")});
  rules.push_back({"bot", {}, Term::bottom(), combine::leaf(Term::bottom()).to_term()});
  rules.push_back({"add", {"p", "q", "r", "t"}, Term::add(lhs_frac("p", "q"), lhs_frac("r", "t")),
                   combine::add(frac("p", "q"), frac("r", "t")).to_term()});
  rules.push_back({"neg", {"p", "q"}, Term::neg(lhs_frac("p", "q")), combine::neg(frac("p", "q")).to_term()});
  rules.push_back({"mul", {"p", "q", "r", "t"}, Term::mul(lhs_frac("p", "q"), lhs_frac("r", "t")),
                   combine::mul(frac("p", "q"), frac("r", "t")).to_term()});
  rules.push_back({"div", {"p", "q", "r", "t"}, Term::div(lhs_frac("p", "q"), lhs_frac("r", "t")),
                   combine::div(frac("p", "q"), frac("r", "t")).to_term()});
  rules.push_back({"div-by-term", {"a", "b", "c"}, Term::div(lhs_frac("a", "b"), v("c")),
                   Term::div(v("a"), Term::mul(v("b"), v("c")))});
  rules.push_back({"mul-by-term", {"a", "b", "c"}, Term::mul(lhs_frac("a", "b"), v("c")),
                   Term::div(Term::mul(v("a"), v("c")), v("b"))});
  rules.push_back({"log2", {"x", "y"}, Term::log2(lhs_frac("x", "y")), combine::log2(frac("x", "y")).to_term()});
  rules.push_back({"sign", {"x", "y"}, Term::sign(lhs_frac("x", "y")), combine::sign(frac("x", "y")).to_term()});
  rules.push_back({"sign-squared", {"x", "y"}, Term::sign_squared(lhs_frac("x", "y")),
                   Term::div(Term::sign_squared(v("x")), Term::sign_squared(v("y")))});
  rules.push_back({"cond-left", {"x", "x1", "y", "z"}, Term::cond(lhs_frac("x", "x1"), v("y"), v("z")),
                   combine::cond(frac("x", "x1"), plain("y"), plain("z")).to_term()});
  rules.push_back({"cond-test", {"x", "y", "y1", "z"}, Term::cond(v("x"), lhs_frac("y", "y1"), v("z")),
                   combine::cond(plain("x"), frac("y", "y1"), plain("z")).to_term()});
  rules.push_back({"cond-right", {"x", "y", "z", "z1"}, Term::cond(v("x"), v("y"), lhs_frac("z", "z1")),
                   combine::cond(plain("x"), plain("y"), frac("z", "z1")).to_term()});
  rules.push_back({"cond-all", {"x", "x1", "y", "y1", "z", "z1"},
                   Term::cond(lhs_frac("x", "x1"), lhs_frac("y", "y1"), lhs_frac("z", "z1")),
                   combine::cond(frac("x", "x1"), frac("y", "y1"), frac("z", "z1")).to_term()});
  rules.push_back({"seqmul-left", {"x", "x1", "y"}, Term::seqmul(lhs_frac("x", "x1"), v("y")),
                   combine::seqmul(frac("x", "x1"), plain("y")).to_term()});
  rules.push_back({"seqmul-right", {"x", "y", "y1"}, Term::seqmul(v("x"), lhs_frac("y", "y1")),
                   combine::seqmul(plain("x"), frac("y", "y1")).to_term()});
  rules.push_back({"seqmul-both", {"x", "x1", "y", "y1"}, Term::seqmul(lhs_frac("x", "x1"), lhs_frac("y", "y1")),
                   combine::seqmul(frac("x", "x1"), frac("y", "y1")).to_term()});
  return rules;
}

}  // namespace cmeadow
