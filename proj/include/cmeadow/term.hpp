#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cmeadow/value.hpp"

namespace cmeadow {

enum class Op : std::uint8_t {
  Const,
  Var,
  FunApp,  ///< function variable applied to a sample-point label, alpha(c1)
  Add,
  Neg,
  Mul,
  Div,
  Log2,
  Cond,    ///< x <| y |> z, written cond(x; y; z)
  SeqMul,  ///< left-sequential multiplication, written |*|
  Sign,
};

std::string_view op_name(Op op);
int arity(Op op);

/// Immutable term over the extended meadow signature. Copies share structure.
class Term {
 public:
  struct Node {
    Op op;
    ExactValue constant;    // Const
    std::string name;       // Var name, or FunApp function variable
    std::string label;      // FunApp sample-point label
    std::vector<Term> args;
  };

  static Term constant(ExactValue v);
  static Term constant(long n) { return constant(ExactValue::ordinary(Rational(n))); }
  static Term bottom() { return constant(ExactValue::bottom()); }
  static Term var(std::string name);
  static Term fun_app(std::string function, std::string label);
  static Term add(Term l, Term r);
  static Term neg(Term t);
  static Term sub(Term l, Term r) { return add(std::move(l), neg(std::move(r))); }
  static Term mul(Term l, Term r);
  static Term div(Term l, Term r);
  static Term log2(Term t);
  static Term cond(Term x, Term y, Term z);
  static Term seqmul(Term l, Term r);
  static Term sign(Term t);
  /// s(t) * s(t)
  static Term sign_squared(const Term& t) { return mul(sign(t), sign(t)); }

  Op op() const noexcept { return node_->op; }
  const Node& node() const noexcept { return *node_; }
  const std::vector<Term>& args() const noexcept { return node_->args; }
  const Term& arg(std::size_t i) const { return node_->args.at(i); }

  bool is_constant() const noexcept { return op() == Op::Const; }
  bool is_integer_constant(long n) const;

  /// Number of nodes in the tree (shared subtrees counted once per occurrence).
  std::size_t size() const;
  int depth() const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Term make(Op op, std::vector<Term> args);

  std::shared_ptr<const Node> node_;
};

/// Renders with minimal parentheses; parse(print(t)) == t.
std::string print(const Term& t);

/// Parses the ASCII concrete syntax. Throws ParseError.
Term parse(std::string_view text);

/// [a_1/x]body + ... + [a_n/x]body, left-nested. `placeholder` names the
/// sample-point label inside FunApp nodes of `body` that gets replaced.
Term generalized_sum(const Term& body, std::string_view placeholder,
                     const std::vector<std::string>& labels);

/// Replaces the label `from` with `to` in every FunApp node.
Term substitute_label(const Term& t, std::string_view from, std::string_view to);

std::set<std::string> free_variables(const Term& t);
bool contains_op(const Term& t, Op op);
std::size_t count_op(const Term& t, Op op);
/// True when some Const node holds a peripheral (bot, +inf, -inf) of the given kind.
bool contains_literal(const Term& t, Kind kind);

}  // namespace cmeadow
