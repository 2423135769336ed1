#include "cmeadow/term.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace cmeadow {

std::string_view op_name(Op op) {
  switch (op) {
    case Op::Const: return "const";
    case Op::Var: return "var";
    case Op::FunApp: return "funapp";
    case Op::Add: return "+";
    case Op::Neg: return "neg";
    case Op::Mul: return "*";
    case Op::Div: return "/";
    case Op::Log2: return "log2";
    case Op::Cond: return "cond";
    case Op::SeqMul: return "|*|";
    case Op::Sign: return "s";
  }
  return "?";
}

int arity(Op op) {
  switch (op) {
    case Op::Const:
    case Op::Var:
    case Op::FunApp: return 0;
    case Op::Neg:
    case Op::Log2:
    case Op::Sign: return 1;
    case Op::Cond: return 3;
    default: return 2;
  }
}

Term Term::make(Op op, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->args = std::move(args);
  return Term(std::move(n));
}

Term Term::constant(ExactValue v) {
  auto n = std::make_shared<Node>();
  n->op = Op::Const;
  n->constant = std::move(v);
  return Term(std::move(n));
}

Term Term::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->op = Op::Var;
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::fun_app(std::string function, std::string label) {
  auto n = std::make_shared<Node>();
  n->op = Op::FunApp;
  n->name = std::move(function);
  n->label = std::move(label);
  return Term(std::move(n));
}

Term Term::add(Term l, Term r) { return make(Op::Add, {std::move(l), std::move(r)}); }
Term Term::neg(Term t) { return make(Op::Neg, {std::move(t)}); }
Term Term::mul(Term l, Term r) { return make(Op::Mul, {std::move(l), std::move(r)}); }
Term Term::div(Term l, Term r) { return make(Op::Div, {std::move(l), std::move(r)}); }
Term Term::log2(Term t) { return make(Op::Log2, {std::move(t)}); }
Term Term::cond(Term x, Term y, Term z) {
  return make(Op::Cond, {std::move(x), std::move(y), std::move(z)});
}
Term Term::seqmul(Term l, Term r) { return make(Op::SeqMul, {std::move(l), std::move(r)}); }
Term Term::sign(Term t) { return make(Op::Sign, {std::move(t)}); }

bool Term::is_integer_constant(long n) const {
  return is_constant() && node_->constant.is_ordinary() && node_->constant.number() == n;
}

std::size_t Term::size() const {
  std::size_t s = 1;
  for (const auto& a : args()) s += a.size();
  return s;
}

int Term::depth() const {
  int d = 0;
  for (const auto& a : args()) d = std::max(d, a.depth() + 1);
  return d;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.op != y.op) return false;
  switch (x.op) {
    case Op::Const: return x.constant == y.constant;
    case Op::Var: return x.name == y.name;
    case Op::FunApp: return x.name == y.name && x.label == y.label;
    default: break;
  }
  for (std::size_t i = 0; i < x.args.size(); ++i)
    if (x.args[i] != y.args[i]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

enum Level { kSum = 1, kProd = 2, kUnary = 3, kAtom = 4 };

Level level_of(const Term& t) {
  switch (t.op()) {
    case Op::Add: return kSum;
    case Op::Mul:
    case Op::SeqMul:
    case Op::Div: return kProd;
    case Op::Neg: return kUnary;
    case Op::Const: {
      const auto& c = t.node().constant;
      if (c.kind() == Kind::NegInf) return kUnary;
      if (c.is_ordinary() && sgn(c.number()) < 0) return kUnary;
      return kAtom;
    }
    default: return kAtom;
  }
}

void print_into(const Term& t, std::string& out);

void print_at(const Term& t, Level required, std::string& out) {
  if (level_of(t) < required) {
    out += '(';
    print_into(t, out);
    out += ')';
  } else {
    print_into(t, out);
  }
}

void print_into(const Term& t, std::string& out) {
  const auto& n = t.node();
  switch (n.op) {
    case Op::Const:
      out += format_value(n.constant);
      return;
    case Op::Var:
      out += n.name;
      return;
    case Op::FunApp:
      out += n.name + "(" + n.label + ")";
      return;
    case Op::Add:
      print_at(n.args[0], kSum, out);
      if (n.args[1].op() == Op::Neg) {
        out += " - ";
        print_at(n.args[1].arg(0), kProd, out);
      } else {
        out += " + ";
        print_at(n.args[1], kProd, out);
      }
      return;
    case Op::Neg: {
      const Term& c = n.args[0];
      out += '-';
      // "-3" would read back as a negative literal, so keep Neg(3) visible.
      if (c.is_constant() && c.node().constant.is_ordinary() && sgn(c.node().constant.number()) >= 0) {
        out += '(' + format_value(c.node().constant) + ')';
      } else {
        print_at(c, kUnary, out);
      }
      return;
    }
    case Op::Mul:
    case Op::SeqMul:
      print_at(n.args[0], kProd, out);
      out += n.op == Op::Mul ? " * " : " |*| ";
      print_at(n.args[1], kUnary, out);
      return;
    case Op::Div: {
      std::string left, right;
      print_at(n.args[0], kProd, left);
      print_at(n.args[1], kUnary, right);
      // Keep "a/b" with a positive integer b from lexing as one rational literal.
      bool spaced = !left.empty() && std::isdigit(static_cast<unsigned char>(left.back())) &&
                    !right.empty() && right.front() >= '1' && right.front() <= '9';
      out += left;
      out += spaced ? " / " : "/";
      out += right;
      return;
    }
    case Op::Log2:
      out += "log2(";
      print_into(n.args[0], out);
      out += ')';
      return;
    case Op::Sign:
      out += "s(";
      print_into(n.args[0], out);
      out += ')';
      return;
    case Op::Cond:
      out += "cond(";
      print_into(n.args[0], out);
      out += "; ";
      print_into(n.args[1], out);
      out += "; ";
      print_into(n.args[2], out);
      out += ')';
      return;
  }
}

}  // namespace

std::string print(const Term& t) {
  std::string out;
  print_into(t, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, SeqStar, Slash, LParen, RParen, Semi, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::string describe(const Token& t) {
  return t.kind == Tok::End ? std::string("end of input") : "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_digit = [&](std::size_t k) {
    return k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]));
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (is_digit(i)) {
      while (is_digit(i)) ++i;
      // integer "/" integer with a positive denominator is a single literal
      if (i < src.size() && src[i] == '/' && is_digit(i + 1)) {
        std::size_t j = i + 1;
        bool positive = false;
        while (is_digit(j)) positive |= src[j++] != '0';
        if (positive) i = j;
      }
      out.push_back({Tok::Number, std::string(src.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(src.substr(start, i - start)), start});
      continue;
    }
    if (src.substr(i, 3) == "|*|") {
      out.push_back({Tok::SeqStar, "|*|", start});
      i += 3;
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case ';': k = Tok::Semi; break;
      default:
        throw ParseError(start, {"term"}, "'" + std::string(1, c) + "'");
    }
    out.push_back({k, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::End, "", src.size()});
  return out;
}

const std::unordered_set<std::string>& reserved_words() {
  static const std::unordered_set<std::string> words{"bot", "inf", "log2", "s", "cond"};
  return words;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  Term parse_all() {
    Term t = sum();
    expect(Tok::End, "end of input");
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(peek().pos, std::move(expected), describe(peek()));
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) fail({what});
  }

  Term sum() {
    Term t = prod();
    for (;;) {
      if (accept(Tok::Plus)) {
        t = Term::add(t, prod());
      } else if (accept(Tok::Minus)) {
        t = Term::sub(t, prod());
      } else {
        return t;
      }
    }
  }

  Term prod() {
    Term t = unary();
    for (;;) {
      if (accept(Tok::Star)) {
        t = Term::mul(t, unary());
      } else if (accept(Tok::SeqStar)) {
        t = Term::seqmul(t, unary());
      } else if (accept(Tok::Slash)) {
        t = Term::div(t, unary());
      } else {
        return t;
      }
    }
  }

  Term unary() {
    if (accept(Tok::Minus)) {
      // "-3" and "-inf" are literals; anything else is negation.
      if (peek().kind == Tok::Number) {
        Rational q = parse_rational(toks_[pos_++].text);
        return Term::constant(ExactValue::ordinary(-q));
      }
      if (peek().kind == Tok::Ident && peek().text == "inf") {
        ++pos_;
        return Term::constant(ExactValue::neg_inf());
      }
      return Term::neg(unary());
    }
    return atom();
  }

  Term atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        ++pos_;
        return Term::constant(ExactValue::ordinary(parse_rational(t.text)));
      case Tok::Plus:
        if (peek(1).kind == Tok::Ident && peek(1).text == "inf") {
          pos_ += 2;
          return Term::constant(ExactValue::pos_inf());
        }
        ++pos_;
        fail({"inf"});
      case Tok::LParen: {
        ++pos_;
        Term inner = sum();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Ident:
        return identifier();
      default:
        fail({"number", "identifier", "'('", "'-'", "bot", "+inf", "-inf", "log2", "s", "cond"});
    }
  }

  Term identifier() {
    std::string name = toks_[pos_++].text;
    if (name == "bot") return Term::bottom();
    if (name == "inf") {
      --pos_;
      fail({"number", "identifier", "'('", "+inf", "-inf"});
    }
    if (name == "log2" || name == "s") {
      expect(Tok::LParen, "'('");
      Term inner = sum();
      expect(Tok::RParen, "')'");
      return name == "s" ? Term::sign(inner) : Term::log2(inner);
    }
    if (name == "cond") {
      expect(Tok::LParen, "'('");
      Term x = sum();
      expect(Tok::Semi, "';'");
      Term y = sum();
      expect(Tok::Semi, "';'");
      Term z = sum();
      expect(Tok::RParen, "')'");
      return Term::cond(x, y, z);
    }
    if (accept(Tok::LParen)) {
      if (peek().kind != Tok::Ident || reserved_words().count(peek().text)) fail({"label"});
      std::string label = toks_[pos_++].text;
      expect(Tok::RParen, "')'");
      return Term::fun_app(std::move(name), std::move(label));
    }
    return Term::var(std::move(name));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected, const std::string& found)
    : Error([&] {
        std::string msg = "syntax error at position " + std::to_string(position) + ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) msg += (i ? ", " : "") + expected[i];
        return msg + ", found " + found;
      }()),
      position_(position),
      expected_(std::move(expected)) {}

Term parse(std::string_view text) { return Parser(text).parse_all(); }

// ---------------------------------------------------------------------------

Term substitute_label(const Term& t, std::string_view from, std::string_view to) {
  const auto& n = t.node();
  switch (n.op) {
    case Op::FunApp:
      return n.label == from ? Term::fun_app(n.name, std::string(to)) : t;
    case Op::Const:
    case Op::Var:
      return t;
    default: break;
  }
  std::vector<Term> args;
  args.reserve(n.args.size());
  for (const auto& a : n.args) args.push_back(substitute_label(a, from, to));
  switch (n.op) {
    case Op::Neg: return Term::neg(args[0]);
    case Op::Log2: return Term::log2(args[0]);
    case Op::Sign: return Term::sign(args[0]);
    case Op::Add: return Term::add(args[0], args[1]);
    case Op::Mul: return Term::mul(args[0], args[1]);
    case Op::Div: return Term::div(args[0], args[1]);
    case Op::SeqMul: return Term::seqmul(args[0], args[1]);
    case Op::Cond: return Term::cond(args[0], args[1], args[2]);
    default: return t;
  }
}

Term generalized_sum(const Term& body, std::string_view placeholder,
                     const std::vector<std::string>& labels) {
  if (labels.empty()) throw Error("generalized sum over an empty label list");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw Error("duplicate label in generalized sum: " + l);
  Term acc = substitute_label(body, placeholder, labels.front());
  for (std::size_t i = 1; i < labels.size(); ++i)
    acc = Term::add(acc, substitute_label(body, placeholder, labels[i]));
  return acc;
}

namespace {

template <typename F>
void visit_nodes(const Term& t, F&& f) {
  f(t);
  for (const auto& a : t.args()) visit_nodes(a, f);
}

}  // namespace

std::set<std::string> free_variables(const Term& t) {
  std::set<std::string> vars;
  visit_nodes(t, [&](const Term& n) {
    if (n.op() == Op::Var) vars.insert(n.node().name);
  });
  return vars;
}

bool contains_op(const Term& t, Op op) { return count_op(t, op) > 0; }

std::size_t count_op(const Term& t, Op op) {
  std::size_t count = 0;
  visit_nodes(t, [&](const Term& n) { count += n.op() == op; });
  return count;
}

bool contains_literal(const Term& t, Kind kind) {
  bool found = false;
  visit_nodes(t, [&](const Term& n) { found |= n.is_constant() && n.node().constant.kind() == kind; });
  return found;
}

}  // namespace cmeadow
