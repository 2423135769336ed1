#pragma once

#include <string>
#include <vector>

#include "cmeadow/term.hpp"

namespace cmeadow {

/// numerator / denominator with both parts division-free and free of bot
/// literals. They may still contain log2, cond, |*| and s.
struct FlatFracterm {
  Term numerator;
  Term denominator;

  Term to_term() const { return Term::div(numerator, denominator); }
};

/// Rewrites a bottom-mode term into a single flat fracterm, bottom-up and
/// left-to-right. No cancellation is performed. Throws IllegalValueError on
/// signed-infinity literals.
FlatFracterm flatten(const Term& t);

/// True when `t` is Div(p, q) with p and q division-free and bot-free.
bool is_flat_fracterm(const Term& t);

/// The combination steps used by flatten(), one per operator. Inputs are
/// flat fracterms; a denominator that is the literal 1 marks a child that was
/// not a fracterm, and the position-wise rules for cond, |*|, log2 and s are
/// skipped for it.
namespace combine {

FlatFracterm leaf(const Term& t);
FlatFracterm add(const FlatFracterm& a, const FlatFracterm& b);
FlatFracterm neg(const FlatFracterm& a);
FlatFracterm mul(const FlatFracterm& a, const FlatFracterm& b);
FlatFracterm div(const FlatFracterm& a, const FlatFracterm& b);
FlatFracterm log2(const FlatFracterm& a);
FlatFracterm sign(const FlatFracterm& a);
FlatFracterm cond(const FlatFracterm& x, const FlatFracterm& y, const FlatFracterm& z);
FlatFracterm seqmul(const FlatFracterm& x, const FlatFracterm& y);

}  // namespace combine

/// An equation lhs = rhs over the listed variables, as used by the flattener.
/// Each one is checked semantically over a grid before flattening is trusted.
struct RewriteRule {
  std::string name;
  std::vector<std::string> variables;
  Term lhs;
  Term rhs;
};

/// Every rewrite the flattener relies on, instantiated over fresh variables
/// by calling the same combination code that flatten() uses.
std::vector<RewriteRule> rewrite_rules();

}  // namespace cmeadow
