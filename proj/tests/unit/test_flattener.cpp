#include <doctest.h>

#include "cmeadow/flattener.hpp"
#include "cmeadow/oracle.hpp"
#include "helpers.hpp"

using namespace cmeadow;

namespace {

bool flat_and_sound(const std::string& text) {
  Term t = parse(text);
  Term f = flatten(t).to_term();
  if (!is_flat_fracterm(f)) return false;
  auto vars = free_variables(t);
  Carrier c = contains_op(t, Op::Log2) ? Carrier::Approx : Carrier::Exact;
  return oracle::equiv(t, f, {vars.begin(), vars.end()}, oracle::Grid::standard(), Mode::Bottom, c).pass;
}

}  // namespace

TEST_CASE("leaves") {
  CHECK(print(flatten(parse("x")).to_term()) == "x/1");
  CHECK(print(flatten(parse("bot")).to_term()) == "1/0");
  CHECK_THROWS_AS(flatten(parse("+inf")), IllegalValueError);
}

TEST_CASE("field operations") {
  FlatFracterm f = flatten(parse("x/y + 1/z"));
  CHECK(print(f.numerator) == "x * z + y");
  CHECK(print(f.denominator) == "y * z");
  CHECK(flat_and_sound("x/y + 1/z"));
  CHECK(flat_and_sound("(x/y) / (z/x)"));
  CHECK(flat_and_sound("1/(1/x)"));
  CHECK(flat_and_sound("-(x/y) * (y/z)"));
}

TEST_CASE("extended operators") {
  CHECK(flat_and_sound("log2(x/y)"));
  CHECK(flat_and_sound("s(x/y)"));
  CHECK(flat_and_sound("s(1/x) * s(1/x)"));
  CHECK(flat_and_sound("cond(x/y; y/z; z/x)"));
  CHECK(flat_and_sound("(x/y) |*| (z/x)"));
  CHECK(flat_and_sound("0 |*| (1/0)"));
  CHECK(flat_and_sound("cond(1/0; 0; x)"));
  CHECK(flat_and_sound("(1/x) |*| log2(y/z)"));
}

TEST_CASE("flat fracterm shape") {
  CHECK(is_flat_fracterm(parse("(x + 1) / y")));
  CHECK_FALSE(is_flat_fracterm(parse("x + 1")));
  CHECK_FALSE(is_flat_fracterm(parse("x / (y / z)")));
  CHECK_FALSE(is_flat_fracterm(parse("x / bot")));
  Term f = flatten(parse("cond(x/y; 1/z; 2) |*| log2(x/3)")).to_term();
  CHECK(count_op(f, Op::Div) == 1);
  CHECK_FALSE(contains_literal(f, Kind::Bottom));
}

TEST_CASE("every rewrite rule holds on the grid") {
  for (const auto& rule : rewrite_rules()) {
    Carrier c = contains_op(rule.rhs, Op::Log2) ? Carrier::Approx : Carrier::Exact;
    auto v = oracle::equiv(rule.lhs, rule.rhs, rule.variables, oracle::Grid::standard(), Mode::Bottom, c);
    CHECK_MESSAGE(v.pass, rule.name);
  }
}

TEST_CASE("a wrong rule is caught") {
  // Dropping the extra factor of the divisor's denominator loses the case where it is 0.
  Term lhs = parse("(p/q) / (r/t)");
  Term rhs = parse("(p * t) / (q * r)");
  auto v = oracle::equiv(lhs, rhs, {"p", "q", "r", "t"}, oracle::Grid::standard());
  CHECK_FALSE(v.pass);
  REQUIRE(v.counterexample);
}
