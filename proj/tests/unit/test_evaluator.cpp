#include <doctest.h>

#include "helpers.hpp"

using namespace cmeadow;
using testing::ev;
using testing::run;

TEST_CASE("closed terms") {
  CHECK(run("1/0") == "bot");
  CHECK(run("1/0 * 0") == "bot");
  CHECK(run("0 |*| (1/0)") == "0");
  CHECK(run("cond(1/0; 0; 7)") == "7");
  CHECK(run("2 - 3 * 4") == "-10");
  CHECK(run("log2(1/8)") == "-3");
  CHECK(run("log2(3)", Mode::Bottom, Carrier::Approx) == "1.58496250072");
  CHECK(run("1/3", Mode::Bottom, Carrier::Approx) == "0.333333333333");
}

TEST_CASE("variables and functions") {
  Environment env;
  env.bind("x", ev("1/2")).bind("y", ev("bot"));
  env.bind_function("alpha", {{"c1", ev("1/4")}, {"c2", ev("3/4")}});
  CHECK(eval(parse("x * 4"), env, Mode::Bottom, Carrier::Exact).to_string() == "2");
  CHECK(eval(parse("x + y"), env, Mode::Bottom, Carrier::Exact).to_string() == "bot");
  CHECK(eval(parse("alpha(c1) + alpha(c2)"), env, Mode::Bottom, Carrier::Exact).to_string() == "1");
  CHECK(eval(parse("x"), env, Mode::Bottom, Carrier::Approx).to_string() == "0.5");
  CHECK_THROWS_AS(eval(parse("z"), env, Mode::Bottom, Carrier::Exact), UnboundSymbolError);
  CHECK_THROWS_AS(eval(parse("alpha(c3)"), env, Mode::Bottom, Carrier::Exact), UnboundSymbolError);
  CHECK_THROWS_AS(eval(parse("beta(c1)"), env, Mode::Bottom, Carrier::Exact), UnboundSymbolError);
}

TEST_CASE("literals must be legal in the mode") {
  CHECK_THROWS_AS(run("bot + 1", Mode::SuppesOno), IllegalValueError);
  CHECK_THROWS_AS(run("+inf", Mode::Bottom), IllegalValueError);
  CHECK(run("+inf + 1", Mode::Signed) == "+inf");
  CHECK(run("1/0", Mode::SuppesOno) == "0");
}

TEST_CASE("exact log2 of non-powers of two is an error") {
  CHECK_THROWS_AS(run("log2(5)"), InexactError);
}

TEST_CASE("the approx carrier reports overflow") {
  Environment env;
  env.bind("x", ev("1000000000000000000000000000000000000000000000000000000000000000000000000000000000000"));
  Term t = parse("x * x * x * x * x * x * x * x * x * x * x * x * x * x * x * x * x * x * x * x");
  CHECK_THROWS_AS(eval(t, env, Mode::Bottom, Carrier::Approx), OverflowError);
  CHECK(eval(t, env, Mode::Bottom, Carrier::Exact).is_ordinary());
}
