#include <doctest.h>

#include <cmath>
#include <limits>

#include "helpers.hpp"

using namespace cmeadow;
using testing::ev;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("010") == Rational(10));
  CHECK(parse_rational("0.010") == Rational(1, 100));
  CHECK(parse_rational("+7/1") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1/-2"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("value rendering") {
  CHECK(format_value(ev("bot")) == "bot");
  CHECK(format_value(ev("+inf")) == "+inf");
  CHECK(format_value(ev("-inf")) == "-inf");
  CHECK(format_value(ev("-6/4")) == "-3/2");
  CHECK(format_value(ApproxValue::ordinary(0.1)) == "0.1");
  CHECK(format_value(ApproxValue::ordinary(-0.0)) == "0");
  CHECK(format_value(ApproxValue::ordinary(1.0 / 3)) == "0.333333333333");
}

TEST_CASE("approx values stay finite") {
  CHECK_THROWS_AS(ApproxValue::ordinary(std::numeric_limits<double>::infinity()), OverflowError);
  CHECK_THROWS_AS(ApproxValue::ordinary(std::nan("")), OverflowError);
}

TEST_CASE("agreement compares peripheral pattern before numbers") {
  MeadowValue a(ApproxValue::ordinary(1.0));
  MeadowValue b(ApproxValue::ordinary(1.0 + 1e-12));
  MeadowValue bot(ApproxValue::bottom());
  CHECK(values_agree(a, b, 1e-9));
  CHECK_FALSE(values_agree(a, b, 0.0));
  CHECK_FALSE(values_agree(a, bot, 1e9));
  CHECK(values_agree(bot, bot, 0.0));
  // Absolute near zero, relative for large magnitudes.
  CHECK(values_agree(MeadowValue(ApproxValue::ordinary(0.0)), MeadowValue(ApproxValue::ordinary(5e-10)), 1e-9));
  CHECK(values_agree(MeadowValue(ApproxValue::ordinary(1e6)), MeadowValue(ApproxValue::ordinary(1e6 + 1e-4)), 1e-9));
  CHECK_FALSE(values_agree(MeadowValue(ApproxValue::ordinary(1e6)), MeadowValue(ApproxValue::ordinary(1e6 + 1e-2)), 1e-9));
}

TEST_CASE("carriers do not mix") {
  MeadowValue e(ev("1"));
  MeadowValue a(ApproxValue::ordinary(1.0));
  CHECK(e.carrier() == Carrier::Exact);
  CHECK(a.carrier() == Carrier::Approx);
  CHECK_THROWS_AS(add(e, a, Mode::Bottom), Error);
}
