#include <doctest.h>

#include "helpers.hpp"

using namespace cmeadow;
using testing::ev;

namespace {
const Mode B = Mode::Bottom;
const Mode S = Mode::Signed;
const Mode SO = Mode::SuppesOno;
}  // namespace

TEST_CASE("division by zero is bot and bot absorbs") {
  CHECK(div(ev("1"), ev("0"), B).is_bottom());
  CHECK(div(ev("0"), ev("0"), B).is_bottom());
  CHECK(add(ev("bot"), ev("3"), B).is_bottom());
  CHECK(mul(ev("0"), ev("bot"), B).is_bottom());
  CHECK(neg(ev("bot"), B).is_bottom());
  CHECK(inv(ev("bot"), B).is_bottom());
  CHECK(div(ev("3"), ev("4"), B) == ev("3/4"));
}

TEST_CASE("log2 on the exact carrier") {
  CHECK(log2(ev("8"), B) == ev("3"));
  CHECK(log2(ev("1/4"), B) == ev("-2"));
  CHECK(log2(ev("1"), B) == ev("0"));
  CHECK(log2(ev("0"), B).is_bottom());
  CHECK(log2(ev("-4"), B).is_bottom());
  CHECK_THROWS_AS(log2(ev("3"), B), InexactError);
  CHECK_THROWS_AS(log2(ev("3/4"), B), InexactError);
  CHECK(detail::exact_log2(Rational(1, 1024)) == -10);
}

TEST_CASE("log2 on the approx carrier") {
  auto r = log2(ApproxValue::ordinary(3.0), B);
  CHECK(r.number() == doctest::Approx(1.584962500721156));
  CHECK(log2(ApproxValue::ordinary(0.0), B).is_bottom());
}

TEST_CASE("conditional and left-sequential multiplication") {
  CHECK(cond(ev("bot"), ev("0"), ev("1"), B) == ev("1"));
  CHECK(cond(ev("5"), ev("-2"), ev("9"), B) == ev("5"));
  CHECK(cond(ev("5"), ev("bot"), ev("9"), B).is_bottom());
  CHECK(cond(ev("bot"), ev("1"), ev("9"), B).is_bottom());
  CHECK(seqmul(ev("0"), ev("bot"), B) == ev("0"));
  CHECK(seqmul(ev("bot"), ev("0"), B).is_bottom());
  CHECK(seqmul(ev("2"), ev("bot"), B).is_bottom());
  CHECK(seqmul(ev("2"), ev("3"), B) == ev("6"));
}

TEST_CASE("sign") {
  CHECK(sign(ev("-1/3"), B) == ev("-1"));
  CHECK(sign(ev("0"), B) == ev("0"));
  CHECK(sign(ev("7"), B) == ev("1"));
  CHECK(sign(ev("bot"), B).is_bottom());
  CHECK(sign(ev("+inf"), S) == ev("1"));
  CHECK(sign(ev("-inf"), S) == ev("-1"));
}

TEST_CASE("signed infinities") {
  CHECK(div(ev("1"), ev("0"), S).is_bottom());
  CHECK(add(ev("+inf"), ev("-inf"), S).is_bottom());
  CHECK(add(ev("-inf"), ev("-inf"), S) == ev("-inf"));
  CHECK(add(ev("2"), ev("-inf"), S) == ev("-inf"));
  CHECK(mul(ev("0"), ev("+inf"), S) == ev("0"));
  CHECK(mul(ev("-inf"), ev("-inf"), S) == ev("+inf"));
  CHECK(mul(ev("-inf"), ev("+inf"), S) == ev("-inf"));
  CHECK(mul(ev("-1/2"), ev("-inf"), S) == ev("+inf"));
  CHECK(div(ev("3"), ev("-inf"), S).is_bottom());
  CHECK(div(ev("+inf"), ev("2"), S) == ev("+inf"));
  CHECK(log2(ev("0"), S) == ev("-inf"));
  CHECK(log2(ev("-1"), S).is_bottom());
  CHECK(log2(ev("+inf"), S).is_bottom());
  CHECK(add(ev("bot"), ev("+inf"), S).is_bottom());
  CHECK(seqmul(ev("0"), ev("+inf"), S) == ev("0"));
  CHECK(cond(ev("4"), ev("-inf"), ev("5"), S) == ev("4"));
}

TEST_CASE("infinities are illegal outside signed mode") {
  CHECK_THROWS_AS(add(ev("+inf"), ev("1"), B), IllegalValueError);
  CHECK_THROWS_AS(neg(ev("-inf"), SO), IllegalValueError);
}

TEST_CASE("Suppes-Ono totalization") {
  CHECK(div(ev("5"), ev("0"), SO) == ev("0"));
  CHECK(log2(ev("0"), SO) == ev("0"));
  CHECK(log2(ev("-8"), SO) == ev("0"));
  CHECK(log2(ev("8"), SO) == ev("3"));
  CHECK(seqmul(ev("0"), ev("3"), SO) == ev("0"));
  CHECK_THROWS_AS(add(ev("bot"), ev("1"), SO), IllegalValueError);
}

TEST_CASE("subtraction") {
  CHECK(sub(ev("2"), ev("5"), B) == ev("-3"));
  CHECK(sub(ev("+inf"), ev("+inf"), S).is_bottom());
}
