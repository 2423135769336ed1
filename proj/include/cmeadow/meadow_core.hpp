#pragma once

// Totalized operations of the three semantic modes. All operations are pure
// and total; the only exceptions are carrier errors (EXACT log2 of a
// non-power-of-two, APPROX overflow) and values illegal for the mode.

#include <cmath>
#include <type_traits>

#include "cmeadow/value.hpp"

namespace cmeadow {

namespace detail {

template <typename Num>
int sign_of(const Num& n) {
  if constexpr (std::is_same_v<Num, double>) {
    return (n > 0.0) - (n < 0.0);
  } else {
    return sgn(n);
  }
}

/// Returns k when q == 2^k, otherwise throws InexactError. q must be positive.
long exact_log2(const Rational& q);

}  // namespace detail

template <typename Num>
void require_legal(const Value<Num>& v, Mode mode) {
  if (v.is_infinite() && mode != Mode::Signed)
    throw IllegalValueError("signed infinity used outside signed mode");
  if (v.is_bottom() && mode == Mode::SuppesOno)
    throw IllegalValueError("bot does not exist in Suppes-Ono mode");
}

template <typename Num>
Value<Num> neg(const Value<Num>& a, Mode mode) {
  require_legal(a, mode);
  switch (a.kind()) {
    case Kind::Ordinary: return Value<Num>::ordinary(-a.number());
    case Kind::Bottom: return a;
    case Kind::PosInf: return Value<Num>::neg_inf();
    case Kind::NegInf: return Value<Num>::pos_inf();
  }
  return Value<Num>::bottom();
}

template <typename Num>
Value<Num> add(const Value<Num>& a, const Value<Num>& b, Mode mode) {
  require_legal(a, mode);
  require_legal(b, mode);
  if (a.is_bottom() || b.is_bottom()) return Value<Num>::bottom();
  if (a.is_ordinary() && b.is_ordinary()) return Value<Num>::ordinary(a.number() + b.number());
  // At least one signed infinity.
  if (a.is_infinite() && b.is_infinite())
    return a.kind() == b.kind() ? a : Value<Num>::bottom();
  return a.is_infinite() ? a : b;
}

template <typename Num>
Value<Num> sub(const Value<Num>& a, const Value<Num>& b, Mode mode) {
  return add(a, neg(b, mode), mode);
}

template <typename Num>
Value<Num> mul(const Value<Num>& a, const Value<Num>& b, Mode mode) {
  require_legal(a, mode);
  require_legal(b, mode);
  if (a.is_bottom() || b.is_bottom()) return Value<Num>::bottom();
  if (a.is_ordinary() && b.is_ordinary()) return Value<Num>::ordinary(a.number() * b.number());
  auto sign = [](const Value<Num>& v) {
    switch (v.kind()) {
      case Kind::PosInf: return 1;
      case Kind::NegInf: return -1;
      default: return detail::sign_of(v.number());
    }
  };
  int s = sign(a) * sign(b);
  if (s == 0) return Value<Num>::ordinary(Num(0));  // 0 * inf = 0
  return s > 0 ? Value<Num>::pos_inf() : Value<Num>::neg_inf();
}

/// Multiplicative inverse: 1/0 = bot and 1/(+-inf) = bot; Suppes-Ono 1/0 = 0.
template <typename Num>
Value<Num> inv(const Value<Num>& a, Mode mode) {
  require_legal(a, mode);
  if (!a.is_ordinary()) return Value<Num>::bottom();
  if (a.number() == 0)
    return mode == Mode::SuppesOno ? Value<Num>::ordinary(Num(0)) : Value<Num>::bottom();
  return Value<Num>::ordinary(Num(1) / a.number());
}

template <typename Num>
Value<Num> div(const Value<Num>& a, const Value<Num>& b, Mode mode) {
  return mul(a, inv(b, mode), mode);
}

template <typename Num>
Value<Num> log2(const Value<Num>& a, Mode mode) {
  require_legal(a, mode);
  if (!a.is_ordinary()) return Value<Num>::bottom();
  int s = detail::sign_of(a.number());
  if (s <= 0) {
    switch (mode) {
      case Mode::Bottom: return Value<Num>::bottom();
      case Mode::SuppesOno: return Value<Num>::ordinary(Num(0));
      case Mode::Signed: return s == 0 ? Value<Num>::neg_inf() : Value<Num>::bottom();
    }
  }
  if constexpr (std::is_same_v<Num, double>) {
    return Value<Num>::ordinary(std::log2(a.number()));
  } else {
    return Value<Num>::ordinary(Rational(detail::exact_log2(a.number())));
  }
}

/// x <| y |> z: z when y = 0, x when y is nonzero (ordinary or infinite), bot when y = bot.
template <typename Num>
Value<Num> cond(const Value<Num>& x, const Value<Num>& y, const Value<Num>& z, Mode mode) {
  require_legal(x, mode);
  require_legal(y, mode);
  require_legal(z, mode);
  if (y.is_bottom()) return y;
  return y.is_zero() ? z : x;
}

/// Left-sequential multiplication, (x * y) <| x |> 0.
template <typename Num>
Value<Num> seqmul(const Value<Num>& x, const Value<Num>& y, Mode mode) {
  return cond(mul(x, y, mode), x, Value<Num>::ordinary(Num(0)), mode);
}

template <typename Num>
Value<Num> sign(const Value<Num>& a, Mode mode) {
  require_legal(a, mode);
  switch (a.kind()) {
    case Kind::Ordinary: return Value<Num>::ordinary(Num(detail::sign_of(a.number())));
    case Kind::Bottom: return a;
    case Kind::PosInf: return Value<Num>::ordinary(Num(1));
    case Kind::NegInf: return Value<Num>::ordinary(Num(-1));
  }
  return Value<Num>::bottom();
}

// Carrier-erased overloads. Mixing carriers in one call is an error.
MeadowValue add(const MeadowValue& a, const MeadowValue& b, Mode mode);
MeadowValue neg(const MeadowValue& a, Mode mode);
MeadowValue mul(const MeadowValue& a, const MeadowValue& b, Mode mode);
MeadowValue div(const MeadowValue& a, const MeadowValue& b, Mode mode);
MeadowValue log2(const MeadowValue& a, Mode mode);
MeadowValue cond(const MeadowValue& x, const MeadowValue& y, const MeadowValue& z, Mode mode);
MeadowValue seqmul(const MeadowValue& x, const MeadowValue& y, Mode mode);
MeadowValue sign(const MeadowValue& a, Mode mode);

}  // namespace cmeadow
