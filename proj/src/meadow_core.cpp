#include "cmeadow/meadow_core.hpp"

namespace cmeadow {

namespace detail {

long exact_log2(const Rational& q) {
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (mpz_popcount(num.get_mpz_t()) != 1 || mpz_popcount(den.get_mpz_t()) != 1)
    throw InexactError("log2(" + q.get_str() + ") is irrational; use the approximate carrier");
  return static_cast<long>(mpz_scan1(num.get_mpz_t(), 0)) -
         static_cast<long>(mpz_scan1(den.get_mpz_t(), 0));
}

}  // namespace detail

namespace {

template <typename F>
MeadowValue dispatch(const MeadowValue& a, F&& f) {
  if (a.carrier() == Carrier::Exact) return f(a.exact());
  return f(a.approx());
}

void require_same(const MeadowValue& a, const MeadowValue& b) {
  if (a.carrier() != b.carrier()) throw Error("operands live on different carriers");
}

}  // namespace

MeadowValue neg(const MeadowValue& a, Mode mode) {
  return dispatch(a, [&](const auto& x) { return MeadowValue(neg(x, mode)); });
}

MeadowValue log2(const MeadowValue& a, Mode mode) {
  return dispatch(a, [&](const auto& x) { return MeadowValue(log2(x, mode)); });
}

MeadowValue sign(const MeadowValue& a, Mode mode) {
  return dispatch(a, [&](const auto& x) { return MeadowValue(sign(x, mode)); });
}

#define CMEADOW_BINARY(name)                                                 \
  MeadowValue name(const MeadowValue& a, const MeadowValue& b, Mode mode) {  \
    require_same(a, b);                                                      \
    if (a.carrier() == Carrier::Exact) return name(a.exact(), b.exact(), mode); \
    return name(a.approx(), b.approx(), mode);                               \
  }

CMEADOW_BINARY(add)
CMEADOW_BINARY(mul)
CMEADOW_BINARY(div)
CMEADOW_BINARY(seqmul)

#undef CMEADOW_BINARY

MeadowValue cond(const MeadowValue& x, const MeadowValue& y, const MeadowValue& z, Mode mode) {
  require_same(x, y);
  require_same(y, z);
  if (x.carrier() == Carrier::Exact) return cond(x.exact(), y.exact(), z.exact(), mode);
  return cond(x.approx(), y.approx(), z.approx(), mode);
}

}  // namespace cmeadow
