#pragma once

#include <cstdint>
#include <string>
#include <type_traits>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "cmeadow/errors.hpp"

namespace cmeadow {

using Rational = mpq_class;

/// Semantic mode of an evaluation. Every operation runs under exactly one.
enum class Mode : std::uint8_t {
  Bottom,     ///< common meadow: 1/0 = bot, bot absorbs
  Signed,     ///< common meadow with signed peripherals +inf and -inf
  SuppesOno,  ///< 1/0 = 0, log2(x) = 0 for x <= 0, no peripherals
};

enum class Carrier : std::uint8_t {
  Exact,   ///< arbitrary-precision rationals
  Approx,  ///< IEEE double
};

enum class Kind : std::uint8_t { Ordinary, Bottom, PosInf, NegInf };

std::string_view to_string(Mode mode);
std::string_view to_string(Carrier carrier);

/// An element of the carrier: an ordinary number, bot, or a signed infinity.
/// Num is Rational for the EXACT carrier and double for APPROX. A double
/// payload is always finite.
template <typename Num>
class Value {
 public:
  Value() = default;

  static Value ordinary(Num n) {
    Value v;
    if constexpr (std::is_same_v<Num, double>) {
      if (!(n - n == 0.0)) throw OverflowError("approximate carrier produced a non-finite number");
      if (n == 0.0) n = 0.0;  // drop the sign of -0.0
    }
    v.num_ = std::move(n);
    return v;
  }
  static Value bottom() { return Value(Kind::Bottom); }
  static Value pos_inf() { return Value(Kind::PosInf); }
  static Value neg_inf() { return Value(Kind::NegInf); }

  Kind kind() const noexcept { return kind_; }
  bool is_ordinary() const noexcept { return kind_ == Kind::Ordinary; }
  bool is_bottom() const noexcept { return kind_ == Kind::Bottom; }
  bool is_infinite() const noexcept { return kind_ == Kind::PosInf || kind_ == Kind::NegInf; }
  bool is_peripheral() const noexcept { return kind_ != Kind::Ordinary; }

  /// Payload of an ordinary value; zero for peripherals.
  const Num& number() const noexcept { return num_; }

  bool is_zero() const { return is_ordinary() && num_ == 0; }

  friend bool operator==(const Value& a, const Value& b) {
    if (a.kind_ != b.kind_) return false;
    return !a.is_ordinary() || a.num_ == b.num_;
  }

 private:
  explicit Value(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Ordinary;
  Num num_ = Num(0);
};

using ExactValue = Value<Rational>;
using ApproxValue = Value<double>;

/// Parses the textual value forms: integers, `a/b`, terminating decimals,
/// `bot`, `+inf`, `-inf`.
ExactValue parse_exact_value(std::string_view text);
Rational parse_rational(std::string_view text);

std::string format_rational(const Rational& q);
std::string format_value(const ExactValue& v);
/// Ordinary approximate values print with 12 significant digits.
std::string format_value(const ApproxValue& v);

ApproxValue to_approx(const ExactValue& v);

/// A value tagged with its carrier; the carrier-erased surface of the library.
class MeadowValue {
 public:
  MeadowValue(ExactValue v) : v_(std::move(v)) {}
  MeadowValue(ApproxValue v) : v_(v) {}

  Carrier carrier() const noexcept { return v_.index() == 0 ? Carrier::Exact : Carrier::Approx; }
  Kind kind() const noexcept;
  bool is_bottom() const noexcept { return kind() == Kind::Bottom; }
  bool is_ordinary() const noexcept { return kind() == Kind::Ordinary; }

  const ExactValue& exact() const;
  const ApproxValue& approx() const;

  /// The ordinary payload as a double. Throws for peripherals.
  double to_double() const;

  std::string to_string() const;

  friend bool operator==(const MeadowValue& a, const MeadowValue& b) { return a.v_ == b.v_; }

 private:
  std::variant<ExactValue, ApproxValue> v_;
};

/// Peripheral pattern equality first, then numeric agreement within
/// `rel_tol * max(1, |a|, |b|)`. Exact values compare exactly when rel_tol is 0.
bool values_agree(const MeadowValue& a, const MeadowValue& b, double rel_tol);

}  // namespace cmeadow
