#include "cmeadow/value.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>

namespace cmeadow {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::Bottom: return "bot";
    case Mode::Signed: return "signed";
    case Mode::SuppesOno: return "suppes";
  }
  return "?";
}

std::string_view to_string(Carrier carrier) {
  return carrier == Carrier::Exact ? "exact" : "approx";
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational q;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw Error("malformed rational: " + std::string(text));
    mpz_class d{std::string(den), 10};
    if (d == 0) throw Error("zero denominator in rational literal: " + std::string(text));
    q = Rational(mpz_class(std::string(num), 10), d);
    q.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw Error("malformed decimal: " + std::string(text));
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class digits{std::string(whole.empty() ? "0" : whole) + std::string(frac), 10};
    q = Rational(digits, scale);
    q.canonicalize();
  } else {
    if (!all_digits(body)) throw Error("malformed number: " + std::string(text));
    q = Rational(mpz_class(std::string(body), 10));
  }
  return negative ? Rational(-q) : q;
}

ExactValue parse_exact_value(std::string_view text) {
  if (text == "bot") return ExactValue::bottom();
  if (text == "+inf") return ExactValue::pos_inf();
  if (text == "-inf") return ExactValue::neg_inf();
  return ExactValue::ordinary(parse_rational(text));
}

std::string format_rational(const Rational& q) { return q.get_str(); }

std::string format_value(const ExactValue& v) {
  switch (v.kind()) {
    case Kind::Bottom: return "bot";
    case Kind::PosInf: return "+inf";
    case Kind::NegInf: return "-inf";
    case Kind::Ordinary: break;
  }
  return format_rational(v.number());
}

std::string format_value(const ApproxValue& v) {
  switch (v.kind()) {
    case Kind::Bottom: return "bot";
    case Kind::PosInf: return "+inf";
    case Kind::NegInf: return "-inf";
    case Kind::Ordinary: break;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v.number());
  return buf;
}

ApproxValue to_approx(const ExactValue& v) {
  switch (v.kind()) {
    case Kind::Bottom: return ApproxValue::bottom();
    case Kind::PosInf: return ApproxValue::pos_inf();
    case Kind::NegInf: return ApproxValue::neg_inf();
    case Kind::Ordinary: break;
  }
  return ApproxValue::ordinary(v.number().get_d());
}

Kind MeadowValue::kind() const noexcept {
  return std::visit([](const auto& v) { return v.kind(); }, v_);
}

const ExactValue& MeadowValue::exact() const {
  if (const auto* e = std::get_if<ExactValue>(&v_)) return *e;
  throw Error("value is on the approximate carrier");
}

const ApproxValue& MeadowValue::approx() const {
  if (const auto* a = std::get_if<ApproxValue>(&v_)) return *a;
  throw Error("value is on the exact carrier");
}

double MeadowValue::to_double() const {
  if (!is_ordinary()) throw Error("peripheral value " + to_string() + " has no numeric payload");
  if (const auto* e = std::get_if<ExactValue>(&v_)) return e->number().get_d();
  return std::get<ApproxValue>(v_).number();
}

std::string MeadowValue::to_string() const {
  return std::visit([](const auto& v) { return format_value(v); }, v_);
}

bool values_agree(const MeadowValue& a, const MeadowValue& b, double rel_tol) {
  if (a.kind() != b.kind()) return false;
  if (!a.is_ordinary()) return true;
  if (a.carrier() == Carrier::Exact && b.carrier() == Carrier::Exact && rel_tol == 0.0)
    return a.exact().number() == b.exact().number();
  if (a.carrier() == Carrier::Exact && b.carrier() == Carrier::Exact &&
      a.exact().number() == b.exact().number())
    return true;
  double x = a.to_double();
  double y = b.to_double();
  double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
  return std::fabs(x - y) <= rel_tol * scale;
}

}  // namespace cmeadow
