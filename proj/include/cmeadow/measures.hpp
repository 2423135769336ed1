#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "cmeadow/evaluator.hpp"
#include "cmeadow/pmf.hpp"
#include "cmeadow/term.hpp"

namespace cmeadow {

// Information measures with total semantics. A measure is bot exactly when
// the classical definition is undefined (or infinite), e.g. cross-entropy
// with Q(x) = 0 where P(x) > 0.
//
// On the EXACT carrier the measures raise InexactError whenever a log2
// argument is not a power of two; dyadic distributions evaluate exactly.

/// -sum P(x) |*| log2 P(x)
MeadowValue entropy(const Pmf& p, Carrier carrier, Mode mode = Mode::Bottom);

/// -sum P(x) |*| log2 Q(x)
MeadowValue cross_entropy(const Pmf& p, const Pmf& q, Carrier carrier, Mode mode = Mode::Bottom);

/// sum P(x) |*| log2(P(x) / Q(x))
MeadowValue kl_divergence(const Pmf& p, const Pmf& q, Carrier carrier, Mode mode = Mode::Bottom);

/// KL(P || M) + KL(Q || M) with M = (P + Q) / 2. No 1/2 factors on the two
/// terms, so disjoint supports give 2 rather than 1.
MeadowValue js_divergence(const Pmf& p, const Pmf& q, Carrier carrier, Mode mode = Mode::Bottom);

/// sum P(x) |*| F(x). `f` must be defined on every label of `p`.
MeadowValue seq_expected_value(const Pmf& p, const std::map<std::string, ExactValue>& f, Carrier carrier,
                               Mode mode = Mode::Bottom);

/// How a measure is written as a term over alpha (and beta) on labels c1..cn.
enum class MeasureVariant {
  Direct,      ///< computed directly, not as a term
  SeqMul,      ///< -sum a |*| log2 b
  SeqMulDiv,   ///< sum a |*| log2(1/b)
  CompositeF,  ///< -sum f(a), f(x) = x |*| log2 x; entropy only
  SignChain,   ///< plain products guarded by s^2 and a chain of nonzero weights
  FXY,         ///< -sum f(a, b), f(x, y) = x |*| (log2(y*y)/2) + 0*y; cross-entropy only
};

std::string_view to_string(MeasureVariant v);
std::optional<MeasureVariant> parse_variant(std::string_view text);

/// Names of the function variables and the i-th sample-point label used by
/// every builder.
inline constexpr std::string_view kAlpha = "alpha";
inline constexpr std::string_view kBeta = "beta";
std::string sample_label(std::size_t i);  // 1-based: c1, c2, ...

Term build_entropy_term(std::size_t n, MeasureVariant variant);
Term build_cross_entropy_term(std::size_t n, MeasureVariant variant);
Term build_kl_term(std::size_t n);
Term build_js_term(std::size_t n);

/// x |*| log2 x
Term composite_f(const Term& x);
/// x |*| (log2(y*y) / 2) + 0*y
Term f_xy(const Term& x, const Term& y);
/// x * log2(y*y + 1 - s(x)*s(x)) / 2, the s^2 form of f_xy
Term f_xy_sign_form(const Term& x, const Term& y);

/// Binds alpha to P (and beta to Q when given) positionally on c1..cn.
Environment measure_environment(const Pmf& p, const Pmf* q = nullptr);

}  // namespace cmeadow
