#pragma once

#include <map>
#include <string>
#include <vector>

#include "cmeadow/meadow_core.hpp"
#include "cmeadow/term.hpp"

namespace cmeadow {

/// Bindings for variables and function variables. Values are exact; the
/// APPROX carrier converts them on lookup.
class Environment {
 public:
  Environment& bind(std::string name, ExactValue value);
  /// Binds function variable `function` on the given labels.
  Environment& bind_function(std::string function, std::map<std::string, ExactValue> table);
  Environment& declare_labels(std::vector<std::string> labels);

  const ExactValue& variable(const std::string& name) const;
  const ExactValue& apply(const std::string& function, const std::string& label) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  std::map<std::string, ExactValue> vars_;
  std::map<std::string, std::map<std::string, ExactValue>> funs_;
  std::vector<std::string> labels_;
};

/// Structural evaluation. bot literals are rejected in Suppes-Ono mode and
/// signed infinities outside signed mode.
template <typename Num>
Value<Num> evaluate(const Term& t, const Environment& env, Mode mode);

extern template Value<Rational> evaluate<Rational>(const Term&, const Environment&, Mode);
extern template Value<double> evaluate<double>(const Term&, const Environment&, Mode);

MeadowValue eval(const Term& t, const Environment& env, Mode mode, Carrier carrier);

}  // namespace cmeadow
