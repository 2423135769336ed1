#pragma once

#include <string>

#include "cmeadow/evaluator.hpp"

namespace testing {

inline cmeadow::ExactValue ev(const char* text) { return cmeadow::parse_exact_value(text); }

/// Evaluates a closed term and renders the result.
inline std::string run(const std::string& text, cmeadow::Mode mode = cmeadow::Mode::Bottom,
                       cmeadow::Carrier carrier = cmeadow::Carrier::Exact) {
  return cmeadow::eval(cmeadow::parse(text), cmeadow::Environment{}, mode, carrier).to_string();
}

}  // namespace testing
