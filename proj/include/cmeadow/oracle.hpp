#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cmeadow/term.hpp"
#include "cmeadow/value.hpp"

namespace cmeadow::oracle {

/// Finite set of values every variable ranges over during a check.
struct Grid {
  std::vector<ExactValue> values;

  /// {bot, -2, -1, -1/2, 0, 1/2, 1, 2}
  static Grid standard();
  /// standard() without bot.
  static Grid ordinary();
  /// Throws unless the grid holds bot, 0, a positive and a negative value.
  void validate() const;
};

using Assignment = std::vector<std::pair<std::string, ExactValue>>;

struct Counterexample {
  Assignment assignment;
  std::string lhs;
  std::string rhs;
};

struct Verdict {
  std::string name;
  bool pass = true;
  std::size_t checked = 0;
  std::optional<Counterexample> counterexample;
  std::string detail;
};

std::string describe(const Verdict& v);
std::string describe(const Assignment& a);

inline constexpr double kDefaultTolerance = 1e-9;

/// Evaluates both terms at every assignment of `vars` to grid values and
/// compares peripheral pattern first, then numbers (exactly on EXACT, within
/// `tolerance * max(1, |a|, |b|)` on APPROX). Evaluator errors fail the
/// verdict with the error text as detail.
Verdict equiv(const Term& lhs, const Term& rhs, const std::vector<std::string>& vars, const Grid& grid,
              Mode mode = Mode::Bottom, Carrier carrier = Carrier::Exact, double tolerance = kDefaultTolerance,
              std::string name = {});

/// Operators a generated term may use, plus the leaves available to it.
struct Signature {
  std::set<Op> ops;
  std::vector<std::string> variables{"x", "y", "z"};
  bool bottom_literal = true;

  /// +, neg, *, /, log2, cond, |*|, s
  static Signature full_bottom();
  /// +, neg, *, /
  static Signature field();
};

bool conforms(const Term& t, const Signature& sig);

/// Deterministic pseudo-random terms of depth at most max_depth. The same
/// seed yields the same terms on every platform.
std::vector<Term> random_terms(std::uint64_t seed, int max_depth, const Signature& sig, std::size_t count);

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t random_term_count = 1000;
  int random_term_depth = 4;
  double tolerance = kDefaultTolerance;
  unsigned threads = 0;  ///< 0 means hardware concurrency
};

/// Names accepted by run_suite(), in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Runs a named identity suite. "all" runs every suite. Throws
/// UnknownSuiteError for other names.
std::vector<Verdict> run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace cmeadow::oracle
