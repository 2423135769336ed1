#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cmeadow/pmf.hpp"
#include "cmeadow/value.hpp"

namespace cmeadow {

/// Subset of the outcomes of an event space, one bit per outcome.
class Event {
 public:
  Event() = default;
  explicit Event(std::uint64_t mask) : mask_(mask) {}

  std::uint64_t mask() const noexcept { return mask_; }
  bool contains(std::size_t outcome) const noexcept { return (mask_ >> outcome) & 1u; }

  friend Event operator&(Event a, Event b) { return Event(a.mask_ & b.mask_); }
  friend Event operator|(Event a, Event b) { return Event(a.mask_ | b.mask_); }
  friend bool operator==(Event a, Event b) { return a.mask_ == b.mask_; }

 private:
  std::uint64_t mask_ = 0;
};

/// Finite outcome set (the labels of a Pmf) with its powerset as events.
class EventSpace {
 public:
  static constexpr std::size_t kMaxOutcomes = 64;

  explicit EventSpace(Pmf pmf);

  const Pmf& pmf() const noexcept { return pmf_; }
  std::size_t outcomes() const noexcept { return pmf_.size(); }

  Event event(const std::vector<std::string>& labels) const;
  Event everything() const;
  Event nothing() const { return Event(); }
  Event complement(Event a) const { return Event(~a.mask() & everything().mask()); }
  std::string describe(Event a) const;

  Rational prob(Event a) const;
  /// P(A and B) / P(B) with meadow division: bot iff P(B) = 0.
  ExactValue cond_prob(Event a, Event b) const;
  /// P(B|A) * P(A) / P(B)
  ExactValue bayes_rhs(Event a, Event b) const;

 private:
  void check(Event a) const;

  Pmf pmf_;
};

struct BayesPair {
  Event a;
  Event b;
  ExactValue lhs;
  ExactValue rhs;
};

struct BayesReport {
  std::size_t pairs = 0;
  std::size_t guarded_pairs = 0;
  /// Pairs satisfying P(A) != 0 or P(B) = 0 where the two sides differ. Always
  /// empty when the guarded identity holds.
  std::vector<BayesPair> guarded_failures;
  /// Pairs outside the guard where the two sides differ.
  std::vector<BayesPair> unguarded_differences;

  bool ok() const noexcept { return guarded_failures.empty(); }
};

/// Checks P(A|B) = P(B|A) * P(A) / P(B) for every ordered pair of events.
/// Exhaustive, so limited to spaces with at most 10 outcomes.
BayesReport bayes_check(const EventSpace& space);

}  // namespace cmeadow
