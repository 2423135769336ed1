#include "cmeadow/events.hpp"

#include "cmeadow/meadow_core.hpp"

namespace cmeadow {

EventSpace::EventSpace(Pmf pmf) : pmf_(std::move(pmf)) {
  if (pmf_.size() > kMaxOutcomes) throw Error("event spaces are limited to 64 outcomes");
}

Event EventSpace::everything() const {
  return Event(outcomes() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << outcomes()) - 1);
}

Event EventSpace::event(const std::vector<std::string>& labels) const {
  std::uint64_t mask = 0;
  for (const auto& l : labels) {
    bool found = false;
    for (std::size_t i = 0; i < outcomes(); ++i) {
      if (pmf_.label(i) == l) {
        mask |= std::uint64_t{1} << i;
        found = true;
      }
    }
    if (!found) throw LabelMismatchError("outcome " + l + " is not in the event space");
  }
  return Event(mask);
}

void EventSpace::check(Event a) const {
  if (a.mask() & ~everything().mask()) throw LabelMismatchError("event refers to outcomes outside the space");
}

std::string EventSpace::describe(Event a) const {
  std::string out = "{";
  for (std::size_t i = 0; i < outcomes(); ++i) {
    if (!a.contains(i)) continue;
    if (out.size() > 1) out += ",";
    out += pmf_.label(i);
  }
  return out + "}";
}

Rational EventSpace::prob(Event a) const {
  check(a);
  Rational total = 0;
  for (std::size_t i = 0; i < outcomes(); ++i)
    if (a.contains(i)) total += pmf_.weight(i);
  return total;
}

ExactValue EventSpace::cond_prob(Event a, Event b) const {
  return div(ExactValue::ordinary(prob(a & b)), ExactValue::ordinary(prob(b)), Mode::Bottom);
}

ExactValue EventSpace::bayes_rhs(Event a, Event b) const {
  auto pa = ExactValue::ordinary(prob(a));
  auto pb = ExactValue::ordinary(prob(b));
  return div(mul(cond_prob(b, a), pa, Mode::Bottom), pb, Mode::Bottom);
}

BayesReport bayes_check(const EventSpace& space) {
  if (space.outcomes() > 10) throw Error("exhaustive Bayes check is limited to 10 outcomes");
  BayesReport report;
  const std::uint64_t count = space.everything().mask() + 1;
  for (std::uint64_t am = 0; am < count; ++am) {
    for (std::uint64_t bm = 0; bm < count; ++bm) {
      Event a(am), b(bm);
      ++report.pairs;
      ExactValue lhs = space.cond_prob(a, b);
      ExactValue rhs = space.bayes_rhs(a, b);
      bool guard = space.prob(a) != 0 || space.prob(b) == 0;
      if (guard) ++report.guarded_pairs;
      if (lhs == rhs) continue;
      (guard ? report.guarded_failures : report.unguarded_differences).push_back({a, b, lhs, rhs});
    }
  }
  return report;
}

}  // namespace cmeadow
