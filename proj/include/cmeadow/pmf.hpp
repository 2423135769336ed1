#pragma once

#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "cmeadow/value.hpp"

namespace cmeadow {

/// Finite probability mass function with exact weights. Labels are distinct,
/// weights are non-negative and sum to exactly 1.
class Pmf {
 public:
  using Entry = std::pair<std::string, Rational>;

  explicit Pmf(std::vector<Entry> entries);

  /// Labels c1..cn in order.
  static Pmf from_weights(const std::vector<Rational>& weights);

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  const std::string& label(std::size_t i) const { return entries_.at(i).first; }
  const Rational& weight(std::size_t i) const { return entries_.at(i).second; }
  const Rational& weight(const std::string& label) const;
  std::vector<std::string> labels() const;

  /// Same entries reordered: result[i] = this[order[i]].
  Pmf permuted(const std::vector<std::size_t>& order) const;

  friend bool operator==(const Pmf& a, const Pmf& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<Entry> entries_;
};

/// Reads `label<TAB>weight` lines; `#` starts a comment line, blank lines are
/// skipped. Weights are `a/b`, integers, or terminating decimals.
Pmf read_pmf_tsv(std::istream& in);
Pmf load_pmf(const std::string& path);
std::string write_pmf_tsv(const Pmf& pmf);

/// Every Pmf on n labels whose weights are multiples of 1/denominator.
std::vector<Pmf> enumerate_pmfs(std::size_t n, unsigned denominator);

/// Throws LabelMismatchError unless both have the same ordered labels.
void require_same_labels(const Pmf& p, const Pmf& q);

}  // namespace cmeadow
