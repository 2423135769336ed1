#include "cmeadow/pmf.hpp"

#include <fstream>
#include <functional>
#include <sstream>
#include <unordered_set>

namespace cmeadow {

Pmf::Pmf(std::vector<Entry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidPmfError("a probability mass function needs at least one label");
  std::unordered_set<std::string> seen;
  Rational total = 0;
  for (const auto& [label, w] : entries_) {
    if (label.empty()) throw InvalidPmfError("empty label");
    if (!seen.insert(label).second) throw InvalidPmfError("duplicate label: " + label);
    if (w < 0) throw InvalidPmfError("negative weight for " + label + ": " + w.get_str());
    total += w;
  }
  if (total != 1) throw InvalidPmfError("weights sum to " + total.get_str() + ", not 1");
}

Pmf Pmf::from_weights(const std::vector<Rational>& weights) {
  std::vector<Entry> entries;
  entries.reserve(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) entries.emplace_back("c" + std::to_string(i + 1), weights[i]);
  return Pmf(std::move(entries));
}

const Rational& Pmf::weight(const std::string& label) const {
  for (const auto& e : entries_)
    if (e.first == label) return e.second;
  throw LabelMismatchError("unknown label: " + label);
}

std::vector<std::string> Pmf::labels() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.first);
  return out;
}

Pmf Pmf::permuted(const std::vector<std::size_t>& order) const {
  if (order.size() != entries_.size()) throw Error("permutation has the wrong length");
  std::vector<Entry> out;
  out.reserve(order.size());
  for (auto i : order) out.push_back(entries_.at(i));
  return Pmf(std::move(out));
}

Pmf read_pmf_tsv(std::istream& in) {
  std::vector<Pmf::Entry> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw InvalidPmfError("line " + std::to_string(lineno) + ": expected label<TAB>weight");
    std::string label = line.substr(0, tab);
    std::string weight = line.substr(tab + 1);
    try {
      entries.emplace_back(label, parse_rational(weight));
    } catch (const InvalidPmfError&) {
      throw;
    } catch (const Error& e) {
      throw InvalidPmfError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return Pmf(std::move(entries));
}

Pmf load_pmf(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidPmfError("cannot open " + path);
  return read_pmf_tsv(in);
}

std::string write_pmf_tsv(const Pmf& pmf) {
  std::ostringstream out;
  for (const auto& [label, w] : pmf.entries()) out << label << '\t' << w.get_str() << '\n';
  return out.str();
}

std::vector<Pmf> enumerate_pmfs(std::size_t n, unsigned denominator) {
  std::vector<Pmf> out;
  std::vector<unsigned> parts(n, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == n) {
      parts[i] = left;
      std::vector<Rational> w;
      for (auto k : parts) {
        Rational q(k, denominator);
        q.canonicalize();
        w.push_back(q);
      }
      out.push_back(Pmf::from_weights(w));
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      parts[i] = k;
      rec(i + 1, left - k);
    }
  };
  if (n > 0) rec(0, denominator);
  return out;
}

void require_same_labels(const Pmf& p, const Pmf& q) {
  if (p.size() != q.size()) throw LabelMismatchError("distributions have different sizes");
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.label(i) != q.label(i))
      throw LabelMismatchError("label mismatch at position " + std::to_string(i + 1) + ": " + p.label(i) +
                               " vs " + q.label(i));
}

}  // namespace cmeadow
