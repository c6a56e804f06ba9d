#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace acats {

/// One failed axiom instance. `witness` lists the ids involved, in the
/// enumeration order of the axiom family (documented at each call site).
/// All checks are of the form lhs <= rhs + tolerance; `gap` is lhs - rhs.
struct Violation {
  std::string axiom;
  std::vector<std::string> witness;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
};

/// Result of an axiom sweep. Keeps a capped list of violations plus the
/// single worst offender per axiom family, which is what tests assert.
class ValidationReport {
 public:
  explicit ValidationReport(std::size_t witness_cap = kDefaultWitnessCap)
      : witness_cap_(witness_cap) {}

  void add(Violation v) {
    ++total_;
    ++counts_[v.axiom];
    auto it = worst_.find(v.axiom);
    if (it == worst_.end() || v.gap > it->second.gap) {
      worst_[v.axiom] = v;
    }
    if (violations_.size() < witness_cap_) {
      violations_.push_back(std::move(v));
    }
  }

  bool passed() const { return total_ == 0; }
  std::size_t total_violations() const { return total_; }
  const std::vector<Violation>& violations() const { return violations_; }
  const std::map<std::string, Violation>& worst() const { return worst_; }
  const std::map<std::string, std::size_t>& counts() const { return counts_; }

  /// Worst gap across all families; 0 when the report passed.
  double worst_gap() const {
    double g = 0.0;
    for (const auto& [name, v] : worst_) {
      if (v.gap > g) g = v.gap;
    }
    return g;
  }

  /// Merge another report into this one (cap still applies to the list).
  void absorb(const ValidationReport& other) {
    total_ += other.total_;
    for (const auto& [name, n] : other.counts_) counts_[name] += n;
    for (const auto& [name, v] : other.worst_) {
      auto it = worst_.find(name);
      if (it == worst_.end() || v.gap > it->second.gap) worst_[name] = v;
    }
    for (const auto& v : other.violations_) {
      if (violations_.size() >= witness_cap_) break;
      violations_.push_back(v);
    }
  }

  static constexpr std::size_t kDefaultWitnessCap = 20;

 private:
  std::size_t witness_cap_;
  std::size_t total_ = 0;
  std::vector<Violation> violations_;
  std::map<std::string, Violation> worst_;
  std::map<std::string, std::size_t> counts_;
};

}  // namespace acats
