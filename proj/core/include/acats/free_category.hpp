#pragma once

#include <map>
#include <string>
#include <vector>

#include "acats/ac_structure.hpp"
#include "acats/metrized_category.hpp"
#include "acats/report.hpp"

namespace acats {

/// A composable arrow sequence, i.e. a morphism of the free category on
/// the structure's graph. A length-0 word carries only its base object.
struct PathWord {
  ObjectIdx base = 0;
  std::vector<ArrowIdx> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  bool operator==(const PathWord& other) const {
    return base == other.base && arrows == other.arrows;
  }
  bool operator<(const PathWord& other) const {
    if (base != other.base) return base < other.base;
    return arrows < other.arrows;
  }
};

/// Builds a word from ids, checking the composability chain.
PathWord make_word(const ACStructure& ac, std::string_view base_object,
                   const std::vector<std::string>& arrow_ids);

ObjectIdx word_src(const ACStructure& ac, const PathWord& w);
ObjectIdx word_dst(const ACStructure& ac, const PathWord& w);
std::string word_to_string(const ACStructure& ac, const PathWord& w);

/// Concatenation; unit laws with the empty word are exact.
PathWord concat(const ACStructure& ac, const PathWord& a, const PathWord& b);

struct MoveGraphConfig {
  int max_len = 4;
};

struct WeightedMove {
  PathWord word;
  double cost = 0.0;
};

/// Every word reachable from w by one rewrite, with its cost:
/// contracting an adjacent pair (f, g) to any h (cost d(f, g, h)),
/// expanding one letter h to any pair (f, g) (same cost), or inserting or
/// deleting an identity letter (cost 0). Words longer than max_len are
/// not emitted.
std::vector<WeightedMove> elementary_moves(const ACStructure& ac, const PathWord& w,
                                           int max_len);

enum class EstimateKind { kExact, kUpperBoundAtLength };

struct DistanceEstimate {
  double value = 0.0;
  EstimateKind kind = EstimateKind::kUpperBoundAtLength;
};

/// Cheapest rewrite chain between two parallel words through words of
/// length <= max_len (Dijkstra over the implicit move graph). The value
/// upper-bounds the maximal functorial distance, is nonincreasing in
/// max_len, and is +infinity when no chain exists within the bound.
DistanceEstimate dmax_estimate(const ACStructure& ac, const PathWord& a,
                               const PathWord& b, const MoveGraphConfig& cfg);

/// One search: distances from the word a to every single-letter word (h)
/// with h parallel to a. Returns pairs (h, estimate) sorted by h.
std::vector<std::pair<ArrowIdx, DistanceEstimate>> dmax_to_hom(
    const ACStructure& ac, const PathWord& a, const MoveGraphConfig& cfg);

struct EmbeddingCheck {
  ValidationReport report;
  bool absolutely_transitive = false;
  bool graph_composable = false;
  /// Per composable triple: [f, g, h] ids, the table value, the rewrite
  /// estimate, and the representable lower bound.
  struct Row {
    std::string f, g, h;
    double table_value = 0.0;
    double estimate = 0.0;
    double lower_bound = 0.0;
  };
  std::vector<Row> rows;
};

/// For every composable triple, compares the rewrite estimate of
/// d((f,g),(h)) against the table value d(f, g, h): the estimate never
/// exceeds the table value (within tolerance) and, on absolutely
/// transitive graph-composable structures, matches it and the
/// representable lower bound within strict_tolerance.
EmbeddingCheck verify_embedding(const ACStructure& ac, const MoveGraphConfig& cfg,
                                double strict_tolerance = 1e-6);

/// The word-quotient category at truncation max_len: arrows are classes
/// of words under rewrite distance zero, the hom metric is the rewrite
/// distance between representatives, and composition is concatenation
/// followed by class lookup (TruncationError when out of range).
class CmaxCategory {
 public:
  struct HomClasses {
    std::vector<PathWord> representatives;
    std::vector<std::vector<PathWord>> members;
    std::vector<double> metric;  // row-major over representatives
  };

  const ACStructure& base() const { return base_; }
  int max_len() const { return max_len_; }
  const HomClasses& classes(ObjectIdx x, ObjectIdx y) const;
  int class_of_word(const PathWord& w) const;  // index within its hom pair
  int compose(ObjectIdx x, ObjectIdx y, ObjectIdx z, int left, int right) const;
  int identity_class(ObjectIdx x) const;

  /// Metric axioms, unit laws, associativity, and composition
  /// nonexpansiveness, restricted to in-range concatenations.
  ValidationReport validate() const;

  /// Strict conversion; raises TruncationError if any needed composition
  /// escapes the truncation.
  MetrizedCategory to_metrized_category() const;

 private:
  friend CmaxCategory build_cmax(const ACStructure&, const MoveGraphConfig&);
  ACStructure base_;
  int max_len_ = 0;
  std::vector<HomClasses> homs_;  // per (x, y)
  std::map<PathWord, int> class_index_;
};

CmaxCategory build_cmax(const ACStructure& ac, const MoveGraphConfig& cfg);

}  // namespace acats
