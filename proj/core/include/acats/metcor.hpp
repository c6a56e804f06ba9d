#pragma once

#include <string>
#include <vector>

#include "acats/ac_structure.hpp"
#include "acats/report.hpp"

namespace acats {

/// A finite labeled point set with a distance matrix. Metric axioms are
/// checked by validate_metric_space, not assumed by the constructor
/// (which only enforces shape).
class FiniteMetricSpace {
 public:
  FiniteMetricSpace() = default;
  FiniteMetricSpace(std::vector<std::string> points, std::vector<double> dist,
                    double tolerance = 1e-9);

  int size() const { return static_cast<int>(points_.size()); }
  bool empty() const { return points_.empty(); }
  double tolerance() const { return tolerance_; }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& point(int i) const { return points_[i]; }
  double dist(int i, int j) const {
    return dist_[static_cast<std::size_t>(i) * points_.size() + j];
  }

  bool operator==(const FiniteMetricSpace& other) const {
    return points_ == other.points_ && dist_ == other.dist_;
  }

 private:
  std::vector<std::string> points_;
  std::vector<double> dist_;  // row-major, size n*n
  double tolerance_ = 1e-9;
};

/// Symmetry, zero diagonal, nonnegativity, and the triangle inequality,
/// all within the space's tolerance.
ValidationReport validate_metric_space(const FiniteMetricSpace& space,
                                       std::size_t witness_cap = ValidationReport::kDefaultWitnessCap);

/// A bounded real matrix over source x target. The defining axioms (MC0,
/// MC1, MC2, optionally MF) are checked by validate_correspondence.
class Correspondence {
 public:
  Correspondence() = default;
  Correspondence(FiniteMetricSpace source, FiniteMetricSpace target,
                 std::vector<double> values);

  const FiniteMetricSpace& source() const { return source_; }
  const FiniteMetricSpace& target() const { return target_; }
  double value(int x, int y) const {
    return values_[static_cast<std::size_t>(x) * target_.size() + y];
  }
  const std::vector<double>& values() const { return values_; }

  bool operator==(const Correspondence& other) const {
    return source_ == other.source_ && target_ == other.target_ &&
           values_ == other.values_;
  }

 private:
  FiniteMetricSpace source_;
  FiniteMetricSpace target_;
  std::vector<double> values_;  // row-major, size |source| * |target|
};

/// MC0: a nonempty source needs a nonempty target. MC1 with coefficient k:
/// f(x, y) <= k * d(x, x') + f(x', y). MC2: f(x, y) <= f(x, y') + d(y, y').
/// With `functional` also MF: d(y, y') <= f(x, y) + f(x, y').
/// Witness orders: MC1 [x, x', y]; MC2 [x, y, y']; MF [x, y, y'].
ValidationReport validate_correspondence(const Correspondence& f, double k = 1.0,
                                         bool functional = false,
                                         std::size_t witness_cap = ValidationReport::kDefaultWitnessCap);

/// Min-plus composition: (g . f)(x, z) = min_y (f(x, y) + g(y, z)).
/// Requires f.target == g.source; raises DomainError on mismatch and
/// PreconditionError when the middle space is empty but the source is not.
Correspondence compose(const Correspondence& f, const Correspondence& g);

/// The identity correspondence on a space: its own distance matrix.
Correspondence identity_correspondence(const FiniteMetricSpace& space);

/// Sup distance between two correspondences with the same shape.
double corr_distance(const Correspondence& f, const Correspondence& g);

/// Triangular distance sup |h(x, z) - min_y (f(x, y) + g(y, z))|; equals
/// corr_distance(compose(f, g), h).
double tri_distance(const Correspondence& f, const Correspondence& g,
                    const Correspondence& h);

/// Assembles a finite AC structure out of metric spaces and
/// correspondences between them: objects are the spaces, arrows the given
/// correspondences plus identities, and the triple table is tri_distance.
/// Space names index the objects; arrows get the supplied names.
struct MetcorAssembly {
  ACStructure structure;
  /// arrow id -> the correspondence it denotes (indices into the inputs
  /// are not kept; values are stored directly).
  std::vector<std::pair<std::string, Correspondence>> arrows;
};

struct NamedCorrespondence {
  std::string name;
  int source = 0;  // index into the space list
  int target = 0;
  Correspondence value;
};

/// `close_under_composition` adds min-plus composites (deduplicated by
/// exact value) until a fixpoint; intended for loop-free shapes where the
/// closure is finite.
MetcorAssembly assemble_metcor_ac(const std::vector<FiniteMetricSpace>& spaces,
                                  std::vector<NamedCorrespondence> correspondences,
                                  bool close_under_composition, double tolerance);

}  // namespace acats
