#pragma once

#include <string>
#include <utility>
#include <vector>

#include "acats/ac_structure.hpp"
#include "acats/free_category.hpp"
#include "acats/report.hpp"

namespace acats {

using Point = std::vector<double>;

/// Area of the triangle spanned by three points of equal dimension,
/// computed from the Gram determinant (dimension-agnostic) and clamped
/// at zero under rounding.
double triangle_area(const Point& x, const Point& y, const Point& z);

/// A finite point set with a symmetric triple function. The table is
/// stored dense over ordered triples but built from unordered input.
class TwoMetric {
 public:
  TwoMetric() = default;
  TwoMetric(std::vector<std::string> points, double tolerance = 1e-9);

  int size() const { return static_cast<int>(points_.size()); }
  double tolerance() const { return tolerance_; }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& point(int i) const { return points_[i]; }

  /// Sets the value on every permutation of (i, j, k).
  void set(int i, int j, int k, double value);
  bool is_set(int i, int j, int k) const;
  double value(int i, int j, int k) const {
    const std::size_t n = points_.size();
    return table_[(static_cast<std::size_t>(i) * n + j) * n + k];
  }

  /// Raises ConstructionError when some triple was never set.
  void require_total() const;

  /// The induced two-point distance: max over c of value(i, j, c).
  double spread(int i, int j) const;

 private:
  std::vector<std::string> points_;
  std::vector<double> table_;
  double tolerance_ = 1e-9;
};

/// Builds the triangle-area table over a finite point list.
TwoMetric triangle_area_two_metric(const std::vector<Point>& coords,
                                   const std::vector<std::string>& labels,
                                   double tolerance = 1e-9);

/// Symmetry under permutations, nonnegativity, vanishing on repeated
/// points, the tetrahedral inequality over all 4-tuples, and the
/// (automatically finite) supremum recorded as metadata. Witnesses carry
/// point labels.
ValidationReport check_two_metric(const TwoMetric& tm,
                                  std::size_t witness_cap = ValidationReport::kDefaultWitnessCap);

/// The coarse structure on a two-metric: one arrow per ordered point
/// pair, identities on the diagonal, triple values copied from the table,
/// and the spread function as amplitude. Arrow ids are "<p>.<q>".
/// Refuses tables that fail check_two_metric.
std::pair<ACStructure, Amplitude> two_metric_to_ac(const TwoMetric& tm);

/// Name of the coarse arrow p -> q.
std::string coarse_arrow_id(const std::string& p, const std::string& q);

/// A vertex sequence in R^n read as a piecewise-linear path.
struct PLPath {
  std::vector<Point> vertices;
};

/// Absolute value of the signed-area sum of a closed planar polyline.
double shoelace_area(const PLPath& path);

/// Rewrite-distance between two piecewise-linear paths sharing endpoints,
/// computed on the coarse structure of the triangle-area two-metric over
/// the given vertex set (which must contain every path vertex; extra
/// points tighten the estimate). Upper-bounds the minimal triangulated
/// disk area over that vertex set.
DistanceEstimate plpath_dmax(const std::vector<Point>& points, const PLPath& a,
                             const PLPath& b, const MoveGraphConfig& cfg);

}  // namespace acats
