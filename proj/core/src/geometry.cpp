#include "acats/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "acats/error.hpp"

namespace acats {

double triangle_area(const Point& x, const Point& y, const Point& z) {
  if (x.size() != y.size() || x.size() != z.size()) {
    throw DomainError("triangle area requires points of equal dimension");
  }
  double uu = 0.0, vv = 0.0, uv = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double u = y[i] - x[i];
    const double v = z[i] - x[i];
    uu += u * u;
    vv += v * v;
    uv += u * v;
  }
  const double gram = uu * vv - uv * uv;
  return gram <= 0.0 ? 0.0 : 0.5 * std::sqrt(gram);
}

TwoMetric::TwoMetric(std::vector<std::string> points, double tolerance)
    : points_(std::move(points)), tolerance_(tolerance) {
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      if (points_[i] == points_[j]) {
        throw ConstructionError("duplicate point label '" + points_[i] + "'");
      }
    }
  }
  const std::size_t n = points_.size();
  table_.assign(n * n * n, std::numeric_limits<double>::quiet_NaN());
}

void TwoMetric::set(int i, int j, int k, double value) {
  if (!std::isfinite(value)) throw ConstructionError("non-finite two-metric entry");
  const std::size_t n = points_.size();
  const int p[3] = {i, j, k};
  for (int v : p) {
    if (v < 0 || v >= size()) throw DomainError("point index out of range");
  }
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& pe : perms) {
    table_[(static_cast<std::size_t>(p[pe[0]]) * n + p[pe[1]]) * n + p[pe[2]]] = value;
  }
}

bool TwoMetric::is_set(int i, int j, int k) const {
  return !std::isnan(value(i, j, k));
}

void TwoMetric::require_total() const {
  for (int i = 0; i < size(); ++i) {
    for (int j = i; j < size(); ++j) {
      for (int k = j; k < size(); ++k) {
        if (!is_set(i, j, k)) {
          throw ConstructionError("two-metric table is missing (" + points_[i] + ", " +
                                  points_[j] + ", " + points_[k] + ")");
        }
      }
    }
  }
}

double TwoMetric::spread(int i, int j) const {
  double best = 0.0;
  for (int c = 0; c < size(); ++c) best = std::max(best, value(i, j, c));
  return best;
}

TwoMetric triangle_area_two_metric(const std::vector<Point>& coords,
                                   const std::vector<std::string>& labels,
                                   double tolerance) {
  if (coords.size() != labels.size()) {
    throw ConstructionError("coordinate and label lists differ in length");
  }
  TwoMetric tm(labels, tolerance);
  for (int i = 0; i < tm.size(); ++i) {
    for (int j = i; j < tm.size(); ++j) {
      for (int k = j; k < tm.size(); ++k) {
        tm.set(i, j, k, triangle_area(coords[i], coords[j], coords[k]));
      }
    }
  }
  return tm;
}

ValidationReport check_two_metric(const TwoMetric& tm, std::size_t witness_cap) {
  tm.require_total();
  ValidationReport report(witness_cap);
  const double tau = tm.tolerance();
  const int n = tm.size();

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const double v = tm.value(i, j, k);
        if (-v > tau) {
          report.add({"two-metric-nonnegativity",
                      {tm.point(i), tm.point(j), tm.point(k)},
                      0.0,
                      v,
                      -v});
        }
        // Permutation invariance (the setter enforces it for tables built
        // here; documents could in principle disagree entry by entry).
        const double sym =
            std::max({std::abs(v - tm.value(j, i, k)), std::abs(v - tm.value(i, k, j)),
                      std::abs(v - tm.value(k, j, i))});
        if (sym > tau) {
          report.add({"two-metric-symmetry",
                      {tm.point(i), tm.point(j), tm.point(k)},
                      sym,
                      0.0,
                      sym});
        }
      }
      const double repeated = std::abs(tm.value(i, i, j));
      if (repeated > tau) {
        report.add({"two-metric-vanishing", {tm.point(i), tm.point(j)}, repeated, 0.0,
                    repeated});
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        for (int w = 0; w < n; ++w) {
          const double lhs = tm.value(x, y, w);
          const double rhs = tm.value(x, y, z) + tm.value(y, z, w) + tm.value(x, z, w);
          if (lhs > rhs + tau) {
            report.add({"tetrahedral",
                        {tm.point(x), tm.point(y), tm.point(z), tm.point(w)},
                        lhs,
                        rhs,
                        lhs - rhs});
          }
        }
      }
    }
  }
  return report;
}

std::string coarse_arrow_id(const std::string& p, const std::string& q) {
  return p + "." + q;
}

std::pair<ACStructure, Amplitude> two_metric_to_ac(const TwoMetric& tm) {
  const ValidationReport axioms = check_two_metric(tm, 1);
  if (!axioms.passed()) {
    const auto& worst = axioms.worst().begin()->second;
    throw PreconditionError("two-metric axioms fail: " + worst.axiom + " (gap " +
                            std::to_string(worst.gap) + ")");
  }
  ACStructure::Builder b;
  b.tolerance(tm.tolerance());
  for (int i = 0; i < tm.size(); ++i) b.add_object(tm.point(i));
  for (int i = 0; i < tm.size(); ++i) {
    for (int j = 0; j < tm.size(); ++j) {
      b.add_arrow(coarse_arrow_id(tm.point(i), tm.point(j)), tm.point(i), tm.point(j));
    }
  }
  for (int i = 0; i < tm.size(); ++i) {
    b.set_identity(tm.point(i), coarse_arrow_id(tm.point(i), tm.point(i)));
  }
  for (int x = 0; x < tm.size(); ++x) {
    for (int y = 0; y < tm.size(); ++y) {
      for (int z = 0; z < tm.size(); ++z) {
        b.set_distance(coarse_arrow_id(tm.point(x), tm.point(y)),
                       coarse_arrow_id(tm.point(y), tm.point(z)),
                       coarse_arrow_id(tm.point(x), tm.point(z)), tm.value(x, y, z));
      }
    }
  }
  Amplitude alpha;
  for (int i = 0; i < tm.size(); ++i) {
    for (int j = 0; j < tm.size(); ++j) {
      alpha[coarse_arrow_id(tm.point(i), tm.point(j))] = tm.spread(i, j);
    }
  }
  return {b.build(), std::move(alpha)};
}

double shoelace_area(const PLPath& path) {
  const auto& v = path.vertices;
  if (v.size() < 2 || v.front() != v.back()) {
    throw DomainError("shoelace area requires a closed path");
  }
  for (const auto& p : v) {
    if (p.size() != 2) throw DomainError("shoelace area requires planar points");
  }
  double twice = 0.0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    twice += v[i][0] * v[i + 1][1] - v[i + 1][0] * v[i][1];
  }
  return 0.5 * std::abs(twice);
}

DistanceEstimate plpath_dmax(const std::vector<Point>& points, const PLPath& a,
                             const PLPath& b, const MoveGraphConfig& cfg) {
  if (a.vertices.empty() || b.vertices.empty()) {
    throw DomainError("paths need at least one vertex");
  }
  if (a.vertices.front() != b.vertices.front() ||
      a.vertices.back() != b.vertices.back()) {
    throw DomainError("paths do not share endpoints");
  }
  std::vector<std::string> labels;
  labels.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    labels.push_back("p" + std::to_string(i));
  }
  const TwoMetric tm = triangle_area_two_metric(points, labels, 1e-9);
  auto [ac, alpha] = two_metric_to_ac(tm);
  (void)alpha;

  auto locate = [&](const Point& p) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (points[i] == p) return static_cast<int>(i);
    }
    throw DomainError("path vertex is not in the point set");
  };
  auto to_word = [&](const PLPath& path) {
    PathWord w;
    w.base = ac.object_index(labels[locate(path.vertices.front())]);
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
      const int from = locate(path.vertices[i]);
      const int to = locate(path.vertices[i + 1]);
      w.arrows.push_back(ac.arrow_index(coarse_arrow_id(labels[from], labels[to])));
    }
    return w;
  };
  return dmax_estimate(ac, to_word(a), to_word(b), cfg);
}

}  // namespace acats
