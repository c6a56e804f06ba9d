#include "acats/metcor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "acats/error.hpp"

namespace acats {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> points,
                                     std::vector<double> dist, double tolerance)
    : points_(std::move(points)), dist_(std::move(dist)), tolerance_(tolerance) {
  if (dist_.size() != points_.size() * points_.size()) {
    throw ConstructionError("distance matrix shape does not match the point list");
  }
  for (double v : dist_) {
    if (!std::isfinite(v)) throw ConstructionError("non-finite distance entry");
  }
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      if (points_[i] == points_[j]) {
        throw ConstructionError("duplicate point label '" + points_[i] + "'");
      }
    }
  }
}

ValidationReport validate_metric_space(const FiniteMetricSpace& space,
                                       std::size_t witness_cap) {
  ValidationReport report(witness_cap);
  const double tau = space.tolerance();
  const int n = space.size();
  for (int i = 0; i < n; ++i) {
    const double diag = std::abs(space.dist(i, i));
    if (diag > tau) {
      report.add({"metric-zero-diagonal", {space.point(i)}, diag, 0.0, diag});
    }
    for (int j = 0; j < n; ++j) {
      const double v = space.dist(i, j);
      if (-v > tau) {
        report.add({"metric-nonnegativity", {space.point(i), space.point(j)}, 0.0, v,
                    -v});
      }
      const double asym = std::abs(v - space.dist(j, i));
      if (asym > tau) {
        report.add({"metric-symmetry", {space.point(i), space.point(j)}, asym, 0.0,
                    asym});
      }
      for (int k = 0; k < n; ++k) {
        const double rhs = space.dist(i, k) + space.dist(k, j);
        if (v > rhs + tau) {
          report.add({"metric-triangle",
                      {space.point(i), space.point(j), space.point(k)},
                      v,
                      rhs,
                      v - rhs});
        }
      }
    }
  }
  return report;
}

Correspondence::Correspondence(FiniteMetricSpace source, FiniteMetricSpace target,
                               std::vector<double> values)
    : source_(std::move(source)), target_(std::move(target)), values_(std::move(values)) {
  if (values_.size() !=
      static_cast<std::size_t>(source_.size()) * static_cast<std::size_t>(target_.size())) {
    throw ConstructionError("correspondence matrix shape does not match its spaces");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw ConstructionError("non-finite correspondence entry");
  }
}

ValidationReport validate_correspondence(const Correspondence& f, double k,
                                         bool functional, std::size_t witness_cap) {
  ValidationReport report(witness_cap);
  const FiniteMetricSpace& X = f.source();
  const FiniteMetricSpace& Y = f.target();
  const double tau = std::max(X.tolerance(), Y.tolerance());

  if (!X.empty() && Y.empty()) {
    report.add({"mc0", {}, 1.0, 0.0, 1.0});
    return report;
  }
  for (int x = 0; x < X.size(); ++x) {
    for (int y = 0; y < Y.size(); ++y) {
      const double v = f.value(x, y);
      for (int x2 = 0; x2 < X.size(); ++x2) {
        const double rhs = k * X.dist(x, x2) + f.value(x2, y);
        if (v > rhs + tau) {
          report.add({"mc1", {X.point(x), X.point(x2), Y.point(y)}, v, rhs, v - rhs});
        }
      }
      for (int y2 = 0; y2 < Y.size(); ++y2) {
        const double rhs = f.value(x, y2) + Y.dist(y, y2);
        if (v > rhs + tau) {
          report.add({"mc2", {X.point(x), Y.point(y), Y.point(y2)}, v, rhs, v - rhs});
        }
        if (functional) {
          const double lhs = Y.dist(y, y2);
          const double bound = v + f.value(x, y2);
          if (lhs > bound + tau) {
            report.add(
                {"mf", {X.point(x), Y.point(y), Y.point(y2)}, lhs, bound, lhs - bound});
          }
        }
      }
    }
  }
  return report;
}

Correspondence compose(const Correspondence& f, const Correspondence& g) {
  if (!(f.target() == g.source())) {
    throw DomainError("correspondences do not share their middle space");
  }
  const FiniteMetricSpace& X = f.source();
  const FiniteMetricSpace& Y = f.target();
  const FiniteMetricSpace& Z = g.target();
  if (!X.empty() && Y.empty()) {
    throw PreconditionError(
        "cannot compose through an empty middle space with a nonempty source");
  }
  std::vector<double> values(static_cast<std::size_t>(X.size()) * Z.size(), 0.0);
  for (int x = 0; x < X.size(); ++x) {
    for (int z = 0; z < Z.size(); ++z) {
      double best = kInf;
      for (int y = 0; y < Y.size(); ++y) {
        best = std::min(best, f.value(x, y) + g.value(y, z));
      }
      values[static_cast<std::size_t>(x) * Z.size() + z] = best;
    }
  }
  return Correspondence(X, Z, std::move(values));
}

Correspondence identity_correspondence(const FiniteMetricSpace& space) {
  std::vector<double> values(static_cast<std::size_t>(space.size()) * space.size());
  for (int i = 0; i < space.size(); ++i) {
    for (int j = 0; j < space.size(); ++j) {
      values[static_cast<std::size_t>(i) * space.size() + j] = space.dist(i, j);
    }
  }
  return Correspondence(space, space, std::move(values));
}

double corr_distance(const Correspondence& f, const Correspondence& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target())) {
    throw DomainError("correspondence distance requires matching shapes");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    worst = std::max(worst, std::abs(f.values()[i] - g.values()[i]));
  }
  return worst;
}

double tri_distance(const Correspondence& f, const Correspondence& g,
                    const Correspondence& h) {
  if (!(f.target() == g.source())) {
    throw DomainError("triangular distance requires composable shapes");
  }
  if (!(h.source() == f.source()) || !(h.target() == g.target())) {
    throw DomainError("triangular distance requires a parallel third correspondence");
  }
  const FiniteMetricSpace& X = f.source();
  const FiniteMetricSpace& Y = f.target();
  const FiniteMetricSpace& Z = g.target();
  double worst = 0.0;
  for (int x = 0; x < X.size(); ++x) {
    for (int z = 0; z < Z.size(); ++z) {
      double best = kInf;
      for (int y = 0; y < Y.size(); ++y) {
        best = std::min(best, f.value(x, y) + g.value(y, z));
      }
      worst = std::max(worst, std::abs(h.value(x, z) - best));
    }
  }
  return worst;
}

MetcorAssembly assemble_metcor_ac(const std::vector<FiniteMetricSpace>& spaces,
                                  std::vector<NamedCorrespondence> correspondences,
                                  bool close_under_composition, double tolerance) {
  const int n = static_cast<int>(spaces.size());
  for (auto& nc : correspondences) {
    if (nc.source < 0 || nc.source >= n || nc.target < 0 || nc.target >= n) {
      throw DomainError("correspondence references an unknown space");
    }
    if (nc.source == nc.target) {
      throw DomainError("loop correspondences are reserved for identities");
    }
  }
  // Identities at every space.
  for (int i = 0; i < n; ++i) {
    correspondences.push_back(
        {"id" + std::to_string(i), i, i, identity_correspondence(spaces[i])});
  }
  // Names must be usable as arrow ids; make them unique and stable.
  for (std::size_t i = 0; i < correspondences.size(); ++i) {
    if (correspondences[i].name.empty()) {
      correspondences[i].name = "c" + std::to_string(i);
    }
  }

  if (close_under_composition) {
    bool grew = true;
    int round = 0;
    while (grew) {
      grew = false;
      if (++round > 16) {
        throw PreconditionError("composition closure did not stabilize");
      }
      const std::size_t count = correspondences.size();
      for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
          if (correspondences[i].target != correspondences[j].source) continue;
          // Identity composites reproduce the other factor exactly.
          if (correspondences[i].source == correspondences[i].target ||
              correspondences[j].source == correspondences[j].target) {
            continue;
          }
          Correspondence comp = compose(correspondences[i].value,
                                        correspondences[j].value);
          bool known = false;
          for (const auto& nc : correspondences) {
            if (nc.source == correspondences[i].source &&
                nc.target == correspondences[j].target && nc.value == comp) {
              known = true;
              break;
            }
          }
          if (!known) {
            correspondences.push_back({correspondences[i].name + "*" +
                                           correspondences[j].name,
                                       correspondences[i].source,
                                       correspondences[j].target, std::move(comp)});
            grew = true;
          }
        }
      }
    }
  }

  ACStructure::Builder b;
  b.tolerance(tolerance);
  std::vector<std::string> object_ids;
  for (int i = 0; i < n; ++i) {
    object_ids.push_back("X" + std::to_string(i));
    b.add_object(object_ids.back());
  }
  for (const auto& nc : correspondences) {
    b.add_arrow(nc.name, object_ids[nc.source], object_ids[nc.target]);
  }
  for (int i = 0; i < n; ++i) {
    // The identity arrow appended for space i above.
    for (const auto& nc : correspondences) {
      if (nc.source == i && nc.target == i) {
        b.set_identity(object_ids[i], nc.name);
        break;
      }
    }
  }
  for (const auto& f : correspondences) {
    for (const auto& g : correspondences) {
      if (f.target != g.source) continue;
      for (const auto& h : correspondences) {
        if (h.source != f.source || h.target != g.target) continue;
        b.set_distance(f.name, g.name, h.name,
                       tri_distance(f.value, g.value, h.value));
      }
    }
  }
  MetcorAssembly assembly;
  assembly.structure = b.build();
  for (auto& nc : correspondences) {
    assembly.arrows.emplace_back(nc.name, std::move(nc.value));
  }
  return assembly;
}

}  // namespace acats
