#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "acats/ac_structure.hpp"
#include "acats/geometry.hpp"
#include "acats/metcor.hpp"
#include "acats/metrized_category.hpp"

namespace acats {

/// The one-object structure with arrows {1, e}: d(1,e,1) = d(e,1,1) =
/// d(1,1,e) = phi, d(e,e,e) = u, d(e,e,1) = v, identity triples zero.
ACStructure finite_example(double phi, double u, double v, double tolerance = 1e-9);

/// A random metrized category: a finite category sampled from a fixed
/// catalog (monoids of size <= 3, chain posets, a chain times a monoid,
/// coarse graphs, parallel arrows), with hom metrics obtained by
/// projecting random symmetric matrices onto the triangle and
/// nonexpansiveness constraints. Deterministic per seed; always
/// separated; at most `max_objects` objects and `max_hom` arrows per hom
/// set (both capped at 4).
MetrizedCategory random_metcat(std::uint64_t seed, int max_objects = 4,
                               int max_hom = 4);

/// Two metrics on one sampled category (shared graph), for cone tests.
std::pair<MetrizedCategory, MetrizedCategory> random_metcat_pair(std::uint64_t seed);

/// Euclidean metric space on random planar points labeled p0..p{n-1}.
FiniteMetricSpace random_metric_space(std::uint64_t seed, int npoints);

/// A valid correspondence: a random nonnegative matrix pushed under the
/// lower envelope min over (x', y') of d(x, x') + raw(x', y') + d(y', y),
/// which is the fixpoint of iterated MC1/MC2 enforcement.
Correspondence random_correspondence(std::uint64_t seed, const FiniteMetricSpace& X,
                                     const FiniteMetricSpace& Y);

struct PlanarTwoMetric {
  std::vector<Point> coords;
  TwoMetric table;
};

/// Triangle-area table over random points in the unit square.
PlanarTwoMetric random_planar_two_metric(std::uint64_t seed, int npoints);

/// Three random spaces X0 -> X1 -> X2 with random correspondences on the
/// two forward legs plus one direct leg, closed under composition, so the
/// assembled structure is 0-categoric.
MetcorAssembly random_metcor_assembly(std::uint64_t seed, int max_points = 6,
                                      int max_parallel = 2);

/// Two parallel boundary paths of a named polygon ("unit-triangle",
/// "unit-square", or "regular:<n>"), plus the full vertex set.
struct PolygonSplit {
  std::vector<Point> points;
  PLPath first;
  PLPath second;
};
PolygonSplit polygon_split(const std::string& spec);

}  // namespace acats
