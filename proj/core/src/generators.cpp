#include "acats/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "acats/error.hpp"

namespace acats {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    const double unit =
        static_cast<double>(engine_() >> 11) * (1.0 / 9007199254740992.0);
    return lo + (hi - lo) * unit;
  }
  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

// Monoid multiplication tables with element 0 as identity. Size <= 3.
struct Monoid {
  int size = 1;
  int table[3][3] = {};  // table[a][b], identity row/column included

  int mult(int a, int b) const { return table[a][b]; }
};

std::vector<Monoid> enumerate_monoids(int size) {
  std::vector<Monoid> out;
  if (size == 1) {
    out.push_back(Monoid{1, {{0}}});
    return out;
  }
  const int free_cells = (size - 1) * (size - 1);
  int assignment[4] = {};
  const int total = static_cast<int>(std::pow(size, free_cells));
  for (int code = 0; code < total; ++code) {
    int c = code;
    for (int i = 0; i < free_cells; ++i) {
      assignment[i] = c % size;
      c /= size;
    }
    Monoid m;
    m.size = size;
    for (int a = 0; a < size; ++a) {
      m.table[0][a] = a;
      m.table[a][0] = a;
    }
    int cell = 0;
    for (int a = 1; a < size; ++a) {
      for (int b = 1; b < size; ++b) {
        m.table[a][b] = assignment[cell++];
      }
    }
    bool associative = true;
    for (int a = 0; a < size && associative; ++a) {
      for (int b = 0; b < size && associative; ++b) {
        for (int cc = 0; cc < size; ++cc) {
          if (m.mult(m.mult(a, b), cc) != m.mult(a, m.mult(b, cc))) {
            associative = false;
            break;
          }
        }
      }
    }
    if (associative) out.push_back(m);
  }
  return out;
}

const std::vector<Monoid>& monoid_catalog(int size) {
  static const std::vector<Monoid> size1 = enumerate_monoids(1);
  static const std::vector<Monoid> size2 = enumerate_monoids(2);
  static const std::vector<Monoid> size3 = enumerate_monoids(3);
  switch (size) {
    case 1:
      return size1;
    case 2:
      return size2;
    default:
      return size3;
  }
}

// A category skeleton: objects, arrows, identities, composition by index.
struct CategorySkeleton {
  int objects = 1;
  struct SkeletonArrow {
    std::string id;
    int src, dst;
  };
  std::vector<SkeletonArrow> arrows;
  std::vector<int> identities;             // per object
  std::vector<std::vector<int>> compose;   // compose[f][g] or -1
};

CategorySkeleton monoid_skeleton(const Monoid& m) {
  CategorySkeleton s;
  s.objects = 1;
  for (int a = 0; a < m.size; ++a) {
    s.arrows.push_back({a == 0 ? "1" : "e" + std::to_string(a), 0, 0});
  }
  s.identities = {0};
  s.compose.assign(m.size, std::vector<int>(m.size, -1));
  for (int a = 0; a < m.size; ++a) {
    for (int b = 0; b < m.size; ++b) {
      s.compose[a][b] = m.mult(a, b);
    }
  }
  return s;
}

CategorySkeleton chain_skeleton(int objects) {
  CategorySkeleton s;
  s.objects = objects;
  std::vector<std::vector<int>> arrow_at(objects, std::vector<int>(objects, -1));
  for (int x = 0; x < objects; ++x) {
    for (int y = x; y < objects; ++y) {
      arrow_at[x][y] = static_cast<int>(s.arrows.size());
      s.arrows.push_back(
          {"a" + std::to_string(x) + std::to_string(y), x, y});
    }
  }
  for (int x = 0; x < objects; ++x) s.identities.push_back(arrow_at[x][x]);
  const int m = static_cast<int>(s.arrows.size());
  s.compose.assign(m, std::vector<int>(m, -1));
  for (int f = 0; f < m; ++f) {
    for (int g = 0; g < m; ++g) {
      if (s.arrows[f].dst != s.arrows[g].src) continue;
      s.compose[f][g] = arrow_at[s.arrows[f].src][s.arrows[g].dst];
    }
  }
  return s;
}

CategorySkeleton coarse_skeleton(int objects) {
  CategorySkeleton s;
  s.objects = objects;
  std::vector<std::vector<int>> arrow_at(objects, std::vector<int>(objects, -1));
  for (int x = 0; x < objects; ++x) {
    for (int y = 0; y < objects; ++y) {
      arrow_at[x][y] = static_cast<int>(s.arrows.size());
      s.arrows.push_back({"a" + std::to_string(x) + std::to_string(y), x, y});
    }
  }
  for (int x = 0; x < objects; ++x) s.identities.push_back(arrow_at[x][x]);
  const int m = static_cast<int>(s.arrows.size());
  s.compose.assign(m, std::vector<int>(m, -1));
  for (int f = 0; f < m; ++f) {
    for (int g = 0; g < m; ++g) {
      if (s.arrows[f].dst != s.arrows[g].src) continue;
      s.compose[f][g] = arrow_at[s.arrows[f].src][s.arrows[g].dst];
    }
  }
  return s;
}

// Two objects, every hom set a copy of the monoid except the reverse leg.
CategorySkeleton chain_times_monoid_skeleton(const Monoid& m) {
  CategorySkeleton s;
  s.objects = 2;
  auto idx = [&](int x, int y, int a) {
    // homs (0,0), (0,1), (1,1) laid out consecutively
    const int block = x == 0 ? (y == 0 ? 0 : 1) : 2;
    return block * m.size + a;
  };
  for (int block = 0; block < 3; ++block) {
    const int x = block == 2 ? 1 : 0;
    const int y = block == 0 ? 0 : 1;
    for (int a = 0; a < m.size; ++a) {
      s.arrows.push_back({"b" + std::to_string(block) + "m" + std::to_string(a), x, y});
    }
  }
  s.identities = {idx(0, 0, 0), idx(1, 1, 0)};
  const int count = static_cast<int>(s.arrows.size());
  s.compose.assign(count, std::vector<int>(count, -1));
  for (int f = 0; f < count; ++f) {
    for (int g = 0; g < count; ++g) {
      if (s.arrows[f].dst != s.arrows[g].src) continue;
      const int af = f % m.size;
      const int ag = g % m.size;
      s.compose[f][g] = idx(s.arrows[f].src, s.arrows[g].dst, m.mult(af, ag));
    }
  }
  return s;
}

CategorySkeleton parallel_arrows_skeleton(int count) {
  CategorySkeleton s;
  s.objects = 2;
  s.arrows.push_back({"i0", 0, 0});
  s.arrows.push_back({"i1", 1, 1});
  for (int k = 0; k < count; ++k) {
    s.arrows.push_back({"f" + std::to_string(k), 0, 1});
  }
  s.identities = {0, 1};
  const int m = static_cast<int>(s.arrows.size());
  s.compose.assign(m, std::vector<int>(m, -1));
  for (int f = 0; f < m; ++f) {
    for (int g = 0; g < m; ++g) {
      if (s.arrows[f].dst != s.arrows[g].src) continue;
      // One of the factors is an identity.
      s.compose[f][g] = s.arrows[f].src == s.arrows[f].dst ? g : f;
    }
  }
  return s;
}

MetrizedCategory realize(const CategorySkeleton& s, Rng& rng, double tolerance) {
  MetrizedCategory::Builder b;
  b.tolerance(tolerance);
  for (int x = 0; x < s.objects; ++x) b.add_object("x" + std::to_string(x));
  for (const auto& a : s.arrows) {
    b.add_arrow(a.id, "x" + std::to_string(a.src), "x" + std::to_string(a.dst));
  }
  for (int x = 0; x < s.objects; ++x) {
    b.set_identity("x" + std::to_string(x), s.arrows[s.identities[x]].id);
  }
  const int m = static_cast<int>(s.arrows.size());
  for (int f = 0; f < m; ++f) {
    for (int g = 0; g < m; ++g) {
      if (s.compose[f][g] >= 0) {
        b.set_compose(s.arrows[f].id, s.arrows[g].id, s.arrows[s.compose[f][g]].id);
      }
    }
  }

  // Sample hom metrics, then shrink entries until the triangle and
  // nonexpansiveness constraints hold exactly. Entries stay bounded away
  // from zero (every shrink target is a sum of two positive entries), so
  // the result is separated.
  std::vector<std::vector<double>> phi(m, std::vector<double>(m, 0.0));
  for (int f = 0; f < m; ++f) {
    for (int g = f + 1; g < m; ++g) {
      if (s.arrows[f].src != s.arrows[g].src || s.arrows[f].dst != s.arrows[g].dst)
        continue;
      phi[f][g] = phi[g][f] = rng.uniform(0.2, 2.0);
    }
  }
  bool changed = true;
  int sweeps = 0;
  while (changed) {
    changed = false;
    if (++sweeps > 10000) {
      throw ConstructionError("hom metric projection did not stabilize");
    }
    for (int f = 0; f < m; ++f) {
      for (int g = 0; g < m; ++g) {
        if (f == g || s.arrows[f].src != s.arrows[g].src ||
            s.arrows[f].dst != s.arrows[g].dst)
          continue;
        for (int h = 0; h < m; ++h) {
          if (s.arrows[h].src != s.arrows[f].src ||
              s.arrows[h].dst != s.arrows[f].dst)
            continue;
          const double bound = phi[f][h] + phi[h][g];
          if (phi[f][g] > bound) {
            phi[f][g] = phi[g][f] = bound;
            changed = true;
          }
        }
      }
    }
    for (int f = 0; f < m; ++f) {
      for (int g = 0; g < m; ++g) {
        if (s.compose[f][g] < 0) continue;
        for (int f2 = 0; f2 < m; ++f2) {
          if (s.arrows[f2].src != s.arrows[f].src ||
              s.arrows[f2].dst != s.arrows[f].dst)
            continue;
          for (int g2 = 0; g2 < m; ++g2) {
            if (s.arrows[g2].src != s.arrows[g].src ||
                s.arrows[g2].dst != s.arrows[g].dst)
              continue;
            const int c = s.compose[f][g];
            const int c2 = s.compose[f2][g2];
            const double bound = phi[f][f2] + phi[g][g2];
            if (phi[c][c2] > bound) {
              phi[c][c2] = phi[c2][c] = bound;
              changed = true;
            }
          }
        }
      }
    }
  }
  for (int f = 0; f < m; ++f) {
    for (int g = f; g < m; ++g) {
      if (s.arrows[f].src != s.arrows[g].src || s.arrows[f].dst != s.arrows[g].dst)
        continue;
      b.set_phi(s.arrows[f].id, s.arrows[g].id, phi[f][g]);
    }
  }
  return b.build();
}

CategorySkeleton sample_skeleton(Rng& rng, int max_objects, int max_hom) {
  max_objects = std::clamp(max_objects, 1, 4);
  max_hom = std::clamp(max_hom, 1, 4);
  const int family = rng.uniform_int(0, 4);
  switch (family) {
    case 0: {
      const int size = rng.uniform_int(1, std::min(3, max_hom));
      const auto& monoids = monoid_catalog(size);
      return monoid_skeleton(monoids[rng.uniform_int(
          0, static_cast<int>(monoids.size()) - 1)]);
    }
    case 1:
      return chain_skeleton(rng.uniform_int(2, max_objects));
    case 2: {
      const int size = rng.uniform_int(2, std::min(3, max_hom));
      const auto& monoids = monoid_catalog(size);
      return chain_times_monoid_skeleton(
          monoids[rng.uniform_int(0, static_cast<int>(monoids.size()) - 1)]);
    }
    case 3:
      return coarse_skeleton(rng.uniform_int(2, max_objects));
    default:
      return parallel_arrows_skeleton(rng.uniform_int(2, max_hom));
  }
}

}  // namespace

ACStructure finite_example(double phi, double u, double v, double tolerance) {
  ACStructure::Builder b;
  b.tolerance(tolerance);
  b.add_object("x");
  b.add_arrow("1", "x", "x");
  b.add_arrow("e", "x", "x");
  b.set_identity("x", "1");
  b.set_distance("1", "1", "1", 0.0);
  b.set_distance("1", "1", "e", phi);
  b.set_distance("1", "e", "1", phi);
  b.set_distance("1", "e", "e", 0.0);
  b.set_distance("e", "1", "1", phi);
  b.set_distance("e", "1", "e", 0.0);
  b.set_distance("e", "e", "1", v);
  b.set_distance("e", "e", "e", u);
  return b.build();
}

MetrizedCategory random_metcat(std::uint64_t seed, int max_objects, int max_hom) {
  Rng rng(seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull);
  const CategorySkeleton s = sample_skeleton(rng, max_objects, max_hom);
  return realize(s, rng, 1e-9);
}

std::pair<MetrizedCategory, MetrizedCategory> random_metcat_pair(std::uint64_t seed) {
  Rng rng(seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull);
  const CategorySkeleton s = sample_skeleton(rng, 4, 4);
  MetrizedCategory first = realize(s, rng, 1e-9);
  MetrizedCategory second = realize(s, rng, 1e-9);
  return {std::move(first), std::move(second)};
}

FiniteMetricSpace random_metric_space(std::uint64_t seed, int npoints) {
  Rng rng(seed * 0x9e3779b97f4a7c15ull + 0x94d049bb133111ebull);
  std::vector<double> xs(npoints), ys(npoints);
  for (int i = 0; i < npoints; ++i) {
    xs[i] = rng.uniform(0.0, 10.0);
    ys[i] = rng.uniform(0.0, 10.0);
  }
  std::vector<std::string> labels;
  std::vector<double> dist(static_cast<std::size_t>(npoints) * npoints, 0.0);
  for (int i = 0; i < npoints; ++i) labels.push_back("p" + std::to_string(i));
  for (int i = 0; i < npoints; ++i) {
    for (int j = 0; j < npoints; ++j) {
      const double dx = xs[i] - xs[j];
      const double dy = ys[i] - ys[j];
      dist[static_cast<std::size_t>(i) * npoints + j] = std::hypot(dx, dy);
    }
  }
  return FiniteMetricSpace(std::move(labels), std::move(dist));
}

Correspondence random_correspondence(std::uint64_t seed, const FiniteMetricSpace& X,
                                     const FiniteMetricSpace& Y) {
  Rng rng(seed * 0x9e3779b97f4a7c15ull + 0xbf58476d1ce4e5b9ull);
  std::vector<double> raw(static_cast<std::size_t>(X.size()) * Y.size());
  for (auto& v : raw) v = rng.uniform(0.0, 8.0);
  std::vector<double> values(raw.size(), 0.0);
  for (int x = 0; x < X.size(); ++x) {
    for (int y = 0; y < Y.size(); ++y) {
      double best = std::numeric_limits<double>::infinity();
      for (int x2 = 0; x2 < X.size(); ++x2) {
        for (int y2 = 0; y2 < Y.size(); ++y2) {
          best = std::min(best, X.dist(x, x2) +
                                    raw[static_cast<std::size_t>(x2) * Y.size() + y2] +
                                    Y.dist(y2, y));
        }
      }
      values[static_cast<std::size_t>(x) * Y.size() + y] = best;
    }
  }
  return Correspondence(X, Y, std::move(values));
}

PlanarTwoMetric random_planar_two_metric(std::uint64_t seed, int npoints) {
  Rng rng(seed * 0x9e3779b97f4a7c15ull + 0xd6e8feb86659fd93ull);
  PlanarTwoMetric out;
  for (int i = 0; i < npoints; ++i) {
    out.coords.push_back(Point{rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0)});
  }
  std::vector<std::string> labels;
  for (int i = 0; i < npoints; ++i) labels.push_back("p" + std::to_string(i));
  out.table = triangle_area_two_metric(out.coords, labels);
  return out;
}

MetcorAssembly random_metcor_assembly(std::uint64_t seed, int max_points,
                                      int max_parallel) {
  Rng rng(seed * 0x9e3779b97f4a7c15ull + 0xa0761d6478bd642full);
  std::vector<FiniteMetricSpace> spaces;
  for (int i = 0; i < 3; ++i) {
    spaces.push_back(
        random_metric_space(seed * 31 + i, rng.uniform_int(2, std::max(2, max_points))));
  }
  std::vector<NamedCorrespondence> correspondences;
  int serial = 0;
  auto add_leg = [&](int src, int dst) {
    const int count = rng.uniform_int(1, std::max(1, max_parallel));
    for (int c = 0; c < count; ++c) {
      correspondences.push_back({"f" + std::to_string(serial), src, dst,
                                 random_correspondence(seed * 131 + serial,
                                                       spaces[src], spaces[dst])});
      ++serial;
    }
  };
  add_leg(0, 1);
  add_leg(1, 2);
  add_leg(0, 2);
  return assemble_metcor_ac(spaces, std::move(correspondences), true, 1e-9);
}

PolygonSplit polygon_split(const std::string& spec) {
  PolygonSplit out;
  std::vector<Point> ring;
  if (spec == "unit-triangle") {
    ring = {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
  } else if (spec == "unit-square") {
    ring = {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
  } else if (spec.rfind("regular:", 0) == 0) {
    const int sides = std::stoi(spec.substr(8));
    if (sides < 3 || sides > 12) {
      throw DomainError("regular polygon needs between 3 and 12 sides");
    }
    for (int i = 0; i < sides; ++i) {
      const double angle = 2.0 * M_PI * i / sides;
      ring.push_back({std::cos(angle), std::sin(angle)});
    }
  } else {
    throw DomainError("unknown polygon spec '" + spec + "'");
  }
  out.points = ring;
  const std::size_t split = ring.size() / 2;
  for (std::size_t i = 0; i <= split; ++i) out.first.vertices.push_back(ring[i]);
  out.second.vertices.push_back(ring[0]);
  for (std::size_t i = ring.size() - 1; i >= split; --i) {
    out.second.vertices.push_back(ring[i]);
  }
  return out;
}

}  // namespace acats
