#include "acats/ac_checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace acats {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string id_of(const ACStructure& ac, ArrowIdx f) { return ac.arrow(f).id; }

// Union-find with path compression; roots chosen later by smallest id.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = a;
  }
};

double amplitude_at(const ACStructure& ac, const Amplitude* alpha, ArrowIdx f) {
  if (alpha == nullptr) return 1.0;
  auto it = alpha->find(ac.arrow(f).id);
  if (it == alpha->end()) {
    throw DomainError("amplitude is missing arrow '" + ac.arrow(f).id + "'");
  }
  return it->second;
}

}  // namespace

ValidationReport validate(const ACStructure& ac, std::size_t witness_cap) {
  ValidationReport report(witness_cap);
  const double tau = ac.tolerance();
  const int n = ac.object_count();

  // Nonnegativity of every triple value.
  for (ArrowIdx f = 0; f < ac.arrow_count(); ++f) {
    for (ArrowIdx g = 0; g < ac.arrow_count(); ++g) {
      if (!ac.composable(f, g)) continue;
      for (ArrowIdx h : ac.hom(ac.arrow(f).src, ac.arrow(g).dst)) {
        const double v = ac.d(f, g, h);
        if (-v > tau) {
          report.add({"nonnegativity",
                      {id_of(ac, f), id_of(ac, g), id_of(ac, h)},
                      0.0,
                      v,
                      -v});
        }
      }
    }
  }

  if (ac.has_identities()) {
    for (ObjectIdx x = 0; x < n; ++x) {
      for (ObjectIdx y = 0; y < n; ++y) {
        const ArrowIdx one_x = ac.identity(x);
        const ArrowIdx one_y = ac.identity(y);
        for (ArrowIdx f : ac.hom(x, y)) {
          const double left = ac.d(f, one_y, f);
          if (std::abs(left) > tau) {
            report.add({"left-identity", {id_of(ac, f)}, std::abs(left), 0.0,
                        std::abs(left)});
          }
          const double right = ac.d(one_x, f, f);
          if (std::abs(right) > tau) {
            report.add({"right-identity", {id_of(ac, f)}, std::abs(right), 0.0,
                        std::abs(right)});
          }
        }
        // d(f, 1_y, g) = d(1_x, f, g) for parallel pairs.
        for (ArrowIdx f : ac.hom(x, y)) {
          for (ArrowIdx g : ac.hom(x, y)) {
            const double diff = std::abs(ac.d(f, one_y, g) - ac.d(one_x, f, g));
            if (diff > tau) {
              report.add({"identity-transport", {id_of(ac, f), id_of(ac, g)}, diff,
                          0.0, diff});
            }
          }
        }
      }
    }
  }

  // Associativity over all composable 6-tuples (f,g,h;a,b;c) with
  // f: x->y, g: y->z, h: z->w, a: x->z, b: y->w, c: x->w.
  for (ObjectIdx x = 0; x < n; ++x) {
    for (ObjectIdx y = 0; y < n; ++y) {
      if (ac.hom(x, y).empty()) continue;
      for (ObjectIdx z = 0; z < n; ++z) {
        if (ac.hom(y, z).empty() || ac.hom(x, z).empty()) continue;
        for (ObjectIdx w = 0; w < n; ++w) {
          if (ac.hom(z, w).empty() || ac.hom(y, w).empty() || ac.hom(x, w).empty())
            continue;
          for (ArrowIdx f : ac.hom(x, y)) {
            for (ArrowIdx g : ac.hom(y, z)) {
              for (ArrowIdx a : ac.hom(x, z)) {
                const double dfga = ac.d(f, g, a);
                for (ArrowIdx h : ac.hom(z, w)) {
                  for (ArrowIdx b : ac.hom(y, w)) {
                    const double dghb = ac.d(g, h, b);
                    for (ArrowIdx c : ac.hom(x, w)) {
                      const double dfbc = ac.d(f, b, c);
                      const double dahc = ac.d(a, h, c);
                      const double base = dfga + dghb;
                      if (dahc > base + dfbc + tau) {
                        report.add({"left-associativity",
                                    {id_of(ac, f), id_of(ac, g), id_of(ac, h),
                                     id_of(ac, a), id_of(ac, b), id_of(ac, c)},
                                    dahc, base + dfbc, dahc - base - dfbc});
                      }
                      if (dfbc > base + dahc + tau) {
                        report.add({"right-associativity",
                                    {id_of(ac, f), id_of(ac, g), id_of(ac, h),
                                     id_of(ac, a), id_of(ac, b), id_of(ac, c)},
                                    dfbc, base + dahc, dfbc - base - dahc});
                      }
                    }
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return report;
}

double arrow_distance(const ACStructure& ac, ArrowIdx f, ArrowIdx g) {
  if (!ac.has_identities()) {
    throw PreconditionError("arrow distance requires identities");
  }
  if (!ac.parallel(f, g)) {
    throw DomainError("arrow distance requires parallel arrows ('" + ac.arrow(f).id +
                      "' and '" + ac.arrow(g).id + "')");
  }
  return ac.d(ac.identity(ac.arrow(f).src), f, g);
}

double arrow_distance(const ACStructure& ac, std::string_view f, std::string_view g) {
  return arrow_distance(ac, ac.arrow_index(f), ac.arrow_index(g));
}

bool is_separated(const ACStructure& ac) {
  const double tau = ac.tolerance();
  for (ObjectIdx x = 0; x < ac.object_count(); ++x) {
    for (ObjectIdx y = 0; y < ac.object_count(); ++y) {
      const auto& hs = ac.hom(x, y);
      for (std::size_t i = 0; i < hs.size(); ++i) {
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
          if (arrow_distance(ac, hs[i], hs[j]) <= tau) return false;
        }
      }
    }
  }
  return true;
}

SeparationResult separate(const ACStructure& ac) {
  if (!ac.has_identities()) {
    throw PreconditionError("separation requires identities");
  }
  const double tau = ac.tolerance();
  UnionFind uf(ac.arrow_count());
  for (ObjectIdx x = 0; x < ac.object_count(); ++x) {
    for (ObjectIdx y = 0; y < ac.object_count(); ++y) {
      const auto& hs = ac.hom(x, y);
      for (std::size_t i = 0; i < hs.size(); ++i) {
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
          if (arrow_distance(ac, hs[i], hs[j]) <= tau) uf.unite(hs[i], hs[j]);
        }
      }
    }
  }
  // Representative: smallest arrow id in each class.
  std::vector<ArrowIdx> rep(ac.arrow_count());
  std::iota(rep.begin(), rep.end(), 0);
  for (ArrowIdx f = 0; f < ac.arrow_count(); ++f) {
    const ArrowIdx root = uf.find(f);
    if (ac.arrow(f).id < ac.arrow(rep[root]).id) rep[root] = f;
  }
  std::vector<ArrowIdx> class_rep(ac.arrow_count());
  for (ArrowIdx f = 0; f < ac.arrow_count(); ++f) class_rep[f] = rep[uf.find(f)];

  SeparationResult result;
  for (ArrowIdx f = 0; f < ac.arrow_count(); ++f) {
    result.class_of[ac.arrow(f).id] = ac.arrow(class_rep[f]).id;
  }
  std::vector<ArrowIdx> keep;
  for (ArrowIdx f = 0; f < ac.arrow_count(); ++f) {
    if (class_rep[f] == f) keep.push_back(f);
  }

  ACStructure::Builder b;
  b.tolerance(tau);
  for (ObjectIdx x = 0; x < ac.object_count(); ++x) b.add_object(ac.object_id(x));
  for (ArrowIdx f : keep) {
    b.add_arrow(ac.arrow(f).id, ac.object_id(ac.arrow(f).src),
                ac.object_id(ac.arrow(f).dst));
  }
  for (ObjectIdx x = 0; x < ac.object_count(); ++x) {
    b.set_identity(ac.object_id(x), ac.arrow(class_rep[ac.identity(x)]).id);
  }
  for (ArrowIdx f : keep) {
    for (ArrowIdx g : keep) {
      if (!ac.composable(f, g)) continue;
      for (ArrowIdx h : ac.hom(ac.arrow(f).src, ac.arrow(g).dst)) {
        if (class_rep[h] != h) continue;
        b.set_distance(ac.arrow(f).id, ac.arrow(g).id, ac.arrow(h).id, ac.d(f, g, h));
      }
    }
  }
  result.structure = b.build();
  return result;
}

double composition_defect(const ACStructure& ac) {
  double worst = 0.0;
  for (ArrowIdx f = 0; f < ac.arrow_count(); ++f) {
    for (ArrowIdx g = 0; g < ac.arrow_count(); ++g) {
      if (!ac.composable(f, g)) continue;
      const auto& targets = ac.hom(ac.arrow(f).src, ac.arrow(g).dst);
      double best = kInf;
      for (ArrowIdx h : targets) best = std::min(best, ac.d(f, g, h));
      worst = std::max(worst, best);
      if (worst == kInf) return kInf;
    }
  }
  return worst;
}

CompositionTable extract_composition(const ACStructure& ac) {
  if (!ac.has_identities()) {
    throw PreconditionError("composition extraction requires identities");
  }
  const double tau = ac.tolerance();
  if (!is_separated(ac)) {
    throw PreconditionError("structure is not separated; quotient it first");
  }
  const double defect = composition_defect(ac);
  if (!(defect <= tau)) {
    throw PreconditionError("structure is not 0-categoric: composition defect " +
                            std::to_string(defect));
  }

  CompositionTable table;
  std::vector<std::vector<ArrowIdx>> comp_idx(
      static_cast<std::size_t>(ac.arrow_count()),
      std::vector<ArrowIdx>(ac.arrow_count(), -1));
  for (ArrowIdx f = 0; f < ac.arrow_count(); ++f) {
    for (ArrowIdx g = 0; g < ac.arrow_count(); ++g) {
      if (!ac.composable(f, g)) continue;
      ArrowIdx found = -1;
      for (ArrowIdx h : ac.hom(ac.arrow(f).src, ac.arrow(g).dst)) {
        if (ac.d(f, g, h) <= tau) {
          if (found >= 0) {
            throw PreconditionError(
                "ambiguous composite for ('" + ac.arrow(f).id + "', '" +
                ac.arrow(g).id + "'): candidates '" + ac.arrow(found).id + "' and '" +
                ac.arrow(h).id + "' with arrow distance " +
                std::to_string(arrow_distance(ac, found, h)));
          }
          found = h;
        }
      }
      comp_idx[f][g] = found;
      table[{ac.arrow(f).id, ac.arrow(g).id}] = ac.arrow(found).id;
    }
  }

  // The extracted table must be a genuine category on the given graph.
  for (ArrowIdx f = 0; f < ac.arrow_count(); ++f) {
    const ArrowIdx one_src = ac.identity(ac.arrow(f).src);
    const ArrowIdx one_dst = ac.identity(ac.arrow(f).dst);
    if (comp_idx[one_src][f] != f || comp_idx[f][one_dst] != f) {
      throw PreconditionError("extracted composition violates a unit law at '" +
                              ac.arrow(f).id + "'");
    }
  }
  for (ArrowIdx f = 0; f < ac.arrow_count(); ++f) {
    for (ArrowIdx g = 0; g < ac.arrow_count(); ++g) {
      if (!ac.composable(f, g)) continue;
      for (ArrowIdx h = 0; h < ac.arrow_count(); ++h) {
        if (!ac.composable(g, h)) continue;
        if (comp_idx[comp_idx[f][g]][h] != comp_idx[f][comp_idx[g][h]]) {
          throw PreconditionError("extracted composition is not associative at ('" +
                                  ac.arrow(f).id + "', '" + ac.arrow(g).id + "', '" +
                                  ac.arrow(h).id + "')");
        }
      }
    }
  }
  // Nonexpansiveness of the extracted composition.
  for (ArrowIdx f = 0; f < ac.arrow_count(); ++f) {
    for (ArrowIdx g = 0; g < ac.arrow_count(); ++g) {
      if (!ac.composable(f, g)) continue;
      for (ArrowIdx f2 : ac.hom(ac.arrow(f).src, ac.arrow(f).dst)) {
        for (ArrowIdx g2 : ac.hom(ac.arrow(g).src, ac.arrow(g).dst)) {
          const double lhs = arrow_distance(ac, comp_idx[f][g], comp_idx[f2][g2]);
          const double rhs =
              arrow_distance(ac, f, f2) + arrow_distance(ac, g, g2);
          if (lhs > rhs + 3 * tau) {
            throw PreconditionError(
                "extracted composition is expansive at ('" + ac.arrow(f).id + "', '" +
                ac.arrow(g).id + "') vs ('" + ac.arrow(f2).id + "', '" +
                ac.arrow(g2).id + "')");
          }
        }
      }
    }
  }
  return table;
}

ValidationReport check_amplitude(const ACStructure& ac, const Amplitude& alpha,
                                 std::size_t witness_cap) {
  if (!ac.has_identities()) {
    throw PreconditionError("amplitude checks require identities");
  }
  ValidationReport report(witness_cap);
  const double tau = ac.tolerance();
  std::vector<double> a(ac.arrow_count());
  for (ArrowIdx f = 0; f < ac.arrow_count(); ++f) {
    a[f] = amplitude_at(ac, &alpha, f);
  }

  for (ObjectIdx x = 0; x < ac.object_count(); ++x) {
    const ArrowIdx one = ac.identity(x);
    if (std::abs(a[one]) > tau) {
      report.add({"amplitude-reflexivity", {id_of(ac, one)}, std::abs(a[one]), 0.0,
                  std::abs(a[one])});
    }
  }
  for (ArrowIdx f = 0; f < ac.arrow_count(); ++f) {
    if (-a[f] > tau) {
      report.add({"amplitude-nonnegativity", {id_of(ac, f)}, 0.0, a[f], -a[f]});
    }
    for (ArrowIdx g = 0; g < ac.arrow_count(); ++g) {
      if (!ac.composable(f, g)) continue;
      for (ArrowIdx h : ac.hom(ac.arrow(f).src, ac.arrow(g).dst)) {
        const double dv = ac.d(f, g, h);
        const std::vector<std::string> w = {id_of(ac, f), id_of(ac, g), id_of(ac, h)};
        if (a[h] > a[f] + a[g] + dv + tau) {
          report.add({"amplitude-triangle-h", w, a[h], a[f] + a[g] + dv,
                      a[h] - a[f] - a[g] - dv});
        }
        if (a[f] > a[g] + a[h] + dv + tau) {
          report.add({"amplitude-triangle-f", w, a[f], a[g] + a[h] + dv,
                      a[f] - a[g] - a[h] - dv});
        }
        if (a[g] > a[f] + a[h] + dv + tau) {
          report.add({"amplitude-triangle-g", w, a[g], a[f] + a[h] + dv,
                      a[g] - a[f] - a[h] - dv});
        }
      }
    }
  }
  // Continuity against the arrow pseudometric.
  for (ObjectIdx x = 0; x < ac.object_count(); ++x) {
    for (ObjectIdx y = 0; y < ac.object_count(); ++y) {
      const auto& hs = ac.hom(x, y);
      for (ArrowIdx f : hs) {
        for (ArrowIdx g : hs) {
          const double lhs = std::abs(a[f] - a[g]);
          const double rhs = arrow_distance(ac, f, g);
          if (lhs > rhs + tau) {
            report.add({"amplitude-continuity", {id_of(ac, f), id_of(ac, g)}, lhs,
                        rhs, lhs - rhs});
          }
        }
      }
    }
  }
  return report;
}

ValidationReport check_transitivity(const ACStructure& ac, TransitivitySide side,
                                    const Amplitude* alpha, std::size_t witness_cap) {
  ValidationReport report(witness_cap);
  const double tau = ac.tolerance();
  const int n = ac.object_count();

  const bool do_left =
      side == TransitivitySide::kLeft || side == TransitivitySide::kBoth;
  const bool do_right =
      side == TransitivitySide::kRight || side == TransitivitySide::kBoth;

  for (ObjectIdx x = 0; x < n; ++x) {
    for (ObjectIdx y = 0; y < n; ++y) {
      if (ac.hom(x, y).empty()) continue;
      for (ObjectIdx z = 0; z < n; ++z) {
        if (ac.hom(y, z).empty()) continue;
        for (ObjectIdx w = 0; w < n; ++w) {
          if (ac.hom(z, w).empty() || ac.hom(x, w).empty()) continue;
          for (ArrowIdx f : ac.hom(x, y)) {
            for (ArrowIdx g : ac.hom(y, z)) {
              for (ArrowIdx h : ac.hom(z, w)) {
                for (ArrowIdx l : ac.hom(x, w)) {
                  if (do_left && !ac.hom(y, w).empty()) {
                    double inner = kInf;
                    for (ArrowIdx mid : ac.hom(x, z)) {
                      inner = std::min(inner, ac.d(f, g, mid) + ac.d(mid, h, l));
                    }
                    for (ArrowIdx k : ac.hom(y, w)) {
                      const double ak = amplitude_at(ac, alpha, k);
                      const double lhs = ak == 0.0 ? 0.0 : ak * inner;
                      const double rhs = ac.d(g, h, k) + ac.d(f, k, l);
                      if (lhs > rhs + tau) {
                        report.add({"left-transitivity",
                                    {id_of(ac, f), id_of(ac, g), id_of(ac, h),
                                     id_of(ac, k), id_of(ac, l)},
                                    lhs, rhs, lhs - rhs});
                      }
                    }
                  }
                  if (do_right && !ac.hom(x, z).empty()) {
                    double inner = kInf;
                    for (ArrowIdx mid : ac.hom(y, w)) {
                      inner = std::min(inner, ac.d(g, h, mid) + ac.d(f, mid, l));
                    }
                    for (ArrowIdx k : ac.hom(x, z)) {
                      const double ak = amplitude_at(ac, alpha, k);
                      const double lhs = ak == 0.0 ? 0.0 : ak * inner;
                      const double rhs = ac.d(f, g, k) + ac.d(k, h, l);
                      if (lhs > rhs + tau) {
                        report.add({"right-transitivity",
                                    {id_of(ac, f), id_of(ac, g), id_of(ac, h),
                                     id_of(ac, k), id_of(ac, l)},
                                    lhs, rhs, lhs - rhs});
                      }
                    }
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return report;
}

bool graph_composable(const ACStructure& ac) {
  return graph_composability_witness(ac).empty();
}

std::vector<std::string> graph_composability_witness(const ACStructure& ac) {
  const int n = ac.object_count();
  for (ObjectIdx x = 0; x < n; ++x) {
    for (ObjectIdx y = 0; y < n; ++y) {
      if (ac.hom(x, y).empty()) continue;
      for (ObjectIdx z = 0; z < n; ++z) {
        if (!ac.hom(y, z).empty() && ac.hom(x, z).empty()) {
          return {ac.object_id(x), ac.object_id(y), ac.object_id(z)};
        }
      }
    }
  }
  return {};
}

namespace {

// Resolves F on objects/arrows and type-checks it; returns arrow images.
std::vector<ArrowIdx> resolve_map(const PrefunctorialMap& map, const ACStructure& src,
                                  const ACStructure& dst, const char* what) {
  std::vector<ObjectIdx> obj(src.object_count(), -1);
  for (ObjectIdx x = 0; x < src.object_count(); ++x) {
    auto it = map.objects.find(src.object_id(x));
    if (it == map.objects.end()) {
      throw DomainError(std::string(what) + " is missing object '" + src.object_id(x) +
                        "'");
    }
    obj[x] = dst.object_index(it->second);
  }
  std::vector<ArrowIdx> img(src.arrow_count(), -1);
  for (ArrowIdx f = 0; f < src.arrow_count(); ++f) {
    auto it = map.arrows.find(src.arrow(f).id);
    if (it == map.arrows.end()) {
      throw DomainError(std::string(what) + " is missing arrow '" + src.arrow(f).id +
                        "'");
    }
    img[f] = dst.arrow_index(it->second);
    if (dst.arrow(img[f]).src != obj[src.arrow(f).src] ||
        dst.arrow(img[f]).dst != obj[src.arrow(f).dst]) {
      throw DomainError(std::string(what) + " is ill-typed at arrow '" +
                        src.arrow(f).id + "'");
    }
  }
  return img;
}

}  // namespace

ValidationReport check_functorial(const PrefunctorialMap& map, const ACStructure& src,
                                  const ACStructure& dst, double k,
                                  std::size_t witness_cap) {
  ValidationReport report(witness_cap);
  const double tau = std::max(src.tolerance(), dst.tolerance());
  const std::vector<ArrowIdx> img = resolve_map(map, src, dst, "functor");

  if (src.has_identities() && dst.has_identities()) {
    for (ObjectIdx x = 0; x < src.object_count(); ++x) {
      const ArrowIdx fx = img[src.identity(x)];
      if (!dst.is_identity(fx)) {
        report.add({"functor-unitality",
                    {src.arrow(src.identity(x)).id, dst.arrow(fx).id},
                    1.0,
                    0.0,
                    1.0});
      }
    }
  }
  for (ArrowIdx f = 0; f < src.arrow_count(); ++f) {
    for (ArrowIdx g = 0; g < src.arrow_count(); ++g) {
      if (!src.composable(f, g)) continue;
      for (ArrowIdx h : src.hom(src.arrow(f).src, src.arrow(g).dst)) {
        const double lhs = dst.d(img[f], img[g], img[h]);
        const double rhs = k * src.d(f, g, h);
        if (lhs > rhs + tau) {
          report.add({"functoriality",
                      {id_of(src, f), id_of(src, g), id_of(src, h)},
                      lhs, rhs, lhs - rhs});
        }
      }
    }
  }
  if (src.has_identities() && dst.has_identities()) {
    for (ObjectIdx x = 0; x < src.object_count(); ++x) {
      for (ObjectIdx y = 0; y < src.object_count(); ++y) {
        const auto& hs = src.hom(x, y);
        for (ArrowIdx f : hs) {
          for (ArrowIdx f2 : hs) {
            const double lhs = arrow_distance(dst, img[f], img[f2]);
            const double rhs = k * arrow_distance(src, f, f2);
            if (lhs > rhs + tau) {
              report.add({"functor-lipschitz", {id_of(src, f), id_of(src, f2)}, lhs,
                          rhs, lhs - rhs});
            }
          }
        }
      }
    }
  }
  return report;
}

ValidationReport check_natural(const PrefunctorialMap& F, const PrefunctorialMap& G,
                               const std::map<std::string, std::string>& eta,
                               const ACStructure& src, const ACStructure& dst, double k,
                               std::size_t witness_cap) {
  ValidationReport report(witness_cap);
  const double tau = std::max(src.tolerance(), dst.tolerance());
  const std::vector<ArrowIdx> f_img = resolve_map(F, src, dst, "first functor");
  const std::vector<ArrowIdx> g_img = resolve_map(G, src, dst, "second functor");

  std::vector<ObjectIdx> f_obj(src.object_count()), g_obj(src.object_count());
  for (ObjectIdx x = 0; x < src.object_count(); ++x) {
    f_obj[x] = dst.object_index(F.objects.at(src.object_id(x)));
    g_obj[x] = dst.object_index(G.objects.at(src.object_id(x)));
  }
  std::vector<ArrowIdx> e_img(src.arrow_count(), -1);
  for (ArrowIdx f = 0; f < src.arrow_count(); ++f) {
    auto it = eta.find(src.arrow(f).id);
    if (it == eta.end()) {
      throw DomainError("transformation is missing arrow '" + src.arrow(f).id + "'");
    }
    e_img[f] = dst.arrow_index(it->second);
    if (dst.arrow(e_img[f]).src != f_obj[src.arrow(f).src] ||
        dst.arrow(e_img[f]).dst != g_obj[src.arrow(f).dst]) {
      throw DomainError("transformation is ill-typed at arrow '" + src.arrow(f).id +
                        "'");
    }
  }

  for (ArrowIdx f = 0; f < src.arrow_count(); ++f) {
    for (ArrowIdx g = 0; g < src.arrow_count(); ++g) {
      if (!src.composable(f, g)) continue;
      for (ArrowIdx h : src.hom(src.arrow(f).src, src.arrow(g).dst)) {
        const double bound = k * src.d(f, g, h);
        const std::vector<std::string> w = {id_of(src, f), id_of(src, g),
                                            id_of(src, h)};
        const double first = dst.d(f_img[f], e_img[g], e_img[h]);
        if (first > bound + tau) {
          report.add({"naturality-first", w, first, bound, first - bound});
        }
        const double second = dst.d(e_img[f], g_img[g], e_img[h]);
        if (second > bound + tau) {
          report.add({"naturality-second", w, second, bound, second - bound});
        }
      }
    }
  }
  return report;
}

ACStructure cone_combine(const ACStructure& d1, const ACStructure& d2, double c1,
                         double c2) {
  if (!(c1 >= 0.0) || !(c2 >= 0.0) || !std::isfinite(c1) || !std::isfinite(c2)) {
    throw DomainError("cone coefficients must be finite and nonnegative");
  }
  if (!d1.same_graph(d2)) {
    throw DomainError("cone combination requires structures on the same graph");
  }
  ACStructure::Builder b;
  b.tolerance(std::max(d1.tolerance(), d2.tolerance()));
  if (!d1.has_identities()) b.semi_categorical();
  for (ObjectIdx x = 0; x < d1.object_count(); ++x) b.add_object(d1.object_id(x));
  for (ArrowIdx f = 0; f < d1.arrow_count(); ++f) {
    b.add_arrow(d1.arrow(f).id, d1.object_id(d1.arrow(f).src),
                d1.object_id(d1.arrow(f).dst));
  }
  if (d1.has_identities()) {
    for (ObjectIdx x = 0; x < d1.object_count(); ++x) {
      b.set_identity(d1.object_id(x), d1.arrow(d1.identity(x)).id);
    }
  }
  for (ArrowIdx f = 0; f < d1.arrow_count(); ++f) {
    for (ArrowIdx g = 0; g < d1.arrow_count(); ++g) {
      if (!d1.composable(f, g)) continue;
      for (ArrowIdx h : d1.hom(d1.arrow(f).src, d1.arrow(g).dst)) {
        b.set_distance(d1.arrow(f).id, d1.arrow(g).id, d1.arrow(h).id,
                       c1 * d1.d(f, g, h) + c2 * d2.d(f, g, h));
      }
    }
  }
  return b.build();
}

}  // namespace acats
