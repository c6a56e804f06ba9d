#include "acats/free_category.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "acats/ac_checks.hpp"
#include "acats/error.hpp"
#include "acats/yoneda.hpp"

namespace acats {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct PathWordHash {
  std::size_t operator()(const PathWord& w) const {
    std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(w.base);
    for (ArrowIdx a : w.arrows) {
      h ^= static_cast<std::size_t>(a) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

using DistMap = std::unordered_map<PathWord, double, PathWordHash>;

// Dijkstra over the implicit move graph restricted to words of length
// <= max_len. Move costs are clamped at zero (validated structures may
// carry values within -tolerance of zero). When `targets` is given the
// search stops as soon as every target is settled; otherwise it exhausts
// the component of `start`. Returns settled distances.
DistMap move_graph_distances(const ACStructure& ac, const PathWord& start, int max_len,
                             const std::vector<PathWord>* targets) {
  DistMap settled;
  DistMap best;
  std::priority_queue<std::pair<double, PathWord>,
                      std::vector<std::pair<double, PathWord>>, std::greater<>>
      queue;
  best[start] = 0.0;
  queue.push({0.0, start});

  std::size_t targets_left = targets != nullptr ? targets->size() : 0;
  std::unordered_map<PathWord, bool, PathWordHash> is_target;
  if (targets != nullptr) {
    for (const auto& t : *targets) is_target.emplace(t, true);
    targets_left = is_target.size();
  }

  while (!queue.empty()) {
    auto [dist, word] = queue.top();
    queue.pop();
    auto it = best.find(word);
    if (it == best.end() || dist > it->second) continue;
    if (!settled.emplace(word, dist).second) continue;
    if (targets != nullptr) {
      auto ti = is_target.find(word);
      if (ti != is_target.end() && ti->second) {
        ti->second = false;
        if (--targets_left == 0) return settled;
      }
    }
    for (auto& move : elementary_moves(ac, word, max_len)) {
      const double next = dist + std::max(move.cost, 0.0);
      auto bi = best.find(move.word);
      if (bi == best.end() || next < bi->second) {
        best[move.word] = next;
        queue.push({next, std::move(move.word)});
      }
    }
  }
  return settled;
}

double lookup(const DistMap& dists, const PathWord& w) {
  auto it = dists.find(w);
  return it == dists.end() ? kInf : it->second;
}

}  // namespace

PathWord make_word(const ACStructure& ac, std::string_view base_object,
                   const std::vector<std::string>& arrow_ids) {
  PathWord w;
  w.base = ac.object_index(base_object);
  ObjectIdx at = w.base;
  for (const auto& id : arrow_ids) {
    const ArrowIdx a = ac.arrow_index(id);
    if (ac.arrow(a).src != at) {
      throw DomainError("word is not composable at arrow '" + id + "'");
    }
    at = ac.arrow(a).dst;
    w.arrows.push_back(a);
  }
  return w;
}

ObjectIdx word_src(const ACStructure& ac, const PathWord& w) {
  return w.arrows.empty() ? w.base : ac.arrow(w.arrows.front()).src;
}

ObjectIdx word_dst(const ACStructure& ac, const PathWord& w) {
  return w.arrows.empty() ? w.base : ac.arrow(w.arrows.back()).dst;
}

std::string word_to_string(const ACStructure& ac, const PathWord& w) {
  if (w.arrows.empty()) {
    return "()@" + ac.object_id(w.base);
  }
  std::string out = "(";
  for (std::size_t i = 0; i < w.arrows.size(); ++i) {
    if (i > 0) out += ",";
    out += ac.arrow(w.arrows[i]).id;
  }
  out += ")";
  return out;
}

PathWord concat(const ACStructure& ac, const PathWord& a, const PathWord& b) {
  if (word_dst(ac, a) != word_src(ac, b)) {
    throw DomainError("words do not share an endpoint");
  }
  PathWord out;
  out.base = word_src(ac, a);
  out.arrows = a.arrows;
  out.arrows.insert(out.arrows.end(), b.arrows.begin(), b.arrows.end());
  return out;
}

std::vector<WeightedMove> elementary_moves(const ACStructure& ac, const PathWord& w,
                                           int max_len) {
  std::vector<WeightedMove> moves;
  const int k = w.length();

  // Contractions of an adjacent pair.
  for (int i = 0; i + 1 < k; ++i) {
    const ArrowIdx f = w.arrows[i];
    const ArrowIdx g = w.arrows[i + 1];
    for (ArrowIdx h : ac.hom(ac.arrow(f).src, ac.arrow(g).dst)) {
      PathWord next = w;
      next.arrows.erase(next.arrows.begin() + i, next.arrows.begin() + i + 2);
      next.arrows.insert(next.arrows.begin() + i, h);
      moves.push_back({std::move(next), ac.d(f, g, h)});
    }
  }
  // Expansions of a single letter into a pair (the reverse rewrite).
  if (k + 1 <= max_len) {
    for (int i = 0; i < k; ++i) {
      const ArrowIdx h = w.arrows[i];
      const ObjectIdx x = ac.arrow(h).src;
      const ObjectIdx z = ac.arrow(h).dst;
      for (ObjectIdx y = 0; y < ac.object_count(); ++y) {
        for (ArrowIdx f : ac.hom(x, y)) {
          for (ArrowIdx g : ac.hom(y, z)) {
            PathWord next = w;
            next.arrows[i] = f;
            next.arrows.insert(next.arrows.begin() + i + 1, g);
            moves.push_back({std::move(next), ac.d(f, g, h)});
          }
        }
      }
    }
  }
  if (ac.has_identities()) {
    // Identity deletions.
    for (int i = 0; i < k; ++i) {
      if (!ac.is_identity(w.arrows[i])) continue;
      PathWord next = w;
      next.arrows.erase(next.arrows.begin() + i);
      moves.push_back({std::move(next), 0.0});
    }
    // Identity insertions at every seam.
    if (k + 1 <= max_len) {
      for (int i = 0; i <= k; ++i) {
        const ObjectIdx at =
            i == 0 ? word_src(ac, w) : ac.arrow(w.arrows[i - 1]).dst;
        PathWord next = w;
        next.arrows.insert(next.arrows.begin() + i, ac.identity(at));
        moves.push_back({std::move(next), 0.0});
      }
    }
  }
  return moves;
}

DistanceEstimate dmax_estimate(const ACStructure& ac, const PathWord& a,
                               const PathWord& b, const MoveGraphConfig& cfg) {
  if (word_src(ac, a) != word_src(ac, b) || word_dst(ac, a) != word_dst(ac, b)) {
    throw DomainError("words are not parallel");
  }
  if (a.length() > cfg.max_len || b.length() > cfg.max_len) {
    throw DomainError("query word exceeds the length bound");
  }
  const std::vector<PathWord> targets = {b};
  const DistMap dists = move_graph_distances(ac, a, cfg.max_len, &targets);
  return DistanceEstimate{lookup(dists, b), EstimateKind::kUpperBoundAtLength};
}

std::vector<std::pair<ArrowIdx, DistanceEstimate>> dmax_to_hom(
    const ACStructure& ac, const PathWord& a, const MoveGraphConfig& cfg) {
  if (a.length() > cfg.max_len) {
    throw DomainError("query word exceeds the length bound");
  }
  std::vector<PathWord> targets;
  const ObjectIdx x = word_src(ac, a);
  const ObjectIdx z = word_dst(ac, a);
  for (ArrowIdx h : ac.hom(x, z)) {
    targets.push_back(PathWord{x, {h}});
  }
  if (targets.empty()) return {};
  const DistMap dists = move_graph_distances(ac, a, cfg.max_len, &targets);
  std::vector<std::pair<ArrowIdx, DistanceEstimate>> out;
  for (const auto& t : targets) {
    out.emplace_back(t.arrows[0],
                     DistanceEstimate{lookup(dists, t),
                                      EstimateKind::kUpperBoundAtLength});
  }
  return out;
}

EmbeddingCheck verify_embedding(const ACStructure& ac, const MoveGraphConfig& cfg,
                                double strict_tolerance) {
  if (cfg.max_len < 2) {
    throw DomainError("embedding verification needs a length bound of at least 2");
  }
  EmbeddingCheck check;
  check.graph_composable = acats::graph_composable(ac);
  check.absolutely_transitive =
      check_transitivity(ac, TransitivitySide::kBoth, nullptr, 1).passed();
  const bool strict = check.graph_composable && check.absolutely_transitive;
  const double tau = ac.tolerance();

  for (ArrowIdx f = 0; f < ac.arrow_count(); ++f) {
    for (ArrowIdx g = 0; g < ac.arrow_count(); ++g) {
      if (!ac.composable(f, g)) continue;
      const ObjectIdx x = ac.arrow(f).src;
      const ObjectIdx z = ac.arrow(g).dst;
      if (ac.hom(x, z).empty()) continue;
      const PathWord pair{x, {f, g}};
      const auto estimates = dmax_to_hom(ac, pair, cfg);
      for (const auto& [h, est] : estimates) {
        EmbeddingCheck::Row row;
        row.f = ac.arrow(f).id;
        row.g = ac.arrow(g).id;
        row.h = ac.arrow(h).id;
        row.table_value = ac.d(f, g, h);
        row.estimate = est.value;
        row.lower_bound = yoneda_lower_bound(ac, f, g, h);
        const std::vector<std::string> witness = {row.f, row.g, row.h};
        if (row.estimate > row.table_value + tau) {
          check.report.add({"dmax-upper-bound", witness, row.estimate,
                            row.table_value, row.estimate - row.table_value});
        }
        if (strict) {
          const double diff = std::abs(row.estimate - row.table_value);
          if (diff > strict_tolerance) {
            check.report.add({"dmax-equality", witness, diff, 0.0, diff});
          }
          if (row.lower_bound > row.estimate + strict_tolerance) {
            check.report.add({"dmax-lower-bound", witness, row.lower_bound,
                              row.estimate, row.lower_bound - row.estimate});
          }
        }
        check.rows.push_back(row);
      }
    }
  }
  return check;
}

const CmaxCategory::HomClasses& CmaxCategory::classes(ObjectIdx x, ObjectIdx y) const {
  return homs_[static_cast<std::size_t>(x) * base_.object_count() + y];
}

int CmaxCategory::class_of_word(const PathWord& w) const {
  auto it = class_index_.find(w);
  if (it == class_index_.end()) {
    throw TruncationError("word '" + word_to_string(base_, w) +
                          "' lies outside the enumerated truncation");
  }
  return it->second;
}

int CmaxCategory::compose(ObjectIdx x, ObjectIdx y, ObjectIdx z, int left,
                          int right) const {
  const PathWord& a = classes(x, y).representatives[left];
  const PathWord& b = classes(y, z).representatives[right];
  if (a.length() + b.length() > max_len_) {
    throw TruncationError("composition escapes the length bound " +
                          std::to_string(max_len_));
  }
  return class_of_word(concat(base_, a, b));
}

int CmaxCategory::identity_class(ObjectIdx x) const {
  return class_of_word(PathWord{x, {}});
}

ValidationReport CmaxCategory::validate() const {
  ValidationReport report;
  const double tau = base_.tolerance();
  const int n = base_.object_count();

  auto name_of = [&](ObjectIdx x, ObjectIdx y, int c) {
    return word_to_string(base_, classes(x, y).representatives[c]);
  };

  for (ObjectIdx x = 0; x < n; ++x) {
    for (ObjectIdx y = 0; y < n; ++y) {
      const auto& hc = classes(x, y);
      const std::size_t m = hc.representatives.size();
      for (std::size_t i = 0; i < m; ++i) {
        const double diag = std::abs(hc.metric[i * m + i]);
        if (diag > tau) {
          report.add({"hom-metric-reflexivity", {name_of(x, y, i)}, diag, 0.0, diag});
        }
        for (std::size_t j = 0; j < m; ++j) {
          const double v = hc.metric[i * m + j];
          const double asym = std::abs(v - hc.metric[j * m + i]);
          if (asym > tau) {
            report.add({"hom-metric-symmetry", {name_of(x, y, i), name_of(x, y, j)},
                        asym, 0.0, asym});
          }
          if (-v > tau) {
            report.add({"hom-metric-nonnegativity",
                        {name_of(x, y, i), name_of(x, y, j)}, 0.0, v, -v});
          }
          for (std::size_t k = 0; k < m; ++k) {
            const double rhs = hc.metric[i * m + k] + hc.metric[k * m + j];
            if (v > rhs + tau) {
              report.add({"hom-metric-triangle",
                          {name_of(x, y, i), name_of(x, y, j), name_of(x, y, k)},
                          v, rhs, v - rhs});
            }
          }
        }
      }
    }
  }

  // Unit laws (identity representatives have length 0, so always in range).
  for (ObjectIdx x = 0; x < n; ++x) {
    for (ObjectIdx y = 0; y < n; ++y) {
      const auto& hc = classes(x, y);
      for (std::size_t i = 0; i < hc.representatives.size(); ++i) {
        if (compose(x, x, y, identity_class(x), static_cast<int>(i)) !=
                static_cast<int>(i) ||
            compose(x, y, y, static_cast<int>(i), identity_class(y)) !=
                static_cast<int>(i)) {
          report.add({"unit-law", {name_of(x, y, i)}, 1.0, 0.0, 1.0});
        }
      }
    }
  }

  // Associativity and nonexpansiveness on in-range combinations.
  for (ObjectIdx x = 0; x < n; ++x) {
    for (ObjectIdx y = 0; y < n; ++y) {
      const auto& hxy = classes(x, y);
      for (ObjectIdx z = 0; z < n; ++z) {
        const auto& hyz = classes(y, z);
        for (std::size_t i = 0; i < hxy.representatives.size(); ++i) {
          for (std::size_t j = 0; j < hyz.representatives.size(); ++j) {
            const int li = hxy.representatives[i].length();
            const int lj = hyz.representatives[j].length();
            if (li + lj > max_len_) continue;
            const int ij = compose(x, y, z, static_cast<int>(i), static_cast<int>(j));
            for (ObjectIdx w = 0; w < n; ++w) {
              const auto& hzw = classes(z, w);
              for (std::size_t k = 0; k < hzw.representatives.size(); ++k) {
                const int lk = hzw.representatives[k].length();
                if (lj + lk > max_len_) continue;
                const int jk =
                    compose(y, z, w, static_cast<int>(j), static_cast<int>(k));
                const int lij = classes(x, z).representatives[ij].length();
                const int ljk = classes(y, w).representatives[jk].length();
                if (lij + lk > max_len_ || li + ljk > max_len_) continue;
                if (compose(x, z, w, ij, static_cast<int>(k)) !=
                    compose(x, y, w, static_cast<int>(i), jk)) {
                  report.add({"composition-associativity",
                              {name_of(x, y, i), name_of(y, z, j), name_of(z, w, k)},
                              1.0, 0.0, 1.0});
                }
              }
            }
            // Nonexpansiveness against other in-range pairs.
            for (std::size_t i2 = 0; i2 < hxy.representatives.size(); ++i2) {
              for (std::size_t j2 = 0; j2 < hyz.representatives.size(); ++j2) {
                if (hxy.representatives[i2].length() +
                        hyz.representatives[j2].length() >
                    max_len_)
                  continue;
                const int i2j2 =
                    compose(x, y, z, static_cast<int>(i2), static_cast<int>(j2));
                const auto& hxz = classes(x, z);
                const std::size_t mz = hxz.representatives.size();
                const double lhs = hxz.metric[static_cast<std::size_t>(ij) * mz + i2j2];
                const double rhs =
                    hxy.metric[i * hxy.representatives.size() + i2] +
                    hyz.metric[j * hyz.representatives.size() + j2];
                if (lhs > rhs + tau) {
                  report.add({"composition-nonexpansive",
                              {name_of(x, y, i), name_of(y, z, j), name_of(x, y, i2),
                               name_of(y, z, j2)},
                              lhs, rhs, lhs - rhs});
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

MetrizedCategory CmaxCategory::to_metrized_category() const {
  MetrizedCategory::Builder b;
  b.tolerance(base_.tolerance());
  const int n = base_.object_count();
  for (ObjectIdx x = 0; x < n; ++x) b.add_object(base_.object_id(x));

  auto class_id = [&](ObjectIdx x, ObjectIdx y, int c) {
    const PathWord& rep = classes(x, y).representatives[c];
    if (rep.arrows.empty()) return "[]@" + base_.object_id(x);
    std::string id = "[";
    for (std::size_t i = 0; i < rep.arrows.size(); ++i) {
      if (i > 0) id += ",";
      id += base_.arrow(rep.arrows[i]).id;
    }
    id += "]";
    return id;
  };

  for (ObjectIdx x = 0; x < n; ++x) {
    for (ObjectIdx y = 0; y < n; ++y) {
      const auto& hc = classes(x, y);
      for (std::size_t i = 0; i < hc.representatives.size(); ++i) {
        b.add_arrow(class_id(x, y, static_cast<int>(i)), base_.object_id(x),
                    base_.object_id(y));
      }
    }
  }
  for (ObjectIdx x = 0; x < n; ++x) {
    b.set_identity(base_.object_id(x), class_id(x, x, identity_class(x)));
  }
  for (ObjectIdx x = 0; x < n; ++x) {
    for (ObjectIdx y = 0; y < n; ++y) {
      const auto& hxy = classes(x, y);
      const std::size_t m = hxy.representatives.size();
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          b.set_phi(class_id(x, y, static_cast<int>(i)),
                    class_id(x, y, static_cast<int>(j)), hxy.metric[i * m + j]);
        }
      }
      for (ObjectIdx z = 0; z < n; ++z) {
        const auto& hyz = classes(y, z);
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = 0; j < hyz.representatives.size(); ++j) {
            const int c = compose(x, y, z, static_cast<int>(i), static_cast<int>(j));
            b.set_compose(class_id(x, y, static_cast<int>(i)),
                          class_id(y, z, static_cast<int>(j)), class_id(x, z, c));
          }
        }
      }
    }
  }
  return b.build();
}

CmaxCategory build_cmax(const ACStructure& ac, const MoveGraphConfig& cfg) {
  if (cfg.max_len < 1) {
    throw DomainError("length bound must be at least 1");
  }
  CmaxCategory out;
  out.base_ = ac;
  out.max_len_ = cfg.max_len;
  const int n = ac.object_count();

  // Enumerate all composable words of length <= max_len.
  std::vector<PathWord> all;
  for (ObjectIdx x = 0; x < n; ++x) all.push_back(PathWord{x, {}});
  std::size_t begin = 0;
  for (int len = 1; len <= cfg.max_len; ++len) {
    const std::size_t end = all.size();
    for (std::size_t i = begin; i < end; ++i) {
      const ObjectIdx at = word_dst(ac, all[i]);
      for (ObjectIdx y = 0; y < n; ++y) {
        for (ArrowIdx a : ac.hom(at, y)) {
          PathWord next = all[i];
          next.arrows.push_back(a);
          all.push_back(std::move(next));
          if (all.size() > 200000) {
            throw ConstructionError("word enumeration exceeds the supported scale");
          }
        }
      }
    }
    begin = end;
  }

  // Group by endpoint pair, deterministically ordered.
  std::vector<std::vector<PathWord>> by_pair(static_cast<std::size_t>(n) * n);
  for (auto& w : all) {
    by_pair[static_cast<std::size_t>(word_src(ac, w)) * n + word_dst(ac, w)].push_back(
        std::move(w));
  }
  for (auto& group : by_pair) std::sort(group.begin(), group.end());

  out.homs_.resize(static_cast<std::size_t>(n) * n);
  for (ObjectIdx x = 0; x < n; ++x) {
    for (ObjectIdx y = 0; y < n; ++y) {
      auto& group = by_pair[static_cast<std::size_t>(x) * n + y];
      const std::size_t m = group.size();
      std::vector<double> dist(m * m, kInf);
      for (std::size_t i = 0; i < m; ++i) {
        const DistMap d = move_graph_distances(ac, group[i], cfg.max_len, nullptr);
        for (std::size_t j = 0; j < m; ++j) {
          dist[i * m + j] = lookup(d, group[j]);
        }
      }
      // The rewrite graph is cost-symmetric; even out rounding asymmetry.
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
          const double v = std::min(dist[i * m + j], dist[j * m + i]);
          if (std::isinf(v)) {
            throw TruncationError(
                "words '" + word_to_string(ac, group[i]) + "' and '" +
                word_to_string(ac, group[j]) +
                "' are not connected within the length bound");
          }
          dist[i * m + j] = dist[j * m + i] = v;
        }
      }

      // Classes under distance <= tolerance.
      std::vector<int> parent(m);
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int a) {
        while (parent[a] != a) {
          parent[a] = parent[parent[a]];
          a = parent[a];
        }
        return a;
      };
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
          if (dist[i * m + j] <= ac.tolerance()) {
            const int a = find(static_cast<int>(i));
            const int b = find(static_cast<int>(j));
            if (a != b) parent[b] = a;
          }
        }
      }
      // Representatives: shortest member, then lexicographic (the groups
      // are sorted, and PathWord order is base, then arrow sequence, so
      // the first member encountered wins after the length comparison).
      std::map<int, int> root_to_class;
      auto& hc = out.homs_[static_cast<std::size_t>(x) * n + y];
      for (std::size_t i = 0; i < m; ++i) {
        const int root = find(static_cast<int>(i));
        auto it = root_to_class.find(root);
        if (it == root_to_class.end()) {
          root_to_class.emplace(root, static_cast<int>(hc.representatives.size()));
          hc.representatives.push_back(group[i]);
          hc.members.push_back({group[i]});
        } else {
          auto& rep = hc.representatives[it->second];
          if (group[i].length() < rep.length() ||
              (group[i].length() == rep.length() && group[i] < rep)) {
            rep = group[i];
          }
          hc.members[it->second].push_back(group[i]);
        }
      }
      // Order classes by representative for deterministic output.
      std::vector<int> order(hc.representatives.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& ra = hc.representatives[a];
        const auto& rb = hc.representatives[b];
        if (ra.length() != rb.length()) return ra.length() < rb.length();
        return ra < rb;
      });
      CmaxCategory::HomClasses sorted;
      std::vector<int> class_of_root(hc.representatives.size());
      for (std::size_t c = 0; c < order.size(); ++c) {
        sorted.representatives.push_back(hc.representatives[order[c]]);
        sorted.members.push_back(hc.members[order[c]]);
        class_of_root[order[c]] = static_cast<int>(c);
      }
      // Member index per word, then the metric between representatives.
      std::map<PathWord, std::size_t> word_pos;
      for (std::size_t i = 0; i < m; ++i) word_pos[group[i]] = i;
      const std::size_t cm = sorted.representatives.size();
      sorted.metric.assign(cm * cm, 0.0);
      for (std::size_t a = 0; a < cm; ++a) {
        for (std::size_t b = 0; b < cm; ++b) {
          sorted.metric[a * cm + b] =
              dist[word_pos[sorted.representatives[a]] * m +
                   word_pos[sorted.representatives[b]]];
        }
      }
      for (std::size_t c = 0; c < cm; ++c) {
        for (const auto& member : sorted.members[c]) {
          out.class_index_[member] = static_cast<int>(c);
        }
      }
      hc = std::move(sorted);
    }
  }
  return out;
}

}  // namespace acats
