#include "acats/metrized_category.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "acats/error.hpp"

namespace acats {

ObjectIdx MetrizedCategory::object_index(std::string_view id) const {
  auto it = object_index_.find(id);
  if (it == object_index_.end()) {
    throw DomainError("unknown object '" + std::string(id) + "'");
  }
  return it->second;
}

ArrowIdx MetrizedCategory::arrow_index(std::string_view id) const {
  auto it = arrow_index_.find(id);
  if (it == arrow_index_.end()) {
    throw DomainError("unknown arrow '" + std::string(id) + "'");
  }
  return it->second;
}

ArrowIdx MetrizedCategory::compose(ArrowIdx f, ArrowIdx g) const {
  if (!composable(f, g)) {
    throw DomainError("arrows '" + arrows_[f].id + "' and '" + arrows_[g].id +
                      "' are not composable");
  }
  const std::size_t n = objects_.size();
  const std::size_t x = arrows_[f].src, y = arrows_[f].dst, z = arrows_[g].dst;
  const auto& block = compose_[(x * n + y) * n + z];
  const int hy = static_cast<int>(homs_[y * n + z].size());
  return block[static_cast<std::size_t>(hom_pos_[f]) * hy + hom_pos_[g]];
}

double MetrizedCategory::phi(ArrowIdx f, ArrowIdx g) const {
  if (!parallel(f, g)) {
    throw DomainError("hom metric requires parallel arrows ('" + arrows_[f].id +
                      "' and '" + arrows_[g].id + "')");
  }
  const std::size_t n = objects_.size();
  const std::size_t x = arrows_[f].src, y = arrows_[f].dst;
  const auto& mat = phi_[x * n + y];
  const int hn = static_cast<int>(homs_[x * n + y].size());
  return mat[static_cast<std::size_t>(hom_pos_[f]) * hn + hom_pos_[g]];
}

MetrizedCategory::Builder& MetrizedCategory::Builder::tolerance(double tau) {
  if (!(tau >= 0.0)) throw ConstructionError("tolerance must be nonnegative");
  c_.tolerance_ = tau;
  return *this;
}

MetrizedCategory::Builder& MetrizedCategory::Builder::add_object(std::string id) {
  if (id.empty()) throw ConstructionError("empty object id");
  if (!obj_idx_.emplace(id, static_cast<ObjectIdx>(c_.objects_.size())).second) {
    throw ConstructionError("duplicate object id '" + id + "'");
  }
  c_.objects_.push_back(std::move(id));
  identity_of_.emplace_back();
  return *this;
}

MetrizedCategory::Builder& MetrizedCategory::Builder::add_arrow(std::string id,
                                                                std::string_view src,
                                                                std::string_view dst) {
  if (id.empty()) throw ConstructionError("empty arrow id");
  auto si = obj_idx_.find(src);
  auto di = obj_idx_.find(dst);
  if (si == obj_idx_.end() || di == obj_idx_.end()) {
    throw ConstructionError("arrow '" + id + "' references an unknown object");
  }
  if (!arr_idx_.emplace(id, static_cast<ArrowIdx>(c_.arrows_.size())).second) {
    throw ConstructionError("duplicate arrow id '" + id + "'");
  }
  c_.arrows_.push_back(Arrow{std::move(id), si->second, di->second});
  return *this;
}

MetrizedCategory::Builder& MetrizedCategory::Builder::set_identity(
    std::string_view object, std::string_view arrow) {
  auto oi = obj_idx_.find(object);
  if (oi == obj_idx_.end()) {
    throw ConstructionError("identity for unknown object '" + std::string(object) +
                            "'");
  }
  identity_of_[oi->second] = std::string(arrow);
  return *this;
}

MetrizedCategory::Builder& MetrizedCategory::Builder::set_compose(
    std::string_view f, std::string_view g, std::string_view result) {
  composes_.push_back(
      PendingCompose{std::string(f), std::string(g), std::string(result)});
  return *this;
}

MetrizedCategory::Builder& MetrizedCategory::Builder::set_phi(std::string_view a,
                                                              std::string_view b,
                                                              double value) {
  if (!std::isfinite(value)) {
    throw ConstructionError("non-finite hom metric entry (" + std::string(a) + ", " +
                            std::string(b) + ")");
  }
  phis_.push_back(PendingPhi{std::string(a), std::string(b), value});
  return *this;
}

MetrizedCategory MetrizedCategory::Builder::build() {
  const std::size_t n = c_.objects_.size();
  c_.object_index_ = obj_idx_;
  c_.arrow_index_ = arr_idx_;

  c_.identities_.assign(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    if (identity_of_[x].empty()) {
      throw ConstructionError("object '" + c_.objects_[x] + "' has no identity arrow");
    }
    auto it = arr_idx_.find(identity_of_[x]);
    if (it == arr_idx_.end()) {
      throw ConstructionError("identity arrow '" + identity_of_[x] +
                              "' does not exist");
    }
    const Arrow& a = c_.arrows_[it->second];
    if (a.src != static_cast<ObjectIdx>(x) || a.dst != static_cast<ObjectIdx>(x)) {
      throw ConstructionError("identity arrow '" + identity_of_[x] +
                              "' is not a loop at '" + c_.objects_[x] + "'");
    }
    c_.identities_[x] = it->second;
  }

  c_.homs_.assign(n * n, {});
  for (ArrowIdx f = 0; f < c_.arrow_count(); ++f) {
    c_.homs_[static_cast<std::size_t>(c_.arrows_[f].src) * n + c_.arrows_[f].dst]
        .push_back(f);
  }
  for (auto& hs : c_.homs_) {
    std::sort(hs.begin(), hs.end(), [this](ArrowIdx a, ArrowIdx b) {
      return c_.arrows_[a].id < c_.arrows_[b].id;
    });
  }
  c_.hom_pos_.assign(c_.arrows_.size(), 0);
  for (const auto& hs : c_.homs_) {
    for (std::size_t i = 0; i < hs.size(); ++i) {
      c_.hom_pos_[hs[i]] = static_cast<int>(i);
    }
  }

  // Composition blocks: every composable pair needs an entry.
  c_.compose_.assign(n * n * n, {});
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        c_.compose_[(x * n + y) * n + z].assign(
            c_.homs_[x * n + y].size() * c_.homs_[y * n + z].size(), -1);
      }
    }
  }
  for (const auto& pc : composes_) {
    auto fi = arr_idx_.find(pc.f), gi = arr_idx_.find(pc.g),
         ri = arr_idx_.find(pc.result);
    if (fi == arr_idx_.end() || gi == arr_idx_.end() || ri == arr_idx_.end()) {
      throw ConstructionError("composition entry (" + pc.f + ", " + pc.g +
                              ") references an unknown arrow");
    }
    const Arrow& af = c_.arrows_[fi->second];
    const Arrow& ag = c_.arrows_[gi->second];
    const Arrow& ar = c_.arrows_[ri->second];
    if (af.dst != ag.src || ar.src != af.src || ar.dst != ag.dst) {
      throw ConstructionError("composition entry (" + pc.f + ", " + pc.g + ") -> " +
                              pc.result + " is ill-typed");
    }
    const std::size_t x = af.src, y = af.dst, z = ag.dst;
    const int hy = static_cast<int>(c_.homs_[y * n + z].size());
    c_.compose_[(x * n + y) * n + z]
               [static_cast<std::size_t>(c_.hom_pos_[fi->second]) * hy +
                c_.hom_pos_[gi->second]] = ri->second;
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        for (ArrowIdx r : c_.compose_[(x * n + y) * n + z]) {
          if (r < 0) {
            throw ConstructionError("composition table is not total over hom(" +
                                    c_.objects_[x] + ", " + c_.objects_[y] +
                                    ") x hom(" + c_.objects_[y] + ", " +
                                    c_.objects_[z] + ")");
          }
        }
      }
    }
  }

  // Hom metric matrices; diagonal defaults to zero, off-diagonal entries
  // may be given in either order but must be present.
  const double nan = std::numeric_limits<double>::quiet_NaN();
  c_.phi_.assign(n * n, {});
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t hn = c_.homs_[x * n + y].size();
      c_.phi_[x * n + y].assign(hn * hn, nan);
    }
  }
  for (const auto& pp : phis_) {
    auto ai = arr_idx_.find(pp.a);
    auto bi = arr_idx_.find(pp.b);
    if (ai == arr_idx_.end() || bi == arr_idx_.end()) {
      throw ConstructionError("hom metric entry (" + pp.a + ", " + pp.b +
                              ") references an unknown arrow");
    }
    const Arrow& a = c_.arrows_[ai->second];
    const Arrow& b = c_.arrows_[bi->second];
    if (a.src != b.src || a.dst != b.dst) {
      throw ConstructionError("hom metric entry (" + pp.a + ", " + pp.b +
                              ") is not a parallel pair");
    }
    const std::size_t hn = c_.homs_[static_cast<std::size_t>(a.src) * n + a.dst].size();
    c_.phi_[static_cast<std::size_t>(a.src) * n + a.dst]
           [static_cast<std::size_t>(c_.hom_pos_[ai->second]) * hn +
            c_.hom_pos_[bi->second]] = pp.value;
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto& mat = c_.phi_[x * n + y];
      const std::size_t hn = c_.homs_[x * n + y].size();
      for (std::size_t i = 0; i < hn; ++i) {
        if (std::isnan(mat[i * hn + i])) mat[i * hn + i] = 0.0;
        for (std::size_t j = 0; j < hn; ++j) {
          if (std::isnan(mat[i * hn + j]) && !std::isnan(mat[j * hn + i])) {
            mat[i * hn + j] = mat[j * hn + i];
          }
        }
      }
      for (std::size_t i = 0; i < hn; ++i) {
        for (std::size_t j = 0; j < hn; ++j) {
          if (std::isnan(mat[i * hn + j])) {
            throw ConstructionError(
                "hom metric is not total on hom(" + c_.objects_[x] + ", " +
                c_.objects_[y] + ") at (" +
                c_.arrows_[c_.homs_[x * n + y][i]].id + ", " +
                c_.arrows_[c_.homs_[x * n + y][j]].id + ")");
          }
        }
      }
    }
  }
  return std::move(c_);
}

ValidationReport validate_metcat(const MetrizedCategory& mc, std::size_t witness_cap) {
  ValidationReport report(witness_cap);
  const double tau = mc.tolerance();
  const int n = mc.object_count();

  for (ArrowIdx f = 0; f < mc.arrow_count(); ++f) {
    const ArrowIdx one_src = mc.identity(mc.arrow(f).src);
    const ArrowIdx one_dst = mc.identity(mc.arrow(f).dst);
    if (mc.compose(one_src, f) != f) {
      report.add({"left-unit",
                  {mc.arrow(f).id, mc.arrow(mc.compose(one_src, f)).id},
                  1.0,
                  0.0,
                  1.0});
    }
    if (mc.compose(f, one_dst) != f) {
      report.add({"right-unit",
                  {mc.arrow(f).id, mc.arrow(mc.compose(f, one_dst)).id},
                  1.0,
                  0.0,
                  1.0});
    }
  }
  for (ArrowIdx f = 0; f < mc.arrow_count(); ++f) {
    for (ArrowIdx g = 0; g < mc.arrow_count(); ++g) {
      if (!mc.composable(f, g)) continue;
      for (ArrowIdx h = 0; h < mc.arrow_count(); ++h) {
        if (!mc.composable(g, h)) continue;
        if (mc.compose(mc.compose(f, g), h) != mc.compose(f, mc.compose(g, h))) {
          report.add({"composition-associativity",
                      {mc.arrow(f).id, mc.arrow(g).id, mc.arrow(h).id},
                      1.0,
                      0.0,
                      1.0});
        }
      }
    }
  }

  for (ObjectIdx x = 0; x < n; ++x) {
    for (ObjectIdx y = 0; y < n; ++y) {
      const auto& hs = mc.hom(x, y);
      for (ArrowIdx f : hs) {
        const double refl = std::abs(mc.phi(f, f));
        if (refl > tau) {
          report.add({"hom-metric-reflexivity", {mc.arrow(f).id}, refl, 0.0, refl});
        }
        for (ArrowIdx g : hs) {
          const double v = mc.phi(f, g);
          if (-v > tau) {
            report.add(
                {"hom-metric-nonnegativity", {mc.arrow(f).id, mc.arrow(g).id}, 0.0,
                 v, -v});
          }
          const double asym = std::abs(v - mc.phi(g, f));
          if (asym > tau) {
            report.add({"hom-metric-symmetry", {mc.arrow(f).id, mc.arrow(g).id}, asym,
                        0.0, asym});
          }
          for (ArrowIdx h : hs) {
            const double rhs = mc.phi(f, h) + mc.phi(h, g);
            if (v > rhs + tau) {
              report.add({"hom-metric-triangle",
                          {mc.arrow(f).id, mc.arrow(g).id, mc.arrow(h).id},
                          v,
                          rhs,
                          v - rhs});
            }
          }
        }
      }
    }
  }

  // Nonexpansiveness: phi(g.f, g'.f') <= phi(f, f') + phi(g, g').
  for (ArrowIdx f = 0; f < mc.arrow_count(); ++f) {
    for (ArrowIdx g = 0; g < mc.arrow_count(); ++g) {
      if (!mc.composable(f, g)) continue;
      for (ArrowIdx f2 : mc.hom(mc.arrow(f).src, mc.arrow(f).dst)) {
        for (ArrowIdx g2 : mc.hom(mc.arrow(g).src, mc.arrow(g).dst)) {
          const double lhs = mc.phi(mc.compose(f, g), mc.compose(f2, g2));
          const double rhs = mc.phi(f, f2) + mc.phi(g, g2);
          if (lhs > rhs + tau) {
            report.add({"composition-nonexpansive",
                        {mc.arrow(f).id, mc.arrow(g).id, mc.arrow(f2).id,
                         mc.arrow(g2).id},
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

ACStructure induce_ac(const MetrizedCategory& mc) {
  const ValidationReport report = validate_metcat(mc, 1);
  if (!report.passed()) {
    const auto& worst = report.worst().begin()->second;
    throw PreconditionError("category does not validate: " + worst.axiom + " (gap " +
                            std::to_string(worst.gap) + ")");
  }
  ACStructure::Builder b;
  b.tolerance(mc.tolerance());
  for (ObjectIdx x = 0; x < mc.object_count(); ++x) b.add_object(mc.object_id(x));
  for (ArrowIdx f = 0; f < mc.arrow_count(); ++f) {
    b.add_arrow(mc.arrow(f).id, mc.object_id(mc.arrow(f).src),
                mc.object_id(mc.arrow(f).dst));
  }
  for (ObjectIdx x = 0; x < mc.object_count(); ++x) {
    b.set_identity(mc.object_id(x), mc.arrow(mc.identity(x)).id);
  }
  for (ArrowIdx f = 0; f < mc.arrow_count(); ++f) {
    for (ArrowIdx g = 0; g < mc.arrow_count(); ++g) {
      if (!mc.composable(f, g)) continue;
      const ArrowIdx gf = mc.compose(f, g);
      for (ArrowIdx h : mc.hom(mc.arrow(f).src, mc.arrow(g).dst)) {
        b.set_distance(mc.arrow(f).id, mc.arrow(g).id, mc.arrow(h).id,
                       mc.phi(gf, h));
      }
    }
  }
  return b.build();
}

MetrizedCategory separate_metcat(const MetrizedCategory& mc) {
  const double tau = mc.tolerance();
  // Union-find over phi <= tau on each hom set.
  std::vector<int> parent(mc.arrow_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = a;
  };
  for (ObjectIdx x = 0; x < mc.object_count(); ++x) {
    for (ObjectIdx y = 0; y < mc.object_count(); ++y) {
      const auto& hs = mc.hom(x, y);
      for (std::size_t i = 0; i < hs.size(); ++i) {
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
          if (mc.phi(hs[i], hs[j]) <= tau) unite(hs[i], hs[j]);
        }
      }
    }
  }
  std::vector<ArrowIdx> rep(mc.arrow_count());
  std::iota(rep.begin(), rep.end(), 0);
  for (ArrowIdx f = 0; f < mc.arrow_count(); ++f) {
    const int root = find(f);
    if (mc.arrow(f).id < mc.arrow(rep[root]).id) rep[root] = f;
  }
  std::vector<ArrowIdx> cls(mc.arrow_count());
  for (ArrowIdx f = 0; f < mc.arrow_count(); ++f) cls[f] = rep[find(f)];

  MetrizedCategory::Builder b;
  b.tolerance(tau);
  for (ObjectIdx x = 0; x < mc.object_count(); ++x) b.add_object(mc.object_id(x));
  for (ArrowIdx f = 0; f < mc.arrow_count(); ++f) {
    if (cls[f] != f) continue;
    b.add_arrow(mc.arrow(f).id, mc.object_id(mc.arrow(f).src),
                mc.object_id(mc.arrow(f).dst));
  }
  for (ObjectIdx x = 0; x < mc.object_count(); ++x) {
    b.set_identity(mc.object_id(x), mc.arrow(cls[mc.identity(x)]).id);
  }
  for (ArrowIdx f = 0; f < mc.arrow_count(); ++f) {
    if (cls[f] != f) continue;
    for (ArrowIdx g = 0; g < mc.arrow_count(); ++g) {
      if (cls[g] != g || !mc.composable(f, g)) continue;
      b.set_compose(mc.arrow(f).id, mc.arrow(g).id,
                    mc.arrow(cls[mc.compose(f, g)]).id);
    }
    for (ArrowIdx g : mc.hom(mc.arrow(f).src, mc.arrow(f).dst)) {
      if (cls[g] != g) continue;
      b.set_phi(mc.arrow(f).id, mc.arrow(g).id, mc.phi(f, g));
    }
  }
  return b.build();
}

ACStructure sub_ac(const MetrizedCategory& mc, const std::vector<std::string>& keep_ids) {
  const ACStructure full = induce_ac(mc);
  std::vector<ArrowIdx> keep;
  keep.reserve(keep_ids.size());
  for (const auto& id : keep_ids) keep.push_back(full.arrow_index(id));
  return full.restrict_arrows(keep);
}

}  // namespace acats
