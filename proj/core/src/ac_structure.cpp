#include "acats/ac_structure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace acats {

namespace {

std::string describe_arrow(const std::string& id) { return "arrow '" + id + "'"; }

}  // namespace

ObjectIdx ACStructure::object_index(std::string_view id) const {
  auto it = object_index_.find(id);
  if (it == object_index_.end()) {
    throw DomainError("unknown object '" + std::string(id) + "'");
  }
  return it->second;
}

ArrowIdx ACStructure::arrow_index(std::string_view id) const {
  auto it = arrow_index_.find(id);
  if (it == arrow_index_.end()) {
    throw DomainError("unknown arrow '" + std::string(id) + "'");
  }
  return it->second;
}

double ACStructure::d(std::string_view f, std::string_view g,
                      std::string_view h) const {
  ArrowIdx fi = arrow_index(f), gi = arrow_index(g), hi = arrow_index(h);
  if (!composable(fi, gi) || arrows_[fi].src != arrows_[hi].src ||
      arrows_[gi].dst != arrows_[hi].dst) {
    throw DomainError("triple (" + std::string(f) + ", " + std::string(g) + ", " +
                      std::string(h) + ") is not composable");
  }
  return d(fi, gi, hi);
}

bool ACStructure::same_graph(const ACStructure& other) const {
  if (objects_.size() != other.objects_.size() ||
      arrows_.size() != other.arrows_.size() ||
      has_identities_ != other.has_identities_) {
    return false;
  }
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (objects_[i] != other.objects_[i]) return false;
  }
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].id != other.arrows_[i].id || arrows_[i].src != other.arrows_[i].src ||
        arrows_[i].dst != other.arrows_[i].dst) {
      return false;
    }
  }
  return identities_ == other.identities_;
}

ACStructure ACStructure::restrict_arrows(const std::vector<ArrowIdx>& keep) const {
  std::vector<bool> kept(arrows_.size(), false);
  for (ArrowIdx f : keep) {
    if (f < 0 || f >= arrow_count()) throw DomainError("arrow index out of range");
    kept[f] = true;
  }
  if (has_identities_) {
    for (ObjectIdx x = 0; x < object_count(); ++x) {
      if (!kept[identities_[x]]) {
        throw DomainError("restriction drops the identity of object '" + objects_[x] +
                          "'");
      }
    }
  }
  Builder b;
  b.tolerance(tolerance_);
  if (!has_identities_) b.semi_categorical();
  for (const auto& o : objects_) b.add_object(o);
  for (ArrowIdx f = 0; f < arrow_count(); ++f) {
    if (!kept[f]) continue;
    b.add_arrow(arrows_[f].id, objects_[arrows_[f].src], objects_[arrows_[f].dst]);
  }
  if (has_identities_) {
    for (ObjectIdx x = 0; x < object_count(); ++x) {
      b.set_identity(objects_[x], arrows_[identities_[x]].id);
    }
  }
  for (ArrowIdx f = 0; f < arrow_count(); ++f) {
    if (!kept[f]) continue;
    for (ArrowIdx g = 0; g < arrow_count(); ++g) {
      if (!kept[g] || !composable(f, g)) continue;
      for (ArrowIdx h : hom(arrows_[f].src, arrows_[g].dst)) {
        if (!kept[h]) continue;
        b.set_distance(arrows_[f].id, arrows_[g].id, arrows_[h].id, d(f, g, h));
      }
    }
  }
  return b.build();
}

ACStructure::Builder& ACStructure::Builder::tolerance(double tau) {
  if (!(tau >= 0.0)) throw ConstructionError("tolerance must be nonnegative");
  s_.tolerance_ = tau;
  return *this;
}

ACStructure::Builder& ACStructure::Builder::add_object(std::string id) {
  if (id.empty()) throw ConstructionError("empty object id");
  if (!obj_idx_.emplace(id, static_cast<ObjectIdx>(s_.objects_.size())).second) {
    throw ConstructionError("duplicate object id '" + id + "'");
  }
  s_.objects_.push_back(std::move(id));
  identity_of_.emplace_back();
  return *this;
}

ACStructure::Builder& ACStructure::Builder::add_arrow(std::string id,
                                                      std::string_view src,
                                                      std::string_view dst) {
  if (id.empty()) throw ConstructionError("empty arrow id");
  auto si = obj_idx_.find(src);
  auto di = obj_idx_.find(dst);
  if (si == obj_idx_.end() || di == obj_idx_.end()) {
    throw ConstructionError(describe_arrow(id) + " references an unknown object");
  }
  if (!arr_idx_.emplace(id, static_cast<ArrowIdx>(s_.arrows_.size())).second) {
    throw ConstructionError("duplicate arrow id '" + id + "'");
  }
  s_.arrows_.push_back(Arrow{std::move(id), si->second, di->second});
  return *this;
}

ACStructure::Builder& ACStructure::Builder::set_identity(std::string_view object,
                                                         std::string_view arrow) {
  auto oi = obj_idx_.find(object);
  if (oi == obj_idx_.end()) {
    throw ConstructionError("identity for unknown object '" + std::string(object) + "'");
  }
  identity_of_[oi->second] = std::string(arrow);
  return *this;
}

ACStructure::Builder& ACStructure::Builder::set_distance(std::string_view f,
                                                         std::string_view g,
                                                         std::string_view h,
                                                         double value) {
  if (!std::isfinite(value)) {
    throw ConstructionError("non-finite triple value for (" + std::string(f) + ", " +
                            std::string(g) + ", " + std::string(h) + ")");
  }
  triples_.push_back(
      PendingTriple{std::string(f), std::string(g), std::string(h), value});
  return *this;
}

ACStructure::Builder& ACStructure::Builder::semi_categorical() {
  semi_ = true;
  return *this;
}

ACStructure ACStructure::Builder::build() {
  const std::size_t n = s_.objects_.size();
  s_.object_index_ = obj_idx_;
  s_.arrow_index_ = arr_idx_;
  s_.has_identities_ = !semi_;

  // Identities: every object needs a designated loop unless semi-categorical.
  s_.identities_.assign(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    if (identity_of_[x].empty()) {
      if (!semi_) {
        throw ConstructionError("object '" + s_.objects_[x] + "' has no identity arrow");
      }
      continue;
    }
    auto it = arr_idx_.find(identity_of_[x]);
    if (it == arr_idx_.end()) {
      throw ConstructionError("identity " + describe_arrow(identity_of_[x]) +
                              " does not exist");
    }
    const Arrow& a = s_.arrows_[it->second];
    if (a.src != static_cast<ObjectIdx>(x) || a.dst != static_cast<ObjectIdx>(x)) {
      throw ConstructionError("identity " + describe_arrow(identity_of_[x]) +
                              " is not a loop at '" + s_.objects_[x] + "'");
    }
    s_.identities_[x] = it->second;
  }

  // Hom sets, sorted by arrow id for deterministic enumeration.
  s_.homs_.assign(n * n, {});
  for (ArrowIdx f = 0; f < s_.arrow_count(); ++f) {
    s_.homs_[static_cast<std::size_t>(s_.arrows_[f].src) * n + s_.arrows_[f].dst]
        .push_back(f);
  }
  for (auto& hs : s_.homs_) {
    std::sort(hs.begin(), hs.end(), [this](ArrowIdx a, ArrowIdx b) {
      return s_.arrows_[a].id < s_.arrows_[b].id;
    });
  }
  s_.hom_pos_.assign(s_.arrows_.size(), 0);
  for (const auto& hs : s_.homs_) {
    for (std::size_t i = 0; i < hs.size(); ++i) {
      s_.hom_pos_[hs[i]] = static_cast<int>(i);
    }
  }

  // Dense triple blocks, initialized to NaN to detect missing entries.
  const double nan = std::numeric_limits<double>::quiet_NaN();
  s_.blocks_.assign(n * n * n, {});
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const std::size_t sz = s_.homs_[x * n + y].size() * s_.homs_[y * n + z].size() *
                               s_.homs_[x * n + z].size();
        s_.blocks_[(x * n + y) * n + z].assign(sz, nan);
      }
    }
  }
  for (const auto& t : triples_) {
    auto fi = arr_idx_.find(t.f), gi = arr_idx_.find(t.g), hi = arr_idx_.find(t.h);
    if (fi == arr_idx_.end() || gi == arr_idx_.end() || hi == arr_idx_.end()) {
      throw ConstructionError("triple (" + t.f + ", " + t.g + ", " + t.h +
                              ") references an unknown arrow");
    }
    const Arrow& af = s_.arrows_[fi->second];
    const Arrow& ag = s_.arrows_[gi->second];
    const Arrow& ah = s_.arrows_[hi->second];
    if (af.dst != ag.src || ah.src != af.src || ah.dst != ag.dst) {
      throw ConstructionError("triple (" + t.f + ", " + t.g + ", " + t.h +
                              ") is not composable");
    }
    const std::size_t x = af.src, y = af.dst, z = ag.dst;
    auto& block = s_.blocks_[(x * n + y) * n + z];
    const int hy = static_cast<int>(s_.homs_[y * n + z].size());
    const int hz = static_cast<int>(s_.homs_[x * n + z].size());
    block[(static_cast<std::size_t>(s_.hom_pos_[fi->second]) * hy +
           s_.hom_pos_[gi->second]) *
              hz +
          s_.hom_pos_[hi->second]] = t.value;
  }
  // Totality: a missing entry is a construction error, not a violation.
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        for (double v : s_.blocks_[(x * n + y) * n + z]) {
          if (std::isnan(v)) {
            throw ConstructionError(
                "triple table is not total over hom(" + s_.objects_[x] + ", " +
                s_.objects_[y] + ") x hom(" + s_.objects_[y] + ", " + s_.objects_[z] +
                ") x hom(" + s_.objects_[x] + ", " + s_.objects_[z] + ")");
          }
        }
      }
    }
  }
  return std::move(s_);
}

}  // namespace acats
