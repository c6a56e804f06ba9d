#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "acats/error.hpp"

namespace acats {

using ObjectIdx = int;
using ArrowIdx = int;

struct Arrow {
  std::string id;
  ObjectIdx src = -1;
  ObjectIdx dst = -1;
};

/// A finite directed multigraph with designated identity loops and a total
/// nonnegative table over composable arrow triples (f: x->y, g: y->z,
/// h: x->z). The table measures how far h is from being a composition of
/// f and g. Axioms are checked by validate(), not assumed here; the
/// builder only enforces shape (every id resolves, identities are loops,
/// the triple table is total).
///
/// Values are immutable after build(); all operations on them are pure.
class ACStructure {
 public:
  class Builder;

  /// An empty structure; populate through the Builder.
  ACStructure() = default;

  double tolerance() const { return tolerance_; }
  int object_count() const { return static_cast<int>(objects_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }

  const std::string& object_id(ObjectIdx x) const { return objects_[x]; }
  const Arrow& arrow(ArrowIdx f) const { return arrows_[f]; }
  ArrowIdx identity(ObjectIdx x) const { return identities_[x]; }
  bool is_identity(ArrowIdx f) const {
    return identities_[arrows_[f].src] == f && arrows_[f].src == arrows_[f].dst;
  }
  bool has_identities() const { return has_identities_; }

  ObjectIdx object_index(std::string_view id) const;
  ArrowIdx arrow_index(std::string_view id) const;

  /// Arrows from x to y, sorted by id.
  const std::vector<ArrowIdx>& hom(ObjectIdx x, ObjectIdx y) const {
    return homs_[static_cast<std::size_t>(x) * objects_.size() + y];
  }
  /// Position of f within hom(src(f), dst(f)).
  int hom_pos(ArrowIdx f) const { return hom_pos_[f]; }

  bool parallel(ArrowIdx f, ArrowIdx g) const {
    return arrows_[f].src == arrows_[g].src && arrows_[f].dst == arrows_[g].dst;
  }
  bool composable(ArrowIdx f, ArrowIdx g) const {
    return arrows_[f].dst == arrows_[g].src;
  }

  /// d(f, g, h) for a composable triple.
  double d(ArrowIdx f, ArrowIdx g, ArrowIdx h) const {
    const Arrow& af = arrows_[f];
    const Arrow& ag = arrows_[g];
    const double* block = triple_block(af.src, af.dst, ag.dst);
    const int hy = hom_size(af.dst, ag.dst);
    const int hz = hom_size(af.src, ag.dst);
    return block[(static_cast<std::size_t>(hom_pos_[f]) * hy + hom_pos_[g]) * hz +
                 hom_pos_[h]];
  }
  double d(std::string_view f, std::string_view g, std::string_view h) const;

  /// Dense value block for triples over (hom(x,y), hom(y,z), hom(x,z)),
  /// indexed (i * |hom(y,z)| + j) * |hom(x,z)| + k. Null when empty.
  const double* triple_block(ObjectIdx x, ObjectIdx y, ObjectIdx z) const {
    const std::size_t n = objects_.size();
    const auto& b = blocks_[(static_cast<std::size_t>(x) * n + y) * n + z];
    return b.empty() ? nullptr : b.data();
  }
  int hom_size(ObjectIdx x, ObjectIdx y) const {
    return static_cast<int>(hom(x, y).size());
  }

  /// Structural equality of the underlying graph (objects, arrows,
  /// identities), ignoring the triple table.
  bool same_graph(const ACStructure& other) const;

  /// Restriction to arrow subsets; subsets must contain the identities
  /// (unless the structure has none). Arrows are given by index.
  ACStructure restrict_arrows(const std::vector<ArrowIdx>& keep) const;

 private:
  friend class Builder;

  double tolerance_ = 1e-9;
  bool has_identities_ = true;
  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<ArrowIdx> identities_;  // per object; -1 when absent
  std::vector<std::vector<ArrowIdx>> homs_;
  std::vector<int> hom_pos_;
  std::vector<std::vector<double>> blocks_;
  std::map<std::string, ObjectIdx, std::less<>> object_index_;
  std::map<std::string, ArrowIdx, std::less<>> arrow_index_;
};

class ACStructure::Builder {
 public:
  Builder& tolerance(double tau);
  Builder& add_object(std::string id);
  Builder& add_arrow(std::string id, std::string_view src, std::string_view dst);
  Builder& set_identity(std::string_view object, std::string_view arrow);
  Builder& set_distance(std::string_view f, std::string_view g, std::string_view h,
                        double value);
  /// Accept a structure without identities (identity-dependent checks are
  /// skipped downstream).
  Builder& semi_categorical();

  /// Validates shape: ids resolve, identities are loops and present for
  /// every object (unless semi_categorical), the triple table is total.
  ACStructure build();

 private:
  ACStructure s_;
  bool semi_ = false;
  std::map<std::string, ObjectIdx, std::less<>> obj_idx_;
  std::map<std::string, ArrowIdx, std::less<>> arr_idx_;
  std::vector<std::string> identity_of_;  // per object, arrow id
  struct PendingTriple {
    std::string f, g, h;
    double value;
  };
  std::vector<PendingTriple> triples_;
};

/// A length-like function on arrows, keyed by arrow id.
using Amplitude = std::map<std::string, double>;

/// An object map plus per-arrow maps between two structures, keyed by id.
struct PrefunctorialMap {
  std::map<std::string, std::string> objects;
  std::map<std::string, std::string> arrows;
};

}  // namespace acats
