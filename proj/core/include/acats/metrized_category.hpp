#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "acats/ac_structure.hpp"
#include "acats/report.hpp"

namespace acats {

/// A finite category given extensionally (objects, arrows, identity loops,
/// a total composition table) together with a pseudometric on every hom
/// set. compose(f, g) denotes "f then g", i.e. g after f. The defining
/// compatibility is that composition is nonexpansive for the sum metric
/// on pairs; validate_metcat checks it along with the category and
/// pseudometric axioms.
class MetrizedCategory {
 public:
  class Builder;

  /// An empty category; populate through the Builder.
  MetrizedCategory() = default;

  double tolerance() const { return tolerance_; }
  int object_count() const { return static_cast<int>(objects_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::string& object_id(ObjectIdx x) const { return objects_[x]; }
  const Arrow& arrow(ArrowIdx f) const { return arrows_[f]; }
  ArrowIdx identity(ObjectIdx x) const { return identities_[x]; }
  bool is_identity(ArrowIdx f) const { return identities_[arrows_[f].src] == f; }

  ObjectIdx object_index(std::string_view id) const;
  ArrowIdx arrow_index(std::string_view id) const;

  const std::vector<ArrowIdx>& hom(ObjectIdx x, ObjectIdx y) const {
    return homs_[static_cast<std::size_t>(x) * objects_.size() + y];
  }
  int hom_pos(ArrowIdx f) const { return hom_pos_[f]; }
  bool composable(ArrowIdx f, ArrowIdx g) const {
    return arrows_[f].dst == arrows_[g].src;
  }
  bool parallel(ArrowIdx f, ArrowIdx g) const {
    return arrows_[f].src == arrows_[g].src && arrows_[f].dst == arrows_[g].dst;
  }

  /// g after f, for f: x->y and g: y->z.
  ArrowIdx compose(ArrowIdx f, ArrowIdx g) const;
  /// Hom pseudometric between parallel arrows.
  double phi(ArrowIdx f, ArrowIdx g) const;

 private:
  friend class Builder;

  double tolerance_ = 1e-9;
  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<ArrowIdx> identities_;
  std::vector<std::vector<ArrowIdx>> homs_;
  std::vector<int> hom_pos_;
  std::vector<std::vector<ArrowIdx>> compose_;  // per (x,y,z) block
  std::vector<std::vector<double>> phi_;        // per (x,y) dense matrix
  std::map<std::string, ObjectIdx, std::less<>> object_index_;
  std::map<std::string, ArrowIdx, std::less<>> arrow_index_;
};

class MetrizedCategory::Builder {
 public:
  Builder& tolerance(double tau);
  Builder& add_object(std::string id);
  Builder& add_arrow(std::string id, std::string_view src, std::string_view dst);
  Builder& set_identity(std::string_view object, std::string_view arrow);
  Builder& set_compose(std::string_view f, std::string_view g, std::string_view result);
  /// Symmetric entries may be given in either order; the diagonal defaults
  /// to zero when omitted.
  Builder& set_phi(std::string_view a, std::string_view b, double value);

  MetrizedCategory build();

 private:
  MetrizedCategory c_;
  std::map<std::string, ObjectIdx, std::less<>> obj_idx_;
  std::map<std::string, ArrowIdx, std::less<>> arr_idx_;
  std::vector<std::string> identity_of_;
  struct PendingCompose {
    std::string f, g, result;
  };
  struct PendingPhi {
    std::string a, b;
    double value;
  };
  std::vector<PendingCompose> composes_;
  std::vector<PendingPhi> phis_;
};

/// Category axioms (exact, table-level), pseudometric axioms per hom set,
/// and nonexpansiveness of composition, all within tolerance where the
/// comparison is metric.
ValidationReport validate_metcat(const MetrizedCategory& mc,
                                 std::size_t witness_cap = ValidationReport::kDefaultWitnessCap);

/// The induced AC structure: d(f, g, h) := phi(compose(f, g), h) on the
/// same graph. Refuses invalid categories.
ACStructure induce_ac(const MetrizedCategory& mc);

/// Quotient by phi = 0 (within tolerance); composition descends to the
/// classes. The result is separated.
MetrizedCategory separate_metcat(const MetrizedCategory& mc);

/// Restriction of induce_ac to chosen arrows (ids), which must include
/// every identity.
ACStructure sub_ac(const MetrizedCategory& mc, const std::vector<std::string>& keep_ids);

}  // namespace acats
