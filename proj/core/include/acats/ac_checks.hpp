#pragma once

#include <map>
#include <string>
#include <utility>

#include "acats/ac_structure.hpp"
#include "acats/report.hpp"

namespace acats {

/// Checks every axiom of an AC structure: both identity axioms, left and
/// right associativity over all composable 6-tuples, nonnegativity of the
/// triple table, and the identity-transport equality
/// d(f, 1, g) = d(1, f, g). All comparisons carry the structure's
/// tolerance. Witness orders: identities [f]; nonnegativity [f, g, h];
/// associativity [f, g, h, a, b, c]; identity-transport [f, g].
/// Identity-dependent families are skipped for semi-categorical input.
ValidationReport validate(const ACStructure& ac,
                          std::size_t witness_cap = ValidationReport::kDefaultWitnessCap);

/// The induced pseudometric on parallel arrows: d(1_x, f, g).
double arrow_distance(const ACStructure& ac, ArrowIdx f, ArrowIdx g);
double arrow_distance(const ACStructure& ac, std::string_view f, std::string_view g);

struct SeparationResult {
  ACStructure structure;
  /// arrow id -> class id (the smallest member id).
  std::map<std::string, std::string> class_of;
};

/// Quotients away zero-distance parallel arrows (union-find over the
/// relation arrow_distance <= tolerance). Class representatives are the
/// smallest arrow ids; triple values are taken on representatives.
SeparationResult separate(const ACStructure& ac);

/// True when arrow_distance(f, g) > tolerance for every pair of distinct
/// parallel arrows.
bool is_separated(const ACStructure& ac);

/// Worst-case composition defect: max over composable pairs (f, g) of
/// min over h of d(f, g, h). Returns +infinity when some composable pair
/// has an empty target hom set; 0 when there are no composable pairs.
double composition_defect(const ACStructure& ac);

/// (f id, g id) -> composite id, for f: x->y then g: y->z.
using CompositionTable = std::map<std::pair<std::string, std::string>, std::string>;

/// For a separated structure with composition_defect <= tolerance, returns
/// the unique h with d(f, g, h) <= tolerance for every composable pair,
/// after verifying uniqueness, the category axioms of the resulting table,
/// and nonexpansiveness of composition within 3*tolerance. Preconditions
/// and ambiguity failures raise PreconditionError.
CompositionTable extract_composition(const ACStructure& ac);

/// Amplitude axioms: alpha(1_x) = 0, the three permuted triangle
/// inequalities against d, plus the derived nonnegativity and
/// |alpha(f) - alpha(f')| <= arrow_distance(f, f') bounds.
/// alpha must be total on arrows.
ValidationReport check_amplitude(const ACStructure& ac, const Amplitude& alpha,
                                 std::size_t witness_cap = ValidationReport::kDefaultWitnessCap);

enum class TransitivitySide { kLeft, kRight, kBoth };

/// Transitivity with respect to alpha (nullptr means the constant 1, the
/// absolute variant). An infimum over an empty hom set is +infinity and
/// its product with 0 is 0. Witness order: [f, g, h, k, l].
ValidationReport check_transitivity(
    const ACStructure& ac, TransitivitySide side = TransitivitySide::kBoth,
    const Amplitude* alpha = nullptr,
    std::size_t witness_cap = ValidationReport::kDefaultWitnessCap);

/// Hom-set composability of the underlying graph: whenever hom(x, y) and
/// hom(y, z) are nonempty, hom(x, z) is nonempty.
bool graph_composable(const ACStructure& ac);

/// If graph_composable fails, returns the offending object triple ids.
/// Empty vector when the hypothesis holds.
std::vector<std::string> graph_composability_witness(const ACStructure& ac);

/// k-functoriality of a map between structures: unitality and
/// d(Ff, Fg, Fh) <= k * d(f, g, h), plus the derived Lipschitz bound on
/// arrow distances. Ill-typed maps raise DomainError.
ValidationReport check_functorial(const PrefunctorialMap& map, const ACStructure& src,
                                  const ACStructure& dst, double k,
                                  std::size_t witness_cap = ValidationReport::kDefaultWitnessCap);

/// k-naturality of eta between two prefunctorial maps:
/// d(F(f), eta(g), eta(h)) <= k * d(f, g, h) and
/// d(eta(f), G(g), eta(h)) <= k * d(f, g, h).
ValidationReport check_natural(const PrefunctorialMap& F, const PrefunctorialMap& G,
                               const std::map<std::string, std::string>& eta,
                               const ACStructure& src, const ACStructure& dst, double k,
                               std::size_t witness_cap = ValidationReport::kDefaultWitnessCap);

/// Nonnegative combination c1*d1 + c2*d2 of two structures sharing one
/// graph. The result validates whenever both inputs do.
ACStructure cone_combine(const ACStructure& d1, const ACStructure& d2, double c1,
                         double c2);

}  // namespace acats
