#pragma once

#include "acats/ac_structure.hpp"
#include "acats/metcor.hpp"

namespace acats {

/// The covariant representable image of an object: the metric space of
/// arrows out of the base u into x, under the arrow pseudometric.
/// Requires a separated structure (quotient first otherwise).
FiniteMetricSpace yoneda_space(const ACStructure& ac, ObjectIdx u, ObjectIdx x);
FiniteMetricSpace yoneda_space(const ACStructure& ac, std::string_view u,
                               std::string_view x);

/// The correspondence hom(u, x) -> hom(u, y) attached to f: x -> y, with
/// entries d(a, f, b). Requires separation and graph composability (the
/// error names the offending object triple).
Correspondence yoneda_correspondence(const ACStructure& ac, ObjectIdx u, ArrowIdx f);
Correspondence yoneda_correspondence(const ACStructure& ac, std::string_view u,
                                     std::string_view f);

/// Functoriality defect at a composable triple:
/// corr_distance(compose(Y_u(f), Y_u(g)), Y_u(h)). Bounded by d(f, g, h)
/// whenever the structure is absolutely left transitive.
double yoneda_defect(const ACStructure& ac, ObjectIdx u, ArrowIdx f, ArrowIdx g,
                     ArrowIdx h);
double yoneda_defect(const ACStructure& ac, std::string_view u, std::string_view f,
                     std::string_view g, std::string_view h);

/// Contravariant duals: arrows into the base u.
FiniteMetricSpace co_yoneda_space(const ACStructure& ac, ObjectIdx u, ObjectIdx x);
FiniteMetricSpace co_yoneda_space(const ACStructure& ac, std::string_view u,
                                  std::string_view x);

/// For f: x -> y, the correspondence hom(y, u) -> hom(x, u) with entries
/// d(f, b, a) for b: y -> u, a: x -> u.
Correspondence co_yoneda_correspondence(const ACStructure& ac, ObjectIdx u, ArrowIdx f);
Correspondence co_yoneda_correspondence(const ACStructure& ac, std::string_view u,
                                        std::string_view f);

/// corr_distance(compose(Y^u(g), Y^u(f)), Y^u(h)); bounded by d(f, g, h)
/// under absolute right transitivity.
double co_yoneda_defect(const ACStructure& ac, ObjectIdx u, ArrowIdx f, ArrowIdx g,
                        ArrowIdx h);
double co_yoneda_defect(const ACStructure& ac, std::string_view u, std::string_view f,
                        std::string_view g, std::string_view h);

/// min over b parallel to f of arrow_distance(f, b) + d(b, g, h); +infinity
/// over an empty hom set. A lower bound for the maximal functorial
/// distance on transitive composable structures.
double yoneda_lower_bound(const ACStructure& ac, ArrowIdx f, ArrowIdx g, ArrowIdx h);
double yoneda_lower_bound(const ACStructure& ac, std::string_view f, std::string_view g,
                          std::string_view h);

}  // namespace acats
