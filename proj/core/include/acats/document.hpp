#pragma once

#include <optional>
#include <string>
#include <utility>

#include "acats/ac_structure.hpp"
#include "acats/geometry.hpp"
#include "acats/metcor.hpp"
#include "acats/metrized_category.hpp"

namespace acats {

/// A self-describing on-disk value: {version, kind, tolerance, payload}.
/// Exactly one payload member is engaged, matching `kind`:
///   "ac"             -> ac (+ optional amplitude)
///   "metcat"         -> metcat
///   "metcor-space"   -> space
///   "correspondence" -> correspondence
///   "two-metric"     -> two_metric
///   "plpath"         -> paths
/// Tables are explicit and dense; a missing entry is a parse-time error.
/// Real numbers are written as decimal strings; infinity is the token
/// "inf" (never produced inside payloads, accepted in reports).
struct StructureDocument {
  static constexpr int kVersion = 1;

  std::string kind;
  double tolerance = 1e-9;

  std::optional<ACStructure> ac;
  std::optional<Amplitude> amplitude;
  std::optional<MetrizedCategory> metcat;
  std::optional<FiniteMetricSpace> space;
  std::optional<Correspondence> correspondence;
  std::optional<TwoMetric> two_metric;
  std::optional<std::pair<PLPath, PLPath>> paths;
};

/// `tolerance_override` replaces the document's tolerance field before the
/// payload is built (command-line flag or environment default).
StructureDocument parse_document(const std::string& text,
                                 const double* tolerance_override = nullptr);
StructureDocument load_document(const std::string& path,
                                const double* tolerance_override = nullptr);
std::string serialize_document(const StructureDocument& doc);

StructureDocument make_ac_document(const ACStructure& ac,
                                   const Amplitude* amplitude = nullptr);
StructureDocument make_metcat_document(const MetrizedCategory& mc);
StructureDocument make_space_document(const FiniteMetricSpace& space);
StructureDocument make_correspondence_document(const Correspondence& corr);
StructureDocument make_two_metric_document(const TwoMetric& tm);
StructureDocument make_plpath_document(const PLPath& a, const PLPath& b);

/// Shortest round-trip decimal form; "inf"/"-inf" for infinities.
std::string real_to_string(double value);
/// Accepts decimal strings and the infinity tokens.
double string_to_real(const std::string& text);

}  // namespace acats
