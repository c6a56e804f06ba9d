#include <doctest.h>

#include <cmath>

#include "acats/ac_checks.hpp"
#include "acats/document.hpp"
#include "acats/generators.hpp"

namespace {

using namespace acats;

bool same_structure(const ACStructure& a, const ACStructure& b) {
  if (!a.same_graph(b) || a.tolerance() != b.tolerance()) return false;
  for (ArrowIdx f = 0; f < a.arrow_count(); ++f) {
    for (ArrowIdx g = 0; g < a.arrow_count(); ++g) {
      if (!a.composable(f, g)) continue;
      for (ArrowIdx h : a.hom(a.arrow(f).src, a.arrow(g).dst)) {
        if (a.d(f, g, h) != b.d(f, g, h)) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("real serialization round-trips") {
  for (double v : {0.0, 1.0, 0.1, 1e-9, 123.456789012345, 2.5e-17}) {
    CHECK(string_to_real(real_to_string(v)) == v);
  }
  CHECK(real_to_string(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(std::isinf(string_to_real("inf")));
  CHECK(string_to_real("-inf") < 0);
  CHECK_THROWS_AS(string_to_real("abc"), ParseError);
  CHECK_THROWS_AS(string_to_real("1.5x"), ParseError);
}

TEST_CASE("ac documents round-trip structurally") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const ACStructure ac = induce_ac(random_metcat(seed));
    const StructureDocument doc = make_ac_document(ac);
    const StructureDocument back = parse_document(serialize_document(doc));
    REQUIRE(back.kind == "ac");
    CHECK(same_structure(ac, *back.ac));
  }
}

TEST_CASE("amplitudes survive the round trip") {
  const PlanarTwoMetric ptm = random_planar_two_metric(4, 4);
  auto [ac, alpha] = two_metric_to_ac(ptm.table);
  const StructureDocument doc = make_ac_document(ac, &alpha);
  const StructureDocument back = parse_document(serialize_document(doc));
  REQUIRE(back.amplitude.has_value());
  CHECK(*back.amplitude == alpha);
}

TEST_CASE("metcat documents round-trip") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const MetrizedCategory mc = random_metcat(seed);
    const StructureDocument back =
        parse_document(serialize_document(make_metcat_document(mc)));
    REQUIRE(back.kind == "metcat");
    const MetrizedCategory& rt = *back.metcat;
    REQUIRE(rt.arrow_count() == mc.arrow_count());
    for (ArrowIdx f = 0; f < mc.arrow_count(); ++f) {
      for (ArrowIdx g = 0; g < mc.arrow_count(); ++g) {
        if (mc.composable(f, g)) {
          CHECK(rt.arrow(rt.compose(f, g)).id == mc.arrow(mc.compose(f, g)).id);
        }
        if (mc.parallel(f, g)) {
          CHECK(rt.phi(f, g) == mc.phi(f, g));
        }
      }
    }
  }
}

TEST_CASE("space, correspondence, two-metric, and path documents round-trip") {
  const FiniteMetricSpace X = random_metric_space(5, 4);
  const StructureDocument sx = parse_document(serialize_document(make_space_document(X)));
  CHECK(*sx.space == X);

  const FiniteMetricSpace Y = random_metric_space(6, 3);
  const Correspondence f = random_correspondence(7, X, Y);
  const StructureDocument sc =
      parse_document(serialize_document(make_correspondence_document(f)));
  CHECK(*sc.correspondence == f);

  const PlanarTwoMetric ptm = random_planar_two_metric(8, 4);
  const StructureDocument st =
      parse_document(serialize_document(make_two_metric_document(ptm.table)));
  for (int i = 0; i < ptm.table.size(); ++i) {
    for (int j = 0; j < ptm.table.size(); ++j) {
      for (int k = 0; k < ptm.table.size(); ++k) {
        CHECK(st.two_metric->value(i, j, k) == ptm.table.value(i, j, k));
      }
    }
  }

  const PolygonSplit split = polygon_split("unit-square");
  const StructureDocument sp =
      parse_document(serialize_document(make_plpath_document(split.first, split.second)));
  CHECK(sp.paths->first.vertices == split.first.vertices);
  CHECK(sp.paths->second.vertices == split.second.vertices);
}

TEST_CASE("serialization is deterministic") {
  const MetrizedCategory mc = random_metcat(9);
  const std::string once = serialize_document(make_metcat_document(mc));
  const std::string twice = serialize_document(make_metcat_document(random_metcat(9)));
  CHECK(once == twice);
}

TEST_CASE("malformed documents raise parse errors") {
  CHECK_THROWS_AS(parse_document("{"), ParseError);
  CHECK_THROWS_AS(parse_document("{}"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"version": 2, "kind": "ac", "tolerance": 0,
                                     "payload": {}})"),
                  ParseError);
  CHECK_THROWS_AS(parse_document(R"({"version": 1, "kind": "nope", "tolerance": 0,
                                     "payload": {}})"),
                  ParseError);
  // Missing triple entries surface as parse-level failures.
  const std::string incomplete = R"({
    "version": 1, "kind": "ac", "tolerance": "1e-9",
    "payload": {
      "objects": ["x"],
      "arrows": [{"id": "1", "src": "x", "dst": "x"},
                  {"id": "e", "src": "x", "dst": "x"}],
      "identities": {"x": "1"},
      "triples": [{"f": "1", "g": "1", "h": "1", "value": "0"}]
    }})";
  CHECK_THROWS_AS(parse_document(incomplete), ParseError);
}

TEST_CASE("tolerance overrides replace the document field") {
  const ACStructure ac = finite_example(1.0, 1.0, 0.0);
  const std::string text = serialize_document(make_ac_document(ac));
  const double loose = 0.5;
  const StructureDocument doc = parse_document(text, &loose);
  CHECK(doc.tolerance == 0.5);
  CHECK(doc.ac->tolerance() == 0.5);
}

TEST_CASE("numbers may be given as JSON numbers or decimal strings") {
  const std::string text = R"({
    "version": 1, "kind": "metcor-space", "tolerance": 1e-9,
    "payload": {"points": ["a", "b"], "dist": [[0, "1.5"], ["1.5", 0]]}})";
  const StructureDocument doc = parse_document(text);
  CHECK(doc.space->dist(0, 1) == 1.5);
}
