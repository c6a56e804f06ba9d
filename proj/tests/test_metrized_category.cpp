#include <doctest.h>

#include <cmath>

#include "acats/ac_checks.hpp"
#include "acats/generators.hpp"
#include "acats/metrized_category.hpp"

namespace {

using namespace acats;

MetrizedCategory trivial_category() {
  MetrizedCategory::Builder b;
  b.add_object("x");
  b.add_arrow("1", "x", "x");
  b.set_identity("x", "1");
  b.set_compose("1", "1", "1");
  b.set_phi("1", "1", 0.0);
  return b.build();
}

// The two-element monoid with e.e = e and phi(1, e) = 1.
MetrizedCategory idempotent_monoid() {
  MetrizedCategory::Builder b;
  b.add_object("x");
  b.add_arrow("1", "x", "x");
  b.add_arrow("e", "x", "x");
  b.set_identity("x", "1");
  b.set_compose("1", "1", "1");
  b.set_compose("1", "e", "e");
  b.set_compose("e", "1", "e");
  b.set_compose("e", "e", "e");
  b.set_phi("1", "e", 1.0);
  return b.build();
}

MetrizedCategory involutive_monoid() {
  MetrizedCategory::Builder b;
  b.add_object("x");
  b.add_arrow("1", "x", "x");
  b.add_arrow("e", "x", "x");
  b.set_identity("x", "1");
  b.set_compose("1", "1", "1");
  b.set_compose("1", "e", "e");
  b.set_compose("e", "1", "e");
  b.set_compose("e", "e", "1");
  b.set_phi("1", "e", 1.0);
  return b.build();
}

}  // namespace

TEST_CASE("the one-arrow category validates") {
  CHECK(validate_metcat(trivial_category()).passed());
}

TEST_CASE("the idempotent two-element monoid validates") {
  CHECK(validate_metcat(idempotent_monoid()).passed());
}

TEST_CASE("breaking the hom metric is caught with a witness") {
  MetrizedCategory::Builder broken;
  broken.add_object("x");
  broken.add_arrow("1", "x", "x");
  broken.add_arrow("e", "x", "x");
  broken.set_identity("x", "1");
  broken.set_compose("1", "1", "1");
  broken.set_compose("1", "e", "e");
  broken.set_compose("e", "1", "e");
  broken.set_compose("e", "e", "1");
  broken.set_phi("1", "e", 1.0);
  broken.set_phi("e", "1", 2.0);
  const auto report = validate_metcat(broken.build());
  CHECK_FALSE(report.passed());
  CHECK(report.worst().count("hom-metric-symmetry") == 1);
}

TEST_CASE("nonexpansiveness violations are caught on parallel pairs") {
  // A loop m whiskers three parallel arrows by swapping f0 and f1; with
  // phi(m, 1a) small and phi(f0, f1) large the bound
  // phi(m.f0, 1a.f0) <= phi(m, 1a) + phi(f0, f0) fails.
  MetrizedCategory::Builder b;
  b.add_object("a");
  b.add_object("b");
  b.add_arrow("1a", "a", "a");
  b.add_arrow("1b", "b", "b");
  b.add_arrow("m", "a", "a");
  b.add_arrow("f0", "a", "b");
  b.add_arrow("f1", "a", "b");
  b.add_arrow("f2", "a", "b");
  b.set_identity("a", "1a");
  b.set_identity("b", "1b");
  b.set_compose("1a", "1a", "1a");
  b.set_compose("m", "m", "m");
  b.set_compose("1a", "m", "m");
  b.set_compose("m", "1a", "m");
  b.set_compose("1b", "1b", "1b");
  for (const char* f : {"f0", "f1", "f2"}) {
    b.set_compose("1a", f, f);
    b.set_compose(f, "1b", f);
  }
  b.set_compose("m", "f0", "f1");
  b.set_compose("m", "f1", "f0");
  b.set_compose("m", "f2", "f2");
  b.set_phi("1a", "m", 0.1);
  b.set_phi("f0", "f1", 3.0);
  b.set_phi("f0", "f2", 1.5);
  b.set_phi("f1", "f2", 1.5);
  const auto report = validate_metcat(b.build());
  CHECK_FALSE(report.passed());
  CHECK(report.worst().count("composition-nonexpansive") == 1);
}

TEST_CASE("induce_ac reproduces the finite example at both vertices") {
  const ACStructure idem = induce_ac(idempotent_monoid());
  CHECK(idem.d("e", "e", "e") == 0.0);  // (u, v) = (0, 1)
  CHECK(idem.d("e", "e", "1") == 1.0);
  CHECK(validate(idem).passed());

  const ACStructure invo = induce_ac(involutive_monoid());
  CHECK(invo.d("e", "e", "e") == 1.0);  // (u, v) = (1, 0)
  CHECK(invo.d("e", "e", "1") == 0.0);
  CHECK(validate(invo).passed());
}

TEST_CASE("induced structures are 0-categoric and agree with phi on identities") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const MetrizedCategory mc = random_metcat(seed);
    const ACStructure ac = induce_ac(mc);
    CHECK(composition_defect(ac) <= ac.tolerance());
    for (ObjectIdx x = 0; x < mc.object_count(); ++x) {
      for (ObjectIdx y = 0; y < mc.object_count(); ++y) {
        for (ArrowIdx f : mc.hom(x, y)) {
          for (ArrowIdx g : mc.hom(x, y)) {
            // d(1_x, f, g) = phi(f, g) exactly, and likewise on the right.
            CHECK(ac.d(ac.identity(x), f, g) == mc.phi(f, g));
            CHECK(ac.d(f, ac.identity(y), g) == mc.phi(f, g));
          }
        }
      }
    }
  }
}

TEST_CASE("invalid categories are refused by induce_ac") {
  MetrizedCategory::Builder b;
  b.add_object("x");
  b.add_arrow("1", "x", "x");
  b.add_arrow("e", "x", "x");
  b.set_identity("x", "1");
  b.set_compose("1", "1", "1");
  b.set_compose("1", "e", "e");
  b.set_compose("e", "1", "e");
  b.set_compose("e", "e", "e");
  b.set_phi("1", "e", -1.0);
  CHECK_THROWS_AS(induce_ac(b.build()), PreconditionError);
}

TEST_CASE("random categories from the generator validate and stay in range") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const MetrizedCategory mc = random_metcat(seed);
    CHECK(validate_metcat(mc).passed());
    CHECK(mc.object_count() <= 4);
    for (ObjectIdx x = 0; x < mc.object_count(); ++x) {
      for (ObjectIdx y = 0; y < mc.object_count(); ++y) {
        CHECK(mc.hom(x, y).size() <= 4);
      }
    }
  }
}

TEST_CASE("separate_metcat merges zero-distance arrows") {
  MetrizedCategory::Builder b;
  b.add_object("x");
  b.add_arrow("1", "x", "x");
  b.add_arrow("e", "x", "x");
  b.add_arrow("e2", "x", "x");  // clone of e at distance zero
  b.set_identity("x", "1");
  for (const char* f : {"1", "e", "e2"}) {
    b.set_compose("1", f, f);
    b.set_compose(f, "1", f);
  }
  b.set_compose("e", "e", "e");
  b.set_compose("e", "e2", "e");
  b.set_compose("e2", "e", "e");
  b.set_compose("e2", "e2", "e");
  b.set_phi("1", "e", 1.0);
  b.set_phi("1", "e2", 1.0);
  b.set_phi("e", "e2", 0.0);
  const MetrizedCategory mc = b.build();
  REQUIRE(validate_metcat(mc).passed());

  const MetrizedCategory q = separate_metcat(mc);
  CHECK(q.arrow_count() == 2);
  CHECK(validate_metcat(q).passed());
  // The quotient metric separates distinct classes.
  for (ArrowIdx f = 0; f < q.arrow_count(); ++f) {
    for (ArrowIdx g = 0; g < q.arrow_count(); ++g) {
      if (f != g && q.parallel(f, g)) CHECK(q.phi(f, g) > q.tolerance());
    }
  }
}

TEST_CASE("separate_metcat keeps separated categories the same size") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const MetrizedCategory mc = random_metcat(seed);
    const MetrizedCategory q = separate_metcat(mc);
    CHECK(q.arrow_count() == mc.arrow_count());
    CHECK(q.object_count() == mc.object_count());
  }
}

TEST_CASE("sub_ac restricts the induced structure") {
  const MetrizedCategory mc = idempotent_monoid();

  SUBCASE("full subset reproduces induce_ac") {
    const ACStructure sub = sub_ac(mc, {"1", "e"});
    const ACStructure full = induce_ac(mc);
    CHECK(sub.arrow_count() == full.arrow_count());
    CHECK(sub.d("e", "e", "1") == full.d("e", "e", "1"));
  }
  SUBCASE("identities-only restriction is all-zero") {
    const ACStructure sub = sub_ac(mc, {"1"});
    CHECK(sub.arrow_count() == 1);
    CHECK(sub.d("1", "1", "1") == 0.0);
    CHECK(validate(sub).passed());
  }
  SUBCASE("dropping an identity is a domain error") {
    CHECK_THROWS_AS(sub_ac(mc, {"e"}), DomainError);
  }
  SUBCASE("random subsets validate") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      const MetrizedCategory rmc = random_metcat(seed);
      std::vector<std::string> keep;
      for (ObjectIdx x = 0; x < rmc.object_count(); ++x) {
        keep.push_back(rmc.arrow(rmc.identity(x)).id);
      }
      for (ArrowIdx f = 0; f < rmc.arrow_count(); ++f) {
        if (!rmc.is_identity(f) && (seed + f) % 2 == 0) {
          keep.push_back(rmc.arrow(f).id);
        }
      }
      CHECK(validate(sub_ac(rmc, keep)).passed());
    }
  }
}

TEST_CASE("partial tables are construction errors") {
  MetrizedCategory::Builder b;
  b.add_object("x");
  b.add_arrow("1", "x", "x");
  b.add_arrow("e", "x", "x");
  b.set_identity("x", "1");
  b.set_compose("1", "1", "1");
  b.set_compose("1", "e", "e");
  b.set_compose("e", "1", "e");
  // (e, e) left out
  b.set_phi("1", "e", 1.0);
  CHECK_THROWS_AS(b.build(), ConstructionError);
}
