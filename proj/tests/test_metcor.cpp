#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

#include "acats/ac_checks.hpp"
#include "acats/generators.hpp"
#include "acats/metcor.hpp"

namespace {

using namespace acats;

FiniteMetricSpace singleton(const std::string& label) {
  return FiniteMetricSpace({label}, {0.0});
}

FiniteMetricSpace two_points(double d) {
  return FiniteMetricSpace({"a", "b"}, {0.0, d, d, 0.0});
}

// Independent min-plus oracle: plain triple loop over value getters.
std::vector<double> minplus_oracle(const Correspondence& f, const Correspondence& g) {
  const int nx = f.source().size();
  const int ny = f.target().size();
  const int nz = g.target().size();
  std::vector<double> out(static_cast<std::size_t>(nx) * nz,
                          std::numeric_limits<double>::infinity());
  for (int x = 0; x < nx; ++x) {
    for (int z = 0; z < nz; ++z) {
      for (int y = 0; y < ny; ++y) {
        const double candidate = f.value(x, y) + g.value(y, z);
        auto& cell = out[static_cast<std::size_t>(x) * nz + z];
        if (candidate < cell) cell = candidate;
      }
    }
  }
  return out;
}

// (d1): h(x, z) <= f(x, y) + g(y, z) + eps for every y.
// (d2): for every (x, z) some y has f(x, y) + g(y, z) <= h(x, z) + eps.
bool d1d2_holds(const Correspondence& f, const Correspondence& g,
                const Correspondence& h, double eps) {
  const int nx = f.source().size();
  const int ny = f.target().size();
  const int nz = g.target().size();
  for (int x = 0; x < nx; ++x) {
    for (int z = 0; z < nz; ++z) {
      bool witness = false;
      for (int y = 0; y < ny; ++y) {
        const double through = f.value(x, y) + g.value(y, z);
        if (h.value(x, z) > through + eps) return false;  // (d1)
        if (through <= h.value(x, z) + eps) witness = true;
      }
      if (!witness) return false;  // (d2)
    }
  }
  return true;
}

}  // namespace

TEST_CASE("metric space validation") {
  CHECK(validate_metric_space(two_points(5.0)).passed());
  const FiniteMetricSpace broken({"a", "b", "c"},
                                 {0.0, 1.0, 5.0, 1.0, 0.0, 1.0, 5.0, 1.0, 0.0});
  const auto report = validate_metric_space(broken);
  CHECK_FALSE(report.passed());
  CHECK(report.worst().count("metric-triangle") == 1);
}

TEST_CASE("identity correspondences validate and are neutral") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const FiniteMetricSpace X = random_metric_space(seed, 4);
    const Correspondence i = identity_correspondence(X);
    CHECK(validate_correspondence(i).passed());
    CHECK(corr_distance(compose(i, i), i) <= 1e-12);
  }
}

TEST_CASE("identity correspondence on small spaces") {
  const Correspondence is = identity_correspondence(singleton("p"));
  CHECK(is.value(0, 0) == 0.0);
  const Correspondence it = identity_correspondence(two_points(5.0));
  CHECK(it.value(0, 0) == 0.0);
  CHECK(it.value(0, 1) == 5.0);
  CHECK(it.value(1, 0) == 5.0);
  CHECK(it.value(1, 1) == 0.0);
}

TEST_CASE("constant correspondences satisfy MC1 and MC2 for any coefficient") {
  const FiniteMetricSpace X = random_metric_space(3, 4);
  const FiniteMetricSpace Y = random_metric_space(4, 3);
  for (double c : {0.0, 1.0, 7.5}) {
    std::vector<double> values(static_cast<std::size_t>(X.size()) * Y.size(), c);
    const Correspondence f(X, Y, values);
    CHECK(validate_correspondence(f, 1.0).passed());
    CHECK(validate_correspondence(f, 0.25).passed());
  }
}

TEST_CASE("a lowered entry breaks MC1 with a witness") {
  // a and b close together, c far away; pulling f(a, c) down below
  // f(b, c) - d(a, b) breaks f(b, c) <= d(b, a) + f(a, c).
  const FiniteMetricSpace X({"a", "b", "c"},
                            {0.0, 0.5, 1.2, 0.5, 0.0, 1.0, 1.2, 1.0, 0.0});
  REQUIRE(validate_metric_space(X).passed());
  const Correspondence good = identity_correspondence(X);
  REQUIRE(validate_correspondence(good).passed());
  std::vector<double> values = good.values();
  values[0 * 3 + 2] = 0.25;
  const Correspondence bad(X, X, values);
  const auto report = validate_correspondence(bad);
  CHECK_FALSE(report.passed());
  REQUIRE(report.worst().count("mc1") == 1);
  const auto& worst = report.worst().at("mc1");
  CHECK(worst.witness == std::vector<std::string>{"b", "a", "c"});
}

TEST_CASE("the functional axiom is checked when requested") {
  const FiniteMetricSpace Y = two_points(4.0);
  const FiniteMetricSpace X = singleton("s");
  const Correspondence f(X, Y, {1.0, 1.0});
  CHECK(validate_correspondence(f, 1.0, false).passed());
  const auto report = validate_correspondence(f, 1.0, true);
  CHECK_FALSE(report.passed());  // d_Y(a, b) = 4 > 1 + 1
  CHECK(report.worst().count("mf") == 1);
}

TEST_CASE("MC0 is violated by an empty target") {
  const FiniteMetricSpace X = singleton("s");
  const FiniteMetricSpace empty({}, {});
  const Correspondence f(X, empty, {});
  const auto report = validate_correspondence(f);
  CHECK_FALSE(report.passed());
  CHECK(report.worst().count("mc0") == 1);
}

TEST_CASE("composition with identities reproduces the correspondence") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const FiniteMetricSpace X = random_metric_space(seed, 3);
    const FiniteMetricSpace Y = random_metric_space(seed + 100, 4);
    const Correspondence f = random_correspondence(seed, X, Y);
    REQUIRE(validate_correspondence(f).passed());
    const Correspondence left = compose(identity_correspondence(X), f);
    const Correspondence right = compose(f, identity_correspondence(Y));
    for (std::size_t i = 0; i < f.values().size(); ++i) {
      CHECK(std::abs(left.values()[i] - f.values()[i]) <= 1e-12);
      CHECK(std::abs(right.values()[i] - f.values()[i]) <= 1e-12);
    }
  }
}

TEST_CASE("composition of singletons is scalar addition") {
  const Correspondence f(singleton("x"), singleton("y"), {2.5});
  const Correspondence g(singleton("y"), singleton("z"), {4.0});
  const Correspondence c = compose(f, g);
  CHECK(c.value(0, 0) == 6.5);
}

TEST_CASE("composition matches the brute-force oracle") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const FiniteMetricSpace X = random_metric_space(seed, 3);
    const FiniteMetricSpace Y = random_metric_space(seed + 50, 4);
    const FiniteMetricSpace Z = random_metric_space(seed + 100, 2);
    const Correspondence f = random_correspondence(seed * 2, X, Y);
    const Correspondence g = random_correspondence(seed * 2 + 1, Y, Z);
    const Correspondence c = compose(f, g);
    const std::vector<double> expected = minplus_oracle(f, g);
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CHECK(c.values()[i] == expected[i]);
    }
    CHECK(validate_correspondence(c).passed());
  }
}

TEST_CASE("mid-space mismatch is a domain error") {
  const Correspondence f(singleton("x"), singleton("y"), {1.0});
  const Correspondence g(singleton("p"), singleton("q"), {1.0});
  CHECK_THROWS_AS(compose(f, g), DomainError);
}

TEST_CASE("composition through an empty middle space is refused") {
  const FiniteMetricSpace empty({}, {});
  const Correspondence f(singleton("x"), empty, {});
  const Correspondence g(empty, singleton("z"), {});
  CHECK_THROWS_AS(compose(f, g), PreconditionError);
}

TEST_CASE("an empty source composes to an empty correspondence") {
  const FiniteMetricSpace empty({}, {});
  const Correspondence none(empty, empty, {});
  const Correspondence c = compose(none, none);
  CHECK(c.source().empty());
  CHECK(c.target().empty());
  CHECK(validate_correspondence(none).passed());
}

TEST_CASE("corr_distance basics") {
  const FiniteMetricSpace X = random_metric_space(11, 3);
  const FiniteMetricSpace Y = random_metric_space(12, 4);
  const Correspondence f = random_correspondence(5, X, Y);
  CHECK(corr_distance(f, f) == 0.0);

  std::vector<double> shifted = f.values();
  for (auto& v : shifted) v += 0.75;
  CHECK(corr_distance(f, Correspondence(X, Y, shifted)) == doctest::Approx(0.75));

  const Correspondence g = random_correspondence(6, X, Y);
  double expected = 0.0;
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    expected = std::max(expected, std::abs(f.values()[i] - g.values()[i]));
  }
  CHECK(corr_distance(f, g) == expected);
}

TEST_CASE("tri_distance equals the distance to the composite") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const FiniteMetricSpace X = random_metric_space(seed, 3);
    const FiniteMetricSpace Y = random_metric_space(seed + 50, 3);
    const FiniteMetricSpace Z = random_metric_space(seed + 100, 3);
    const Correspondence f = random_correspondence(seed * 3, X, Y);
    const Correspondence g = random_correspondence(seed * 3 + 1, Y, Z);
    const Correspondence h = random_correspondence(seed * 3 + 2, X, Z);
    CHECK(tri_distance(f, g, h) ==
          doctest::Approx(corr_distance(compose(f, g), h)).epsilon(1e-14));
    CHECK(tri_distance(f, g, compose(f, g)) == 0.0);
  }
  const FiniteMetricSpace X = random_metric_space(77, 4);
  const Correspondence f = random_correspondence(78, X, random_metric_space(79, 3));
  CHECK(tri_distance(identity_correspondence(X), f, f) <= 1e-12);
}

TEST_CASE("tri_distance agrees with the (d1)/(d2) characterization") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (std::uint64_t seed = 1; checked < 500; ++seed) {
    const FiniteMetricSpace X = random_metric_space(seed, 3);
    const FiniteMetricSpace Y = random_metric_space(seed + 31, 4);
    const FiniteMetricSpace Z = random_metric_space(seed + 62, 3);
    const Correspondence f = random_correspondence(seed * 5, X, Y);
    const Correspondence g = random_correspondence(seed * 5 + 1, Y, Z);
    const Correspondence h = random_correspondence(seed * 5 + 2, X, Z);
    const double t = tri_distance(f, g, h);
    for (int trial = 0; trial < 5; ++trial) {
      const double eps = static_cast<double>(rng() >> 11) *
                         (1.0 / 9007199254740992.0) * (2.0 * t + 1.0);
      CHECK(d1d2_holds(f, g, h, eps) == (t <= eps));
      ++checked;
    }
  }
}

TEST_CASE("composition is associative, unital, and nonexpansive") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const FiniteMetricSpace X = random_metric_space(seed, 4);
    const FiniteMetricSpace Y = random_metric_space(seed + 11, 3);
    const FiniteMetricSpace Z = random_metric_space(seed + 22, 4);
    const FiniteMetricSpace W = random_metric_space(seed + 33, 2);
    const Correspondence f = random_correspondence(seed * 7, X, Y);
    const Correspondence g = random_correspondence(seed * 7 + 1, Y, Z);
    const Correspondence h = random_correspondence(seed * 7 + 2, Z, W);

    CHECK(corr_distance(compose(compose(f, g), h), compose(f, compose(g, h))) <=
          1e-12);
    CHECK(corr_distance(compose(identity_correspondence(X), f), f) <= 1e-12);
    CHECK(corr_distance(compose(f, identity_correspondence(Y)), f) <= 1e-12);

    const Correspondence f2 = random_correspondence(seed * 7 + 3, X, Y);
    const Correspondence g2 = random_correspondence(seed * 7 + 4, Y, Z);
    CHECK(corr_distance(compose(f, g), compose(f2, g2)) <=
          corr_distance(f, f2) + corr_distance(g, g2) + 1e-12);
  }
}

TEST_CASE("assembled structures validate and are absolutely transitive") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const MetcorAssembly assembly = random_metcor_assembly(seed, 4, 2);
    CHECK(validate(assembly.structure).passed());
    CHECK(composition_defect(assembly.structure) <= assembly.structure.tolerance());
    CHECK(check_transitivity(assembly.structure).passed());
  }
}
