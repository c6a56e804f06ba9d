#include "acats/yoneda.hpp"

#include <algorithm>
#include <limits>

#include "acats/ac_checks.hpp"
#include "acats/error.hpp"

namespace acats {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_separated(const ACStructure& ac) {
  if (!ac.has_identities()) {
    throw PreconditionError("representable images require identities");
  }
  if (!is_separated(ac)) {
    throw PreconditionError("structure is not separated; quotient it first");
  }
}

void require_graph_composable(const ACStructure& ac) {
  const auto witness = graph_composability_witness(ac);
  if (!witness.empty()) {
    throw PreconditionError("graph composability fails at (" + witness[0] + ", " +
                            witness[1] + ", " + witness[2] + ")");
  }
}

FiniteMetricSpace arrow_space(const ACStructure& ac, const std::vector<ArrowIdx>& hom) {
  std::vector<std::string> points;
  points.reserve(hom.size());
  for (ArrowIdx a : hom) points.push_back(ac.arrow(a).id);
  std::vector<double> dist(hom.size() * hom.size(), 0.0);
  for (std::size_t i = 0; i < hom.size(); ++i) {
    for (std::size_t j = 0; j < hom.size(); ++j) {
      dist[i * hom.size() + j] = arrow_distance(ac, hom[i], hom[j]);
    }
  }
  return FiniteMetricSpace(std::move(points), std::move(dist), ac.tolerance());
}

}  // namespace

FiniteMetricSpace yoneda_space(const ACStructure& ac, ObjectIdx u, ObjectIdx x) {
  require_separated(ac);
  return arrow_space(ac, ac.hom(u, x));
}

FiniteMetricSpace yoneda_space(const ACStructure& ac, std::string_view u,
                               std::string_view x) {
  return yoneda_space(ac, ac.object_index(u), ac.object_index(x));
}

Correspondence yoneda_correspondence(const ACStructure& ac, ObjectIdx u, ArrowIdx f) {
  require_separated(ac);
  require_graph_composable(ac);
  const ObjectIdx x = ac.arrow(f).src;
  const ObjectIdx y = ac.arrow(f).dst;
  const auto& from = ac.hom(u, x);
  const auto& to = ac.hom(u, y);
  std::vector<double> values(from.size() * to.size(), 0.0);
  for (std::size_t i = 0; i < from.size(); ++i) {
    for (std::size_t j = 0; j < to.size(); ++j) {
      values[i * to.size() + j] = ac.d(from[i], f, to[j]);
    }
  }
  return Correspondence(arrow_space(ac, from), arrow_space(ac, to), std::move(values));
}

Correspondence yoneda_correspondence(const ACStructure& ac, std::string_view u,
                                     std::string_view f) {
  return yoneda_correspondence(ac, ac.object_index(u), ac.arrow_index(f));
}

double yoneda_defect(const ACStructure& ac, ObjectIdx u, ArrowIdx f, ArrowIdx g,
                     ArrowIdx h) {
  if (!ac.composable(f, g) || ac.arrow(h).src != ac.arrow(f).src ||
      ac.arrow(h).dst != ac.arrow(g).dst) {
    throw DomainError("defect requires a composable triple");
  }
  const Correspondence yf = yoneda_correspondence(ac, u, f);
  const Correspondence yg = yoneda_correspondence(ac, u, g);
  const Correspondence yh = yoneda_correspondence(ac, u, h);
  return tri_distance(yf, yg, yh);
}

double yoneda_defect(const ACStructure& ac, std::string_view u, std::string_view f,
                     std::string_view g, std::string_view h) {
  return yoneda_defect(ac, ac.object_index(u), ac.arrow_index(f), ac.arrow_index(g),
                       ac.arrow_index(h));
}

FiniteMetricSpace co_yoneda_space(const ACStructure& ac, ObjectIdx u, ObjectIdx x) {
  require_separated(ac);
  return arrow_space(ac, ac.hom(x, u));
}

FiniteMetricSpace co_yoneda_space(const ACStructure& ac, std::string_view u,
                                  std::string_view x) {
  return co_yoneda_space(ac, ac.object_index(u), ac.object_index(x));
}

Correspondence co_yoneda_correspondence(const ACStructure& ac, ObjectIdx u, ArrowIdx f) {
  require_separated(ac);
  require_graph_composable(ac);
  const ObjectIdx x = ac.arrow(f).src;
  const ObjectIdx y = ac.arrow(f).dst;
  const auto& from = ac.hom(y, u);
  const auto& to = ac.hom(x, u);
  std::vector<double> values(from.size() * to.size(), 0.0);
  for (std::size_t i = 0; i < from.size(); ++i) {
    for (std::size_t j = 0; j < to.size(); ++j) {
      values[i * to.size() + j] = ac.d(f, from[i], to[j]);
    }
  }
  return Correspondence(arrow_space(ac, from), arrow_space(ac, to), std::move(values));
}

Correspondence co_yoneda_correspondence(const ACStructure& ac, std::string_view u,
                                        std::string_view f) {
  return co_yoneda_correspondence(ac, ac.object_index(u), ac.arrow_index(f));
}

double co_yoneda_defect(const ACStructure& ac, ObjectIdx u, ArrowIdx f, ArrowIdx g,
                        ArrowIdx h) {
  if (!ac.composable(f, g) || ac.arrow(h).src != ac.arrow(f).src ||
      ac.arrow(h).dst != ac.arrow(g).dst) {
    throw DomainError("defect requires a composable triple");
  }
  const Correspondence yg = co_yoneda_correspondence(ac, u, g);
  const Correspondence yf = co_yoneda_correspondence(ac, u, f);
  const Correspondence yh = co_yoneda_correspondence(ac, u, h);
  return tri_distance(yg, yf, yh);
}

double co_yoneda_defect(const ACStructure& ac, std::string_view u, std::string_view f,
                        std::string_view g, std::string_view h) {
  return co_yoneda_defect(ac, ac.object_index(u), ac.arrow_index(f), ac.arrow_index(g),
                          ac.arrow_index(h));
}

double yoneda_lower_bound(const ACStructure& ac, ArrowIdx f, ArrowIdx g, ArrowIdx h) {
  if (!ac.composable(f, g) || ac.arrow(h).src != ac.arrow(f).src ||
      ac.arrow(h).dst != ac.arrow(g).dst) {
    throw DomainError("lower bound requires a composable triple");
  }
  double best = kInf;
  for (ArrowIdx b : ac.hom(ac.arrow(f).src, ac.arrow(f).dst)) {
    best = std::min(best, arrow_distance(ac, f, b) + ac.d(b, g, h));
  }
  return best;
}

double yoneda_lower_bound(const ACStructure& ac, std::string_view f, std::string_view g,
                          std::string_view h) {
  return yoneda_lower_bound(ac, ac.arrow_index(f), ac.arrow_index(g),
                            ac.arrow_index(h));
}

}  // namespace acats
