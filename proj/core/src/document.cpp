#include "acats/document.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "acats/error.hpp"

namespace acats {

namespace {

using Json = nlohmann::ordered_json;

Json real_json(double value) { return Json(real_to_string(value)); }

double real_from(const Json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return string_to_real(j.get<std::string>());
  throw ParseError("expected a number at " + where);
}

const Json& field(const Json& j, const char* name, const std::string& where) {
  auto it = j.find(name);
  if (it == j.end()) {
    throw ParseError("missing field '" + std::string(name) + "' in " + where);
  }
  return *it;
}

std::string string_field(const Json& j, const char* name, const std::string& where) {
  const Json& f = field(j, name, where);
  if (!f.is_string()) {
    throw ParseError("field '" + std::string(name) + "' in " + where +
                     " must be a string");
  }
  return f.get<std::string>();
}

Json space_payload(const FiniteMetricSpace& space) {
  Json payload;
  payload["points"] = space.points();
  Json rows = Json::array();
  for (int i = 0; i < space.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < space.size(); ++j) row.push_back(real_json(space.dist(i, j)));
    rows.push_back(std::move(row));
  }
  payload["dist"] = std::move(rows);
  return payload;
}

FiniteMetricSpace parse_space_payload(const Json& payload, double tolerance,
                                      const std::string& where) {
  const Json& points = field(payload, "points", where);
  const Json& dist = field(payload, "dist", where);
  if (!points.is_array() || !dist.is_array()) {
    throw ParseError("space payload in " + where + " must carry arrays");
  }
  std::vector<std::string> labels;
  for (const auto& p : points) labels.push_back(p.get<std::string>());
  const std::size_t n = labels.size();
  if (dist.size() != n) {
    throw ParseError("distance matrix in " + where + " has the wrong row count");
  }
  std::vector<double> values;
  values.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!dist[i].is_array() || dist[i].size() != n) {
      throw ParseError("distance matrix in " + where + " row " + std::to_string(i) +
                       " has the wrong length");
    }
    for (std::size_t j = 0; j < n; ++j) {
      values.push_back(real_from(dist[i][j], where + ".dist"));
    }
  }
  return FiniteMetricSpace(std::move(labels), std::move(values), tolerance);
}

void graph_payload(Json& payload, int objects, const std::string* object_ids,
                   int arrows, const Arrow* arrow_list,
                   const std::vector<std::string>& identity_ids) {
  Json objs = Json::array();
  for (int i = 0; i < objects; ++i) objs.push_back(object_ids[i]);
  payload["objects"] = std::move(objs);
  Json arrs = Json::array();
  for (int i = 0; i < arrows; ++i) {
    Json a;
    a["id"] = arrow_list[i].id;
    a["src"] = object_ids[arrow_list[i].src];
    a["dst"] = object_ids[arrow_list[i].dst];
    arrs.push_back(std::move(a));
  }
  payload["arrows"] = std::move(arrs);
  Json ids;
  for (int i = 0; i < objects; ++i) ids[object_ids[i]] = identity_ids[i];
  payload["identities"] = std::move(ids);
}

}  // namespace

std::string real_to_string(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

double string_to_real(const std::string& text) {
  if (text == "inf" || text == "+inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  const char* begin = text.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || end != begin + text.size()) {
    throw ParseError("not a real number: '" + text + "'");
  }
  return value;
}

StructureDocument make_ac_document(const ACStructure& ac, const Amplitude* amplitude) {
  StructureDocument doc;
  doc.kind = "ac";
  doc.tolerance = ac.tolerance();
  doc.ac = ac;
  if (amplitude != nullptr) doc.amplitude = *amplitude;
  return doc;
}

StructureDocument make_metcat_document(const MetrizedCategory& mc) {
  StructureDocument doc;
  doc.kind = "metcat";
  doc.tolerance = mc.tolerance();
  doc.metcat = mc;
  return doc;
}

StructureDocument make_space_document(const FiniteMetricSpace& space) {
  StructureDocument doc;
  doc.kind = "metcor-space";
  doc.tolerance = space.tolerance();
  doc.space = space;
  return doc;
}

StructureDocument make_correspondence_document(const Correspondence& corr) {
  StructureDocument doc;
  doc.kind = "correspondence";
  doc.tolerance = std::max(corr.source().tolerance(), corr.target().tolerance());
  doc.correspondence = corr;
  return doc;
}

StructureDocument make_two_metric_document(const TwoMetric& tm) {
  StructureDocument doc;
  doc.kind = "two-metric";
  doc.tolerance = tm.tolerance();
  doc.two_metric = tm;
  return doc;
}

StructureDocument make_plpath_document(const PLPath& a, const PLPath& b) {
  StructureDocument doc;
  doc.kind = "plpath";
  doc.paths = {a, b};
  return doc;
}

std::string serialize_document(const StructureDocument& doc) {
  Json root;
  root["version"] = StructureDocument::kVersion;
  root["kind"] = doc.kind;
  root["tolerance"] = real_json(doc.tolerance);
  Json payload;

  if (doc.kind == "ac") {
    const ACStructure& ac = *doc.ac;
    std::vector<std::string> object_ids;
    std::vector<std::string> identity_ids;
    std::vector<Arrow> arrows;
    for (int i = 0; i < ac.object_count(); ++i) {
      object_ids.push_back(ac.object_id(i));
      identity_ids.push_back(ac.arrow(ac.identity(i)).id);
    }
    for (int i = 0; i < ac.arrow_count(); ++i) arrows.push_back(ac.arrow(i));
    graph_payload(payload, ac.object_count(), object_ids.data(), ac.arrow_count(),
                  arrows.data(), identity_ids);
    Json triples = Json::array();
    for (ArrowIdx f = 0; f < ac.arrow_count(); ++f) {
      for (ArrowIdx g = 0; g < ac.arrow_count(); ++g) {
        if (!ac.composable(f, g)) continue;
        for (ArrowIdx h : ac.hom(ac.arrow(f).src, ac.arrow(g).dst)) {
          Json t;
          t["f"] = ac.arrow(f).id;
          t["g"] = ac.arrow(g).id;
          t["h"] = ac.arrow(h).id;
          t["value"] = real_json(ac.d(f, g, h));
          triples.push_back(std::move(t));
        }
      }
    }
    payload["triples"] = std::move(triples);
    if (doc.amplitude.has_value()) {
      Json amp;
      for (const auto& [id, v] : *doc.amplitude) amp[id] = real_json(v);
      payload["amplitude"] = std::move(amp);
    }
  } else if (doc.kind == "metcat") {
    const MetrizedCategory& mc = *doc.metcat;
    std::vector<std::string> object_ids;
    std::vector<std::string> identity_ids;
    std::vector<Arrow> arrows;
    for (int i = 0; i < mc.object_count(); ++i) {
      object_ids.push_back(mc.object_id(i));
      identity_ids.push_back(mc.arrow(mc.identity(i)).id);
    }
    for (int i = 0; i < mc.arrow_count(); ++i) arrows.push_back(mc.arrow(i));
    graph_payload(payload, mc.object_count(), object_ids.data(), mc.arrow_count(),
                  arrows.data(), identity_ids);
    Json compose = Json::array();
    for (ArrowIdx f = 0; f < mc.arrow_count(); ++f) {
      for (ArrowIdx g = 0; g < mc.arrow_count(); ++g) {
        if (!mc.composable(f, g)) continue;
        Json c;
        c["f"] = mc.arrow(f).id;
        c["g"] = mc.arrow(g).id;
        c["result"] = mc.arrow(mc.compose(f, g)).id;
        compose.push_back(std::move(c));
      }
    }
    payload["compose"] = std::move(compose);
    Json phis = Json::array();
    for (ObjectIdx x = 0; x < mc.object_count(); ++x) {
      for (ObjectIdx y = 0; y < mc.object_count(); ++y) {
        const auto& hs = mc.hom(x, y);
        if (hs.empty()) continue;
        Json block;
        block["hom"] = Json::array({mc.object_id(x), mc.object_id(y)});
        Json entries = Json::array();
        for (std::size_t i = 0; i < hs.size(); ++i) {
          for (std::size_t j = i; j < hs.size(); ++j) {
            Json e;
            e["a"] = mc.arrow(hs[i]).id;
            e["b"] = mc.arrow(hs[j]).id;
            e["value"] = real_json(mc.phi(hs[i], hs[j]));
            entries.push_back(std::move(e));
          }
        }
        block["entries"] = std::move(entries);
        phis.push_back(std::move(block));
      }
    }
    payload["phi"] = std::move(phis);
  } else if (doc.kind == "metcor-space") {
    payload = space_payload(*doc.space);
  } else if (doc.kind == "correspondence") {
    const Correspondence& corr = *doc.correspondence;
    payload["source"] = space_payload(corr.source());
    payload["target"] = space_payload(corr.target());
    Json rows = Json::array();
    for (int x = 0; x < corr.source().size(); ++x) {
      Json row = Json::array();
      for (int y = 0; y < corr.target().size(); ++y) {
        row.push_back(real_json(corr.value(x, y)));
      }
      rows.push_back(std::move(row));
    }
    payload["values"] = std::move(rows);
  } else if (doc.kind == "two-metric") {
    const TwoMetric& tm = *doc.two_metric;
    tm.require_total();
    payload["points"] = tm.points();
    Json triples = Json::array();
    for (int i = 0; i < tm.size(); ++i) {
      for (int j = i; j < tm.size(); ++j) {
        for (int k = j; k < tm.size(); ++k) {
          Json t;
          t["x"] = tm.point(i);
          t["y"] = tm.point(j);
          t["z"] = tm.point(k);
          t["value"] = real_json(tm.value(i, j, k));
          triples.push_back(std::move(t));
        }
      }
    }
    payload["triples"] = std::move(triples);
  } else if (doc.kind == "plpath") {
    const auto& [a, b] = *doc.paths;
    const std::size_t dim =
        a.vertices.empty() ? 0 : a.vertices.front().size();
    payload["dimension"] = dim;
    Json paths = Json::array();
    for (const PLPath* p : {&a, &b}) {
      Json verts = Json::array();
      for (const auto& v : p->vertices) {
        Json coords = Json::array();
        for (double c : v) coords.push_back(real_json(c));
        verts.push_back(std::move(coords));
      }
      paths.push_back(std::move(verts));
    }
    payload["paths"] = std::move(paths);
  } else {
    throw ParseError("unknown document kind '" + doc.kind + "'");
  }
  root["payload"] = std::move(payload);
  return root.dump(2) + "\n";
}

namespace {

void parse_graph_into(const Json& payload, const std::string& where,
                      const std::function<void(const std::string&)>& on_object,
                      const std::function<void(const std::string&, const std::string&,
                                               const std::string&)>& on_arrow,
                      const std::function<void(const std::string&, const std::string&)>&
                          on_identity) {
  for (const auto& o : field(payload, "objects", where)) {
    on_object(o.get<std::string>());
  }
  for (const auto& a : field(payload, "arrows", where)) {
    on_arrow(string_field(a, "id", where + ".arrows"),
             string_field(a, "src", where + ".arrows"),
             string_field(a, "dst", where + ".arrows"));
  }
  const Json& identities = field(payload, "identities", where);
  if (!identities.is_object()) {
    throw ParseError("field 'identities' in " + where + " must be an object");
  }
  for (auto it = identities.begin(); it != identities.end(); ++it) {
    on_identity(it.key(), it.value().get<std::string>());
  }
}

}  // namespace

StructureDocument parse_document(const std::string& text,
                                 const double* tolerance_override) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid document: ") + e.what());
  }
  StructureDocument doc;
  const Json& version = field(root, "version", "document");
  if (!version.is_number_integer() ||
      version.get<int>() != StructureDocument::kVersion) {
    throw ParseError("unsupported document version");
  }
  doc.kind = string_field(root, "kind", "document");
  doc.tolerance = real_from(field(root, "tolerance", "document"), "tolerance");
  if (tolerance_override != nullptr) doc.tolerance = *tolerance_override;
  if (!(doc.tolerance >= 0.0) || std::isinf(doc.tolerance)) {
    throw ParseError("tolerance must be a finite nonnegative number");
  }
  const Json& payload = field(root, "payload", "document");

  try {
    if (doc.kind == "ac") {
      ACStructure::Builder b;
      b.tolerance(doc.tolerance);
      parse_graph_into(
          payload, "payload", [&](const std::string& id) { b.add_object(id); },
          [&](const std::string& id, const std::string& src, const std::string& dst) {
            b.add_arrow(id, src, dst);
          },
          [&](const std::string& obj, const std::string& arr) {
            b.set_identity(obj, arr);
          });
      for (const auto& t : field(payload, "triples", "payload")) {
        b.set_distance(string_field(t, "f", "triples"), string_field(t, "g", "triples"),
                       string_field(t, "h", "triples"),
                       real_from(field(t, "value", "triples"), "triples.value"));
      }
      doc.ac = b.build();
      if (payload.contains("amplitude")) {
        Amplitude amp;
        for (auto it = payload["amplitude"].begin(); it != payload["amplitude"].end();
             ++it) {
          amp[it.key()] = real_from(it.value(), "amplitude");
        }
        doc.amplitude = std::move(amp);
      }
    } else if (doc.kind == "metcat") {
      MetrizedCategory::Builder b;
      b.tolerance(doc.tolerance);
      parse_graph_into(
          payload, "payload", [&](const std::string& id) { b.add_object(id); },
          [&](const std::string& id, const std::string& src, const std::string& dst) {
            b.add_arrow(id, src, dst);
          },
          [&](const std::string& obj, const std::string& arr) {
            b.set_identity(obj, arr);
          });
      for (const auto& c : field(payload, "compose", "payload")) {
        b.set_compose(string_field(c, "f", "compose"), string_field(c, "g", "compose"),
                      string_field(c, "result", "compose"));
      }
      for (const auto& block : field(payload, "phi", "payload")) {
        for (const auto& e : field(block, "entries", "phi")) {
          b.set_phi(string_field(e, "a", "phi"), string_field(e, "b", "phi"),
                    real_from(field(e, "value", "phi"), "phi.value"));
        }
      }
      doc.metcat = b.build();
    } else if (doc.kind == "metcor-space") {
      doc.space = parse_space_payload(payload, doc.tolerance, "payload");
    } else if (doc.kind == "correspondence") {
      FiniteMetricSpace source = parse_space_payload(
          field(payload, "source", "payload"), doc.tolerance, "payload.source");
      FiniteMetricSpace target = parse_space_payload(
          field(payload, "target", "payload"), doc.tolerance, "payload.target");
      const Json& rows = field(payload, "values", "payload");
      std::vector<double> values;
      if (!rows.is_array() || rows.size() != static_cast<std::size_t>(source.size())) {
        throw ParseError("correspondence value matrix has the wrong row count");
      }
      for (const auto& row : rows) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(target.size())) {
          throw ParseError("correspondence value matrix has the wrong column count");
        }
        for (const auto& v : row) values.push_back(real_from(v, "values"));
      }
      doc.correspondence =
          Correspondence(std::move(source), std::move(target), std::move(values));
    } else if (doc.kind == "two-metric") {
      std::vector<std::string> labels;
      for (const auto& p : field(payload, "points", "payload")) {
        labels.push_back(p.get<std::string>());
      }
      TwoMetric tm(labels, doc.tolerance);
      auto index_of = [&](const std::string& label) {
        for (std::size_t i = 0; i < labels.size(); ++i) {
          if (labels[i] == label) return static_cast<int>(i);
        }
        throw ParseError("two-metric triple references unknown point '" + label + "'");
      };
      for (const auto& t : field(payload, "triples", "payload")) {
        tm.set(index_of(string_field(t, "x", "triples")),
               index_of(string_field(t, "y", "triples")),
               index_of(string_field(t, "z", "triples")),
               real_from(field(t, "value", "triples"), "triples.value"));
      }
      tm.require_total();
      doc.two_metric = std::move(tm);
    } else if (doc.kind == "plpath") {
      const Json& paths = field(payload, "paths", "payload");
      if (!paths.is_array() || paths.size() != 2) {
        throw ParseError("plpath payload needs exactly two paths");
      }
      const std::size_t dim =
          field(payload, "dimension", "payload").get<std::size_t>();
      PLPath parsed[2];
      for (int p = 0; p < 2; ++p) {
        for (const auto& v : paths[p]) {
          Point point;
          if (!v.is_array() || v.size() != dim) {
            throw ParseError("path vertex has the wrong dimension");
          }
          for (const auto& c : v) point.push_back(real_from(c, "paths"));
          parsed[p].vertices.push_back(std::move(point));
        }
        if (parsed[p].vertices.empty()) {
          throw ParseError("paths need at least one vertex");
        }
      }
      doc.paths = {std::move(parsed[0]), std::move(parsed[1])};
    } else {
      throw ParseError("unknown document kind '" + doc.kind + "'");
    }
  } catch (const ConstructionError& e) {
    throw ParseError(std::string("document payload is malformed: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("document payload is malformed: ") + e.what());
  }
  return doc;
}

StructureDocument load_document(const std::string& path,
                                const double* tolerance_override) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str(), tolerance_override);
}

}  // namespace acats
