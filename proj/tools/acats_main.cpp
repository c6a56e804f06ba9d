// Batch front end: structure I/O, generators, and subcommands exposing the
// verifiers and computations. Exit codes: 0 all checks pass, 1 axiom or
// precondition failures, 2 input/usage errors.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "acats/ac_checks.hpp"
#include "acats/document.hpp"
#include "acats/free_category.hpp"
#include "acats/generators.hpp"
#include "acats/geometry.hpp"
#include "acats/metcor.hpp"
#include "acats/metrized_category.hpp"
#include "acats/yoneda.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace acats;

constexpr int kPass = 0;
constexpr int kViolations = 1;
constexpr int kUsage = 2;

struct CommonOptions {
  std::optional<double> tolerance;
  bool json = false;
  std::size_t witness_cap = ValidationReport::kDefaultWitnessCap;
};

// Flag wins over the environment, which wins over the document field.
const double* resolve_tolerance(const CommonOptions& opts, double& storage) {
  if (opts.tolerance.has_value()) {
    storage = *opts.tolerance;
    return &storage;
  }
  if (const char* env = std::getenv("ACATS_TOLERANCE")) {
    storage = string_to_real(env);
    return &storage;
  }
  return nullptr;
}

Json violation_json(const Violation& v) {
  Json j;
  j["axiom"] = v.axiom;
  j["witness"] = v.witness;
  j["lhs"] = real_to_string(v.lhs);
  j["rhs"] = real_to_string(v.rhs);
  j["gap"] = real_to_string(v.gap);
  return j;
}

Json report_json(const ValidationReport& report) {
  Json j;
  j["passed"] = report.passed();
  j["total_violations"] = report.total_violations();
  Json families = Json::object();
  for (const auto& [name, worst] : report.worst()) {
    Json fam;
    fam["count"] = report.counts().at(name);
    fam["worst"] = violation_json(worst);
    families[name] = std::move(fam);
  }
  j["families"] = std::move(families);
  Json listed = Json::array();
  for (const auto& v : report.violations()) listed.push_back(violation_json(v));
  j["violations"] = std::move(listed);
  return j;
}

void print_report_text(const ValidationReport& report) {
  std::cout << "status: " << (report.passed() ? "PASS" : "FAIL") << "\n";
  if (report.passed()) return;
  std::cout << "violations: " << report.total_violations() << " total (showing "
            << report.violations().size() << ")\n";
  for (const auto& [name, worst] : report.worst()) {
    std::cout << "  " << name << ": " << report.counts().at(name)
              << " violation(s), worst gap " << real_to_string(worst.gap) << " at (";
    for (std::size_t i = 0; i < worst.witness.size(); ++i) {
      if (i > 0) std::cout << ", ";
      std::cout << worst.witness[i];
    }
    std::cout << ") lhs=" << real_to_string(worst.lhs)
              << " rhs=" << real_to_string(worst.rhs) << "\n";
  }
}

int finish_report(const ValidationReport& report, const CommonOptions& opts,
                  const std::string& kind, double tolerance) {
  if (opts.json) {
    Json j;
    j["kind"] = kind;
    j["tolerance"] = real_to_string(tolerance);
    j["report"] = report_json(report);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "kind: " << kind << "\n"
              << "tolerance: " << real_to_string(tolerance) << "\n";
    print_report_text(report);
  }
  return report.passed() ? kPass : kViolations;
}

PathWord parse_word(const ACStructure& ac, const std::string& text) {
  if (!text.empty() && text[0] == '@') {
    return PathWord{ac.object_index(text.substr(1)), {}};
  }
  std::vector<std::string> ids;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      if (!current.empty()) ids.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current += c;
    }
  }
  if (!current.empty()) ids.push_back(current);
  if (ids.empty()) {
    throw DomainError("empty word; use @<object> for an identity word");
  }
  const ArrowIdx first = ac.arrow_index(ids.front());
  PathWord w;
  w.base = ac.arrow(first).src;
  return make_word(ac, ac.object_id(w.base), ids);
}

int run_validate(const std::string& path, const std::string& expected_kind,
                 bool functional, double contraction_k, const CommonOptions& opts) {
  double storage = 0.0;
  const double* override_ptr = resolve_tolerance(opts, storage);
  const StructureDocument doc = load_document(path, override_ptr);
  if (!expected_kind.empty() && expected_kind != doc.kind) {
    std::cerr << "error: document kind is '" << doc.kind << "', expected '"
              << expected_kind << "'\n";
    return kUsage;
  }
  ValidationReport report(opts.witness_cap);
  if (doc.kind == "ac") {
    report = validate(*doc.ac, opts.witness_cap);
    if (doc.amplitude.has_value()) {
      report.absorb(check_amplitude(*doc.ac, *doc.amplitude, opts.witness_cap));
    }
  } else if (doc.kind == "metcat") {
    report = validate_metcat(*doc.metcat, opts.witness_cap);
  } else if (doc.kind == "metcor-space") {
    report = validate_metric_space(*doc.space, opts.witness_cap);
  } else if (doc.kind == "correspondence") {
    report = validate_correspondence(*doc.correspondence, contraction_k, functional,
                                     opts.witness_cap);
    report.absorb(validate_metric_space(doc.correspondence->source(), opts.witness_cap));
    report.absorb(validate_metric_space(doc.correspondence->target(), opts.witness_cap));
  } else if (doc.kind == "two-metric") {
    report = check_two_metric(*doc.two_metric, opts.witness_cap);
  } else if (doc.kind == "plpath") {
    const auto& [a, b] = *doc.paths;
    if (a.vertices.front() != b.vertices.front() ||
        a.vertices.back() != b.vertices.back()) {
      report.add({"path-endpoints", {}, 1.0, 0.0, 1.0});
    }
  }
  return finish_report(report, opts, doc.kind, doc.tolerance);
}

int run_dmax(const std::string& path, const std::string& from, const std::string& to,
             int max_len, bool verify, double strict_tolerance,
             const CommonOptions& opts) {
  double storage = 0.0;
  const double* override_ptr = resolve_tolerance(opts, storage);
  const StructureDocument doc = load_document(path, override_ptr);

  if (doc.kind == "plpath") {
    const auto& [a, b] = *doc.paths;
    std::vector<Point> points;
    for (const PLPath* p : {&a, &b}) {
      for (const auto& v : p->vertices) {
        if (std::find(points.begin(), points.end(), v) == points.end()) {
          points.push_back(v);
        }
      }
    }
    const int query = static_cast<int>(
        std::max(a.vertices.size(), b.vertices.size()) - 1);
    const MoveGraphConfig cfg{max_len > 0 ? max_len : query + 2};
    const DistanceEstimate est = plpath_dmax(points, a, b, cfg);
    if (opts.json) {
      Json j;
      j["value"] = real_to_string(est.value);
      j["kind"] = "upper-bound-at-L";
      j["max_len"] = cfg.max_len;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "estimate: " << real_to_string(est.value)
                << " (upper-bound-at-L, L=" << cfg.max_len << ")\n";
    }
    return kPass;
  }

  if (doc.kind != "ac") {
    std::cerr << "error: dmax needs an 'ac' or 'plpath' document\n";
    return kUsage;
  }
  const ACStructure& ac = *doc.ac;

  if (verify) {
    const MoveGraphConfig cfg{max_len > 0 ? max_len : 4};
    const EmbeddingCheck check = verify_embedding(ac, cfg, strict_tolerance);
    if (opts.json) {
      Json j;
      j["max_len"] = cfg.max_len;
      j["graph_composable"] = check.graph_composable;
      j["absolutely_transitive"] = check.absolutely_transitive;
      Json rows = Json::array();
      for (const auto& row : check.rows) {
        Json r;
        r["f"] = row.f;
        r["g"] = row.g;
        r["h"] = row.h;
        r["table"] = real_to_string(row.table_value);
        r["estimate"] = real_to_string(row.estimate);
        r["lower_bound"] = real_to_string(row.lower_bound);
        rows.push_back(std::move(r));
      }
      j["rows"] = std::move(rows);
      j["report"] = report_json(check.report);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "graph-composable: " << (check.graph_composable ? "yes" : "no")
                << "\nabsolutely-transitive: "
                << (check.absolutely_transitive ? "yes" : "no") << "\n";
      std::cout << "triple                        table      estimate   lower\n";
      for (const auto& row : check.rows) {
        std::string triple = "(" + row.f + "," + row.g + ";" + row.h + ")";
        triple.resize(30, ' ');
        std::cout << triple << real_to_string(row.table_value) << "  "
                  << real_to_string(row.estimate) << "  "
                  << real_to_string(row.lower_bound) << "\n";
      }
      print_report_text(check.report);
    }
    return check.report.passed() ? kPass : kViolations;
  }

  const PathWord a = parse_word(ac, from);
  const PathWord b = parse_word(ac, to);
  const int query = std::max(a.length(), b.length());
  const MoveGraphConfig cfg{max_len > 0 ? max_len : query + 2};
  const DistanceEstimate est = dmax_estimate(ac, a, b, cfg);
  if (opts.json) {
    Json j;
    j["from"] = word_to_string(ac, a);
    j["to"] = word_to_string(ac, b);
    j["value"] = real_to_string(est.value);
    j["kind"] = "upper-bound-at-L";
    j["max_len"] = cfg.max_len;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "from: " << word_to_string(ac, a) << "\n"
              << "to: " << word_to_string(ac, b) << "\n"
              << "estimate: " << real_to_string(est.value)
              << " (upper-bound-at-L, L=" << cfg.max_len << ")\n";
  }
  return kPass;
}

int run_gen(const std::string& kind, std::uint64_t seed, int size, double phi, double u,
            double v, int npoints, const std::string& polygon) {
  StructureDocument doc;
  if (kind == "finite-example") {
    doc = make_ac_document(finite_example(phi, u, v));
  } else if (kind == "random-metcat") {
    doc = make_metcat_document(random_metcat(seed, size, size));
  } else if (kind == "planar-2metric") {
    doc = make_two_metric_document(random_planar_two_metric(seed, npoints).table);
  } else if (kind == "plpath-pair") {
    const PolygonSplit split = polygon_split(polygon);
    doc = make_plpath_document(split.first, split.second);
  } else {
    std::cerr << "error: unknown generator kind '" << kind << "'\n";
    return kUsage;
  }
  std::cout << serialize_document(doc);
  return kPass;
}

int run_yoneda(const std::string& path, const std::string& base, bool dual,
               const CommonOptions& opts) {
  double storage = 0.0;
  const double* override_ptr = resolve_tolerance(opts, storage);
  const StructureDocument doc = load_document(path, override_ptr);
  if (doc.kind != "ac") {
    std::cerr << "error: yoneda needs an 'ac' document\n";
    return kUsage;
  }
  const ACStructure& ac = *doc.ac;
  const ObjectIdx u = ac.object_index(base);

  Json out;
  out["base"] = base;
  out["dual"] = dual;
  Json spaces = Json::object();
  for (ObjectIdx x = 0; x < ac.object_count(); ++x) {
    const FiniteMetricSpace space =
        dual ? co_yoneda_space(ac, u, x) : yoneda_space(ac, u, x);
    Json s;
    s["points"] = space.points();
    spaces[ac.object_id(x)] = std::move(s);
  }
  out["spaces"] = std::move(spaces);
  Json arrows = Json::object();
  bool all_valid = true;
  for (ArrowIdx f = 0; f < ac.arrow_count(); ++f) {
    const Correspondence corr = dual ? co_yoneda_correspondence(ac, u, f)
                                     : yoneda_correspondence(ac, u, f);
    Json a;
    Json rows = Json::array();
    for (int i = 0; i < corr.source().size(); ++i) {
      Json row = Json::array();
      for (int j = 0; j < corr.target().size(); ++j) {
        row.push_back(real_to_string(corr.value(i, j)));
      }
      rows.push_back(std::move(row));
    }
    a["values"] = std::move(rows);
    const bool valid = validate_correspondence(corr).passed();
    all_valid = all_valid && valid;
    a["mc_axioms"] = valid ? "pass" : "fail";
    arrows[ac.arrow(f).id] = std::move(a);
  }
  out["arrows"] = std::move(arrows);
  if (opts.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "base: " << base << (dual ? " (dual)" : "") << "\n";
    for (ArrowIdx f = 0; f < ac.arrow_count(); ++f) {
      const Correspondence corr = dual ? co_yoneda_correspondence(ac, u, f)
                                       : yoneda_correspondence(ac, u, f);
      std::cout << ac.arrow(f).id << ": " << corr.source().size() << "x"
                << corr.target().size() << " matrix";
      if (corr.source().size() <= 4 && corr.target().size() <= 4) {
        std::cout << " [";
        for (int i = 0; i < corr.source().size(); ++i) {
          if (i > 0) std::cout << "; ";
          for (int j = 0; j < corr.target().size(); ++j) {
            if (j > 0) std::cout << " ";
            std::cout << real_to_string(corr.value(i, j));
          }
        }
        std::cout << "]";
      }
      std::cout << "\n";
    }
  }
  return all_valid ? kPass : kViolations;
}

int run_quotient(const std::string& path, const CommonOptions& opts) {
  double storage = 0.0;
  const double* override_ptr = resolve_tolerance(opts, storage);
  const StructureDocument doc = load_document(path, override_ptr);
  if (doc.kind != "ac") {
    std::cerr << "error: quotient needs an 'ac' document\n";
    return kUsage;
  }
  const SeparationResult result = separate(*doc.ac);
  if (opts.json) {
    Json j;
    Json mapping = Json::object();
    for (const auto& [id, cls] : result.class_of) mapping[id] = cls;
    j["mapping"] = std::move(mapping);
    j["document"] = Json::parse(serialize_document(make_ac_document(result.structure)));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "classes: " << result.structure.arrow_count() << " (from "
              << doc.ac->arrow_count() << " arrows)\n";
    for (const auto& [id, cls] : result.class_of) {
      std::cout << "  " << id << " -> " << cls << "\n";
    }
  }
  return kPass;
}

int run_compose(const std::string& path, const CommonOptions& opts) {
  double storage = 0.0;
  const double* override_ptr = resolve_tolerance(opts, storage);
  const StructureDocument doc = load_document(path, override_ptr);
  if (doc.kind != "ac") {
    std::cerr << "error: compose needs an 'ac' document\n";
    return kUsage;
  }
  const CompositionTable table = extract_composition(*doc.ac);
  if (opts.json) {
    Json rows = Json::array();
    for (const auto& [pair, result] : table) {
      Json r;
      r["f"] = pair.first;
      r["g"] = pair.second;
      r["result"] = result;
      rows.push_back(std::move(r));
    }
    Json j;
    j["compose"] = std::move(rows);
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& [pair, result] : table) {
      std::cout << pair.first << " . " << pair.second << " -> " << result << "\n";
    }
  }
  return kPass;
}

int run_transitivity(const std::string& path, const std::string& alpha_mode,
                     const std::string& side_name, const CommonOptions& opts) {
  double storage = 0.0;
  const double* override_ptr = resolve_tolerance(opts, storage);
  const StructureDocument doc = load_document(path, override_ptr);
  if (doc.kind != "ac") {
    std::cerr << "error: transitivity needs an 'ac' document\n";
    return kUsage;
  }
  TransitivitySide side = TransitivitySide::kBoth;
  if (side_name == "left") side = TransitivitySide::kLeft;
  else if (side_name == "right") side = TransitivitySide::kRight;
  else if (side_name != "both") {
    std::cerr << "error: --side must be left, right, or both\n";
    return kUsage;
  }
  const Amplitude* alpha = nullptr;
  if (alpha_mode == "table") {
    if (!doc.amplitude.has_value()) {
      std::cerr << "error: document carries no amplitude table\n";
      return kUsage;
    }
    alpha = &*doc.amplitude;
  } else if (alpha_mode != "const") {
    std::cerr << "error: --alpha must be const or table\n";
    return kUsage;
  }
  const ValidationReport report =
      check_transitivity(*doc.ac, side, alpha, opts.witness_cap);
  return finish_report(report, opts, doc.kind, doc.tolerance);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification and computation toolkit for finite approximate "
               "categorical structures"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::string path, kind, from, to, base, polygon = "unit-square";
  std::string alpha_mode = "const", side = "both";
  bool verify = false, functional = false, dual = false;
  int max_len = 0, size = 4, npoints = 5;
  std::uint64_t seed = 1;
  double phi = 1.0, u = 0.0, v = 1.0, contraction_k = 1.0;
  double strict_tolerance = 1e-6;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--tolerance", opts.tolerance,
                    "Tolerance override (beats ACATS_TOLERANCE and the document)");
    cmd->add_flag("--json", opts.json, "Machine-readable report");
    cmd->add_option("--witness-cap", opts.witness_cap,
                    "Maximum listed violations (default 20)");
  };

  CLI::App* validate_cmd = app.add_subcommand("validate", "Check every axiom");
  validate_cmd->add_option("path", path)->required();
  validate_cmd->add_option("--kind", kind, "Require this document kind");
  validate_cmd->add_flag("--functional", functional,
                         "Also check the functional axiom (correspondences)");
  validate_cmd->add_option("--contraction-k", contraction_k,
                           "MC1 coefficient (correspondences)");
  add_common(validate_cmd);

  CLI::App* dmax_cmd =
      app.add_subcommand("dmax", "Maximal functorial distance estimate");
  dmax_cmd->add_option("path", path)->required();
  dmax_cmd->add_option("--from", from, "Comma-separated arrow ids, or @object");
  dmax_cmd->add_option("--to", to, "Comma-separated arrow ids, or @object");
  dmax_cmd->add_option("--max-len", max_len, "Word length bound (0 = query + 2)");
  dmax_cmd->add_flag("--verify", verify, "Compare estimates against the table");
  dmax_cmd->add_option("--strict-tolerance", strict_tolerance,
                       "Equality tolerance for --verify (default 1e-6)");
  add_common(dmax_cmd);

  CLI::App* gen_cmd = app.add_subcommand("gen", "Emit a generated document");
  gen_cmd->add_option("kind", kind,
                      "finite-example | random-metcat | planar-2metric | plpath-pair")
      ->required();
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--size", size, "Size cap for random-metcat");
  gen_cmd->add_option("--phi", phi, "finite-example arrow distance");
  gen_cmd->add_option("--u", u, "finite-example d(e,e,e)");
  gen_cmd->add_option("--v", v, "finite-example d(e,e,1)");
  gen_cmd->add_option("--npoints", npoints, "planar-2metric point count");
  gen_cmd->add_option("--polygon", polygon,
                      "plpath-pair shape: unit-triangle | unit-square | regular:<n>");

  CLI::App* yoneda_cmd =
      app.add_subcommand("yoneda", "Representable spaces and correspondences");
  yoneda_cmd->add_option("path", path)->required();
  yoneda_cmd->add_option("--base", base)->required();
  yoneda_cmd->add_flag("--dual", dual, "Use arrows into the base");
  add_common(yoneda_cmd);

  CLI::App* quotient_cmd =
      app.add_subcommand("quotient", "Separation quotient of an ac document");
  quotient_cmd->add_option("path", path)->required();
  add_common(quotient_cmd);

  CLI::App* compose_cmd =
      app.add_subcommand("compose", "Extract the composition table");
  compose_cmd->add_option("path", path)->required();
  add_common(compose_cmd);

  CLI::App* trans_cmd = app.add_subcommand("transitivity", "Transitivity check");
  trans_cmd->add_option("path", path)->required();
  trans_cmd->add_option("--alpha", alpha_mode, "const (default) or table");
  trans_cmd->add_option("--side", side, "left, right, or both");
  add_common(trans_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (validate_cmd->parsed()) {
      return run_validate(path, kind, functional, contraction_k, opts);
    }
    if (dmax_cmd->parsed()) {
      return run_dmax(path, from, to, max_len, verify, strict_tolerance, opts);
    }
    if (gen_cmd->parsed()) {
      return run_gen(kind, seed, size, phi, u, v, npoints, polygon);
    }
    if (yoneda_cmd->parsed()) {
      return run_yoneda(path, base, dual, opts);
    }
    if (quotient_cmd->parsed()) {
      return run_quotient(path, opts);
    }
    if (compose_cmd->parsed()) {
      return run_compose(path, opts);
    }
    if (trans_cmd->parsed()) {
      return run_transitivity(path, alpha_mode, side, opts);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolations;
  } catch (const TruncationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolations;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
