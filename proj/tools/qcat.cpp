// qcat: batch front-end over the library. Every verb reads JSON documents
// and writes JSON to stdout (or --out). Exit status: 0 success, 1 invalid
// input, 2 property violation found by `check`.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qcat/suite.hpp"

namespace {

using namespace qcat;
using io::Json;
namespace fs = std::filesystem;

constexpr int kInvalid = 1;
constexpr int kViolation = 2;

struct Sink {
  std::string out;
  std::string dot;

  void emit(const Json& doc) const { write(out, io::dump(doc)); }
  void emit_dot(const std::string& text) const {
    if (!dot.empty()) write(dot, text);
  }

  static void write(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
      std::cout << text << std::flush;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidInputError("cannot write '" + path + "'");
    f << text;
  }
};

struct Document {
  Json json;
  fs::path dir;
};

Document load(const std::string& path) { return {io::load_json(path), fs::path(path).parent_path()}; }

bool has(const Json& j, const char* key) { return j.is_object() && j.contains(key); }

/// Base of a document's space ("space" or "source" member, or the document
/// itself).
bool bool_based(const Document& d) {
  const Json* space = &d.json;
  if (has(d.json, "space")) space = &d.json["space"];
  else if (has(d.json, "source")) space = &d.json["source"];
  return std::holds_alternative<Preorder>(io::space_from_json(*space, d.dir));
}

Cardinal parse_aleph(const std::string& text) { return Cardinal::parse(text); }

template <Quantale Q>
Json merged_report(const EnrichedCategory<Q>& a, const std::vector<ValidationReport>& reports) {
  ValidationReport all;
  for (const auto& r : reports) all.violations.insert(all.violations.end(), r.violations.begin(), r.violations.end());
  return io::report_to_json(a, all);
}

template <Quantale Q>
int validate_typed(const Document& d, const Sink& sink) {
  const Json& j = d.json;
  Json report;
  if (has(j, "hom")) {
    const auto a = io::category_from_json<Q>(j, d.dir);
    report = io::report_to_json(a, validate_category(a));
  } else if (has(j, "values")) {
    if (io::module_side(j) == io::Side::left) {
      const auto m = io::left_module_from_json<Q>(j, d.dir);
      report = merged_report(m.over, {validate_category(m.over), validate_left_module(m)});
    } else {
      const auto n = io::right_module_from_json<Q>(j, d.dir);
      report = merged_report(n.over, {validate_category(n.over), validate_right_module(n)});
    }
  } else if (has(j, "map")) {
    const auto f = io::functor_from_json<Q>(j, d.dir);
    ValidationReport src = validate_category(f.source);
    ValidationReport tgt = validate_category(f.target);
    ValidationReport fun = validate_functor(f);
    Json doc;
    doc["valid"] = src.valid() && tgt.valid() && fun.valid();
    doc["source"] = io::report_to_json(f.source, src);
    doc["target"] = io::report_to_json(f.target, tgt);
    doc["functor"] = io::report_to_json(f.source, fun);
    report = std::move(doc);
  } else {
    throw ParseError("unrecognized document: expected a space, module or functor");
  }
  sink.emit(report);
  return report["valid"].get<bool>() ? 0 : kInvalid;
}

int cmd_validate(const std::string& file, const Sink& sink) {
  const Document d = load(file);
  if (has(d.json, "core")) {
    const auto f = io::filter_from_json(d.json, d.dir);
    Json report = io::report_to_json(f.space(), validate_category(f.space()));
    sink.emit(report);
    return report["valid"].get<bool>() ? 0 : kInvalid;
  }
  return bool_based(d) ? validate_typed<BoolQuantale>(d, sink) : validate_typed<CostQuantale>(d, sink);
}

template <Quantale Q>
Json witnesses(const LeftModule<Q>& m, Cardinal aleph) {
  Json out = Json::array();
  const auto report = lattice_check(m, FlatnessClass::aleph_flat(aleph));
  for (const auto& v : report.violations) {
    Json item;
    item["condition"] = v.condition;
    if (v.v) item["v"] = v.v->to_string();
    Json mods = Json::array();
    for (const auto& n : v.right_modules) {
      Json vals = Json::array();
      for (const auto& x : n) vals.push_back(x.to_string());
      mods.push_back(std::move(vals));
    }
    item["right_modules"] = std::move(mods);
    item["lhs"] = v.lhs.to_string();
    item["rhs"] = v.rhs.to_string();
    out.push_back(std::move(item));
  }
  return out;
}

template <Quantale Q>
int flat_typed(const Document& d, Cardinal aleph, const Sink& sink) {
  const auto m = io::left_module_from_json<Q>(d.json, d.dir);
  require_valid(m.over);
  if (!validate_left_module(m).valid()) throw InvalidInputError("values do not form a left module");
  const auto verdict = classify(m, aleph);
  Json doc;
  doc["p1"] = verdict.p1;
  doc[aleph.index == 0 ? "omega" : aleph.to_string()] = verdict.aleph;
  doc["adjoint"] = verdict.adjoint;
  doc["witnesses"] = witnesses(m, aleph);
  sink.emit(doc);
  return 0;
}

int cmd_flat(const std::string& file, Cardinal aleph, const Sink& sink) {
  const Document d = load(file);
  return bool_based(d) ? flat_typed<BoolQuantale>(d, aleph, sink) : flat_typed<CostQuantale>(d, aleph, sink);
}

int cmd_complete(const std::string& file, std::string kind_text, const std::string& aleph, const Sink& sink) {
  const Document d = load(file);
  const MetricSpace a = io::metric_space_from_json(d.json, d.dir);
  require_valid(a);
  if (!aleph.empty() && kind_text == "type-aleph") kind_text = "type-" + aleph;
  const CompletionKind kind = CompletionKind::parse(kind_text);
  const CompletionSpace c = complete(a, kind);
  sink.emit(io::completion_to_json(c));
  sink.emit_dot(specialization_dot(c.space));
  return 0;
}

template <Quantale Q>
int distance_maps(const Document& d, const Sink& sink) {
  const auto src = io::category_from_json<Q>(d.json.at("source"), d.dir);
  const auto tgt = io::category_from_json<Q>(d.json.at("target"), d.dir);
  auto functor = [&](const char* key) {
    Json doc;
    doc["source"] = d.json["source"];
    doc["target"] = d.json["target"];
    doc["map"] = d.json.at(key);
    return io::functor_from_json<Q>(doc, d.dir);
  };
  const auto f = functor("f");
  const auto g = functor("g");
  Json out;
  out["distance"] = function_space_distance(f, g).to_string();
  sink.emit(out);
  return 0;
}

int cmd_distance(const std::vector<std::string>& files, const Sink& sink) {
  if (files.size() == 1) {
    const Document d = load(files[0]);
    if (!has(d.json, "f") || !has(d.json, "g")) throw ParseError("a single distance document needs \"f\" and \"g\" maps");
    return bool_based(d) ? distance_maps<BoolQuantale>(d, sink) : distance_maps<CostQuantale>(d, sink);
  }
  const Document d1 = load(files[0]);
  const Document d2 = load(files[1]);
  Json out;
  if (has(d1.json, "core") && has(d2.json, "core")) {
    const auto f1 = io::filter_from_json(d1.json, d1.dir);
    const auto f2 = io::filter_from_json(d2.json, d2.dir);
    if (!(f1.space() == f2.space())) throw MismatchError("filters live on different spaces");
    require_valid(f1.space());
    out["distance"] = filter_distance(f1, f2).to_string();
    out["reverse"] = filter_distance(f2, f1).to_string();
  } else if (has(d1.json, "values") && has(d2.json, "values")) {
    const auto m1 = io::left_module_from_json<CostQuantale>(d1.json, d1.dir);
    const auto m2 = io::left_module_from_json<CostQuantale>(d2.json, d2.dir);
    out["distance"] = presheaf_hom(m1, m2).to_string();
    out["reverse"] = presheaf_hom(m2, m1).to_string();
  } else {
    throw ParseError("distance takes two filter documents or two module documents");
  }
  sink.emit(out);
  return 0;
}

template <Quantale Q>
int kan_typed(const Document& md, const Document& fd, const Sink& sink) {
  const auto m = io::left_module_from_json<Q>(md.json, md.dir);
  const auto g = io::functor_from_json<Q>(fd.json, fd.dir);
  if (!validate_left_module(m).valid()) throw InvalidInputError("values do not form a left module");
  if (!validate_functor(g).valid()) throw InvalidInputError("map is not a functor");
  const auto lan = left_kan_extension(m, g);
  Json out = io::module_to_json(lan);
  const auto colim = weighted_colimit(m, g);
  out["colimit"] = colim ? Json(g.target.name(*colim)) : Json(nullptr);
  sink.emit(out);
  return 0;
}

int cmd_kan(const std::string& module_file, const std::string& functor_file, const Sink& sink) {
  const Document md = load(module_file);
  const Document fd = load(functor_file);
  return bool_based(md) ? kan_typed<BoolQuantale>(md, fd, sink) : kan_typed<CostQuantale>(md, fd, sink);
}

int cmd_rep(const std::string& file, const Sink& sink) {
  const Document d = load(file);
  Json out;
  if (has(d.json, "core")) {
    const auto f = io::filter_from_json(d.json, d.dir);
    require_valid(f.space());
    const auto r = representative(f);
    out["representative"] = r ? Json(f.space().name(*r)) : Json(nullptr);
  } else if (has(d.json, "cycle")) {
    const auto s = io::sequence_from_json(d.json, d.dir);
    require_valid(s.space());
    const auto f = sequence_filter(s);
    const auto r = representative(f);
    out["forward_cauchy"] = is_forward_cauchy(s);
    out["representative"] = r ? Json(s.space().name(*r)) : Json(nullptr);
  } else {
    const auto m = io::left_module_from_json<CostQuantale>(d.json, d.dir);
    if (!validate_left_module(m).valid()) throw InvalidInputError("values do not form a left module");
    const auto r = weighted_colimit(m, identity_functor(m.over));
    out["representative"] = r ? Json(m.over.name(*r)) : Json(nullptr);
  }
  sink.emit(out);
  return 0;
}

Preorder load_preorder(const std::string& file) {
  const Document d = load(file);
  Preorder p = io::preorder_from_json(d.json, d.dir);
  require_valid(p);
  return p;
}

int cmd_ideal_complete(const std::string& file, const std::string& aleph, const Sink& sink) {
  const Preorder p = load_preorder(file);
  const auto c = ideal_completion(p, parse_aleph(aleph));
  sink.emit(io::ideal_completion_to_json(p, c));
  sink.emit_dot(hasse_dot(c.space));
  return 0;
}

int cmd_reflect(const std::string& file, const Sink& sink) {
  const Preorder p = load_preorder(file);
  const auto r = poset_reflection(p);
  sink.emit(io::reflection_to_json(p, r));
  sink.emit_dot(hasse_dot(r.poset));
  return 0;
}

int cmd_check_dcpo(const std::string& a_file, const std::string& b_file, const Sink& sink) {
  const auto report = check_dcpo_universal_property(load_preorder(a_file), load_preorder(b_file));
  Json out;
  out["holds"] = report.holds;
  out["source_maps"] = report.source_maps;
  out["extension_maps"] = report.extension_maps;
  out["failures"] = report.failures;
  sink.emit(out);
  return report.holds ? 0 : kViolation;
}

struct CheckOptions {
  std::uint64_t seed = 42;
  std::size_t max_objects = 4;
  std::string grid;
  std::string space;
  std::string replay;
};

int cmd_check(const CheckOptions& opts, const Sink& sink) {
  if (!opts.replay.empty()) {
    const Document d = load(opts.replay);
    std::vector<Json> cexs;
    if (has(d.json, "counterexamples")) cexs.assign(d.json["counterexamples"].begin(), d.json["counterexamples"].end());
    else cexs.push_back(d.json);
    Json out;
    Json results = Json::array();
    bool reproduced = false;
    for (const auto& cex : cexs) {
      const auto failure = suite::replay(cex);
      Json item;
      item["theorem"] = cex.at("theorem");
      item["reproduced"] = failure.has_value();
      if (failure) item["detail"] = *failure;
      reproduced = reproduced || failure.has_value();
      results.push_back(std::move(item));
    }
    out["status"] = reproduced ? "reproduced" : "passes";
    out["replays"] = std::move(results);
    sink.emit(out);
    return reproduced ? kViolation : 0;
  }

  suite::SuiteResult result;
  Json doc;
  if (!opts.space.empty()) {
    const Document d = load(opts.space);
    result = suite::run_on_space(io::space_from_json(d.json, d.dir));
    doc["space"] = opts.space;
  } else {
    suite::SuiteConfig config;
    config.seed = opts.seed;
    config.max_objects = opts.max_objects;
    if (!opts.grid.empty()) config.grid = gen::parse_grid(opts.grid);
    result = suite::run_suite(config);
    doc["seed"] = config.seed;
    doc["max_objects"] = config.max_objects;
    Json grid = Json::array();
    for (const auto& v : config.grid) grid.push_back(v.to_string());
    doc["grid"] = std::move(grid);
  }
  const Json summary = result.to_json();
  for (const auto& [key, value] : summary.items()) doc[key] = value;
  sink.emit(doc);
  return result.ok() ? 0 : kViolation;
}

void add_sink(CLI::App* cmd, Sink& sink, bool with_dot) {
  cmd->add_option("--out", sink.out, "Write the result document here instead of stdout");
  if (with_dot) cmd->add_option("--dot", sink.dot, "Also write a Graphviz rendering to this path");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite enriched categories: validation, flatness, completions and theorem checks"};
  app.require_subcommand(1);
  Sink sink;
  std::string file, file2, aleph = "omega", kind = "type1";
  std::vector<std::string> files;
  CheckOptions check;
  std::function<int()> run;

  auto* validate = app.add_subcommand("validate", "Check a space, module or functor document");
  validate->add_option("file", file, "Document")->required();
  add_sink(validate, sink, false);
  validate->callback([&] { run = [&] { return cmd_validate(file, sink); }; });

  auto* flat = app.add_subcommand("flat", "Classify a left module in the flatness hierarchy");
  flat->add_option("file", file, "Left module document")->required();
  flat->add_option("--aleph", aleph, "Cardinal tag (omega, aleph1, ...)");
  add_sink(flat, sink, false);
  flat->callback([&] { run = [&] { return cmd_flat(file, parse_aleph(aleph), sink); }; });

  auto* comp = app.add_subcommand("complete", "Build a completion of a cost space");
  comp->add_option("file", file, "Space document")->required();
  comp->add_option("--kind", kind, "type1, type-omega, type-alephN or cauchy");
  std::string comp_aleph;
  comp->add_option("--aleph", comp_aleph, "Cardinal for --kind type-aleph");
  add_sink(comp, sink, true);
  comp->callback([&] { run = [&] { return cmd_complete(file, kind, comp_aleph, sink); }; });

  auto* dist = app.add_subcommand("distance", "Distance between two filters, two modules, or two maps");
  dist->add_option("files", files, "One map-pair document, or two filter/module documents")->required()->expected(1, 2);
  add_sink(dist, sink, false);
  dist->callback([&] { run = [&] { return cmd_distance(files, sink); }; });

  auto* kan = app.add_subcommand("kan", "Left Kan extension of a module along a functor");
  kan->add_option("module", file, "Left module document")->required();
  kan->add_option("functor", file2, "Functor document")->required();
  add_sink(kan, sink, false);
  kan->callback([&] { run = [&] { return cmd_kan(file, file2, sink); }; });

  auto* rep = app.add_subcommand("rep", "Representative of a filter, sequence or module");
  rep->add_option("file", file, "Filter, sequence or left module document")->required();
  add_sink(rep, sink, false);
  rep->callback([&] { run = [&] { return cmd_rep(file, sink); }; });

  auto* ideal = app.add_subcommand("ideal-complete", "Directed down-set completion of a preorder");
  ideal->add_option("file", file, "Preorder document")->required();
  ideal->add_option("--aleph", aleph, "Cardinal tag");
  add_sink(ideal, sink, true);
  ideal->callback([&] { run = [&] { return cmd_ideal_complete(file, aleph, sink); }; });

  auto* reflect = app.add_subcommand("reflect", "Poset reflection of a preorder");
  reflect->add_option("file", file, "Preorder document")->required();
  add_sink(reflect, sink, true);
  reflect->callback([&] { run = [&] { return cmd_reflect(file, sink); }; });

  auto* dcpo = app.add_subcommand("check-dcpo", "Check the dcpo completion universal property for A and B");
  dcpo->add_option("a", file, "Preorder A")->required();
  dcpo->add_option("b", file2, "Preorder B")->required();
  add_sink(dcpo, sink, false);
  dcpo->callback([&] { run = [&] { return cmd_check_dcpo(file, file2, sink); }; });

  auto* chk = app.add_subcommand("check", "Run the theorem suite on generated instances");
  chk->add_option("--seed", check.seed, "Random seed");
  chk->add_option("--max-objects", check.max_objects, "Largest generated space")->check(CLI::Range(1, 6));
  chk->add_option("--grid", check.grid, "Comma separated value grid containing 0");
  chk->add_option("--space", check.space, "Run the suite on this space instead");
  chk->add_option("--replay", check.replay, "Re-check a counterexample or summary document");
  add_sink(chk, sink, false);
  chk->callback([&] { run = [&] { return cmd_check(check, sink); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInvalid;
  }
  try {
    return run();
  } catch (const qcat::Error& e) {
    std::cerr << "qcat: " << e.what() << "\n";
    return kInvalid;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "qcat: malformed document: " << e.what() << "\n";
    return kInvalid;
  }
}
