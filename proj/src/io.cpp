#include "qcat/io.hpp"

#include <fstream>
#include <sstream>

namespace qcat::io {

namespace {

std::vector<std::string> names_from_json(const Json& doc) {
  if (!doc.contains("objects") || !doc["objects"].is_array()) throw ParseError("space document needs \"objects\"");
  std::vector<std::string> names;
  for (const auto& n : doc["objects"]) {
    if (!n.is_string()) throw ParseError("object names must be strings");
    names.push_back(n.get<std::string>());
  }
  return names;
}

template <Quantale Q>
EnrichedCategory<Q> parse_category(const Json& doc) {
  auto names = names_from_json(doc);
  if (!doc.contains("hom") || !doc["hom"].is_array()) throw ParseError("space document needs \"hom\"");
  std::vector<std::vector<value_t<Q>>> hom;
  for (const auto& row : doc["hom"]) {
    if (!row.is_array()) throw ParseError("hom rows must be arrays");
    std::vector<value_t<Q>> r;
    for (const auto& item : row) r.push_back(value_from_json<value_t<Q>>(item));
    hom.push_back(std::move(r));
  }
  return EnrichedCategory<Q>(std::move(names), hom);
}

std::vector<std::size_t> indices_of(const MetricSpace& a, const Json& names, const char* field) {
  if (!names.is_array()) throw ParseError(std::string("\"") + field + "\" must be an array of object names");
  std::vector<std::size_t> out;
  for (const auto& n : names) {
    if (!n.is_string()) throw ParseError(std::string("\"") + field + "\" must list object names");
    out.push_back(a.index_of(n.get<std::string>()));
  }
  return out;
}

Json names_of(const std::vector<std::string>& all, const ObjectSet& s) {
  Json out = Json::array();
  for (auto x : s.members()) out.push_back(all[x]);
  return out;
}

}  // namespace

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in '" + path.string() + "': " + e.what());
  }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

template <>
CostValue value_from_json<CostValue>(const Json& j) {
  if (j.is_string()) return CostValue::parse(j.get<std::string>());
  if (j.is_number_unsigned()) return CostValue(static_cast<std::int64_t>(j.get<std::uint64_t>()));
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return CostValue(j.get<std::int64_t>());
  throw ParseError("cost values must be strings \"p/q\", \"n\", \"inf\" or non-negative integers");
}

template <>
BoolValue value_from_json<BoolValue>(const Json& j) {
  if (j.is_string()) return BoolValue::parse(j.get<std::string>());
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v == 0 || v == 1) return v == 1;
  }
  throw ParseError("boolean values must be \"0\" or \"1\"");
}

AnySpace space_from_json(const Json& doc, const std::filesystem::path& dir) {
  if (doc.is_string()) {
    const std::filesystem::path ref = dir / doc.get<std::string>();
    return space_from_json(load_json(ref), ref.parent_path());
  }
  if (!doc.is_object()) throw ParseError("space must be an object or a file reference");
  const std::string base = doc.contains("base") ? doc["base"].get<std::string>() : "cost";
  if (base == "cost") return parse_category<CostQuantale>(doc);
  if (base == "bool") return parse_category<BoolQuantale>(doc);
  throw ParseError("unknown base '" + base + "'");
}

MetricSpace metric_space_from_json(const Json& doc, const std::filesystem::path& dir) {
  auto any = space_from_json(doc, dir);
  if (auto* m = std::get_if<MetricSpace>(&any)) return *m;
  throw MismatchError("expected a cost-based space");
}

Preorder preorder_from_json(const Json& doc, const std::filesystem::path& dir) {
  auto any = space_from_json(doc, dir);
  if (auto* p = std::get_if<Preorder>(&any)) return *p;
  throw MismatchError("expected a bool-based space");
}

Side module_side(const Json& doc) {
  const std::string side = doc.value("side", "left");
  if (side == "left") return Side::left;
  if (side == "right") return Side::right;
  throw ParseError("module side must be \"left\" or \"right\"");
}

Json filter_to_json(const PrincipalFilter& f) {
  Json doc;
  doc["space"] = space_to_json(f.space());
  doc["core"] = names_of(f.space().names(), f.core());
  return doc;
}

PrincipalFilter filter_from_json(const Json& doc, const std::filesystem::path& dir) {
  auto a = metric_space_from_json(doc.at("space"), dir);
  auto core = indices_of(a, doc.at("core"), "core");
  return {a, core};
}

Json sequence_to_json(const EventuallyPeriodicSequence& s) {
  Json doc;
  doc["space"] = space_to_json(s.space());
  Json prefix = Json::array();
  for (auto x : s.prefix()) prefix.push_back(s.space().name(x));
  Json cycle = Json::array();
  for (auto x : s.cycle()) cycle.push_back(s.space().name(x));
  doc["prefix"] = std::move(prefix);
  doc["cycle"] = std::move(cycle);
  return doc;
}

EventuallyPeriodicSequence sequence_from_json(const Json& doc, const std::filesystem::path& dir) {
  auto a = metric_space_from_json(doc.at("space"), dir);
  auto prefix = doc.contains("prefix") ? indices_of(a, doc["prefix"], "prefix") : std::vector<std::size_t>{};
  auto cycle = indices_of(a, doc.at("cycle"), "cycle");
  return {a, std::move(prefix), std::move(cycle)};
}

Json completion_to_json(const CompletionSpace& c) {
  Json doc = space_to_json(c.space);
  doc["kind"] = c.kind.to_string();
  Json emb = Json::object();
  for (std::size_t x = 0; x < c.base.size(); ++x) emb[c.base.name(x)] = c.space.name(c.embedding[x]);
  doc["embedding"] = std::move(emb);
  Json carrier = Json::array();
  for (const auto& s : c.carrier) carrier.push_back(names_of(c.base.names(), s));
  doc["carrier"] = std::move(carrier);
  return doc;
}

Json ideal_completion_to_json(const Preorder& base, const IdealCompletion& c) {
  Json doc = space_to_json(c.space);
  Json emb = Json::object();
  for (std::size_t x = 0; x < base.size(); ++x) emb[base.name(x)] = c.space.name(c.embedding[x]);
  doc["embedding"] = std::move(emb);
  Json carrier = Json::array();
  for (const auto& s : c.carrier) carrier.push_back(names_of(base.names(), s));
  doc["carrier"] = std::move(carrier);
  return doc;
}

Json reflection_to_json(const Preorder& base, const PosetReflection& r) {
  Json doc = space_to_json(r.poset);
  Json q = Json::object();
  for (std::size_t x = 0; x < base.size(); ++x) q[base.name(x)] = r.poset.name(r.quotient[x]);
  doc["quotient"] = std::move(q);
  Json classes = Json::array();
  for (const auto& s : r.classes) classes.push_back(names_of(base.names(), s));
  doc["classes"] = std::move(classes);
  return doc;
}

}  // namespace qcat::io
