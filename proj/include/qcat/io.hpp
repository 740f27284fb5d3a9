#pragma once

// JSON documents for spaces, modules, filters, sequences, functors and
// completions. Values are strings ("p/q", "n", "inf"; "0"/"1" for the Boolean
// base) so that rationals never pass through floating point.

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "qcat/completion.hpp"
#include "qcat/filters.hpp"
#include "qcat/preorder.hpp"

namespace qcat::io {

using Json = nlohmann::ordered_json;
using AnySpace = std::variant<MetricSpace, Preorder>;

Json load_json(const std::filesystem::path& path);
/// Two-space indentation and a trailing newline; the canonical form.
std::string dump(const Json& doc);

template <class V>
Json value_to_json(const V& v) {
  return v.to_string();
}

template <class V>
V value_from_json(const Json& j);

template <Quantale Q>
Json space_to_json(const EnrichedCategory<Q>& a) {
  Json doc;
  doc["base"] = std::string(base_name(Q::kind));
  doc["objects"] = a.names();
  Json hom = Json::array();
  for (std::size_t x = 0; x < a.size(); ++x) {
    Json row = Json::array();
    for (std::size_t y = 0; y < a.size(); ++y) row.push_back(value_to_json(a(x, y)));
    hom.push_back(std::move(row));
  }
  doc["hom"] = std::move(hom);
  return doc;
}

/// Accepts an inline space document, or a string naming a space file
/// relative to `dir`.
AnySpace space_from_json(const Json& doc, const std::filesystem::path& dir = {});
MetricSpace metric_space_from_json(const Json& doc, const std::filesystem::path& dir = {});
Preorder preorder_from_json(const Json& doc, const std::filesystem::path& dir = {});

template <Quantale Q>
EnrichedCategory<Q> category_from_json(const Json& doc, const std::filesystem::path& dir = {}) {
  if constexpr (Q::kind == BaseKind::cost) return metric_space_from_json(doc, dir);
  else return preorder_from_json(doc, dir);
}

enum class Side { left, right };

template <Quantale Q>
Json module_to_json(const EnrichedCategory<Q>& over, Side side, const std::vector<value_t<Q>>& values) {
  Json doc;
  doc["space"] = space_to_json(over);
  doc["side"] = side == Side::left ? "left" : "right";
  Json vals = Json::array();
  for (const auto& v : values) vals.push_back(value_to_json(v));
  doc["values"] = std::move(vals);
  return doc;
}

template <Quantale Q>
Json module_to_json(const LeftModule<Q>& m) {
  return module_to_json(m.over, Side::left, m.values);
}

template <Quantale Q>
Json module_to_json(const RightModule<Q>& m) {
  return module_to_json(m.over, Side::right, m.values);
}

Side module_side(const Json& doc);

template <Quantale Q>
std::vector<value_t<Q>> module_values(const Json& doc, std::size_t expected) {
  if (!doc.contains("values") || !doc["values"].is_array()) throw ParseError("module document needs \"values\"");
  std::vector<value_t<Q>> v;
  for (const auto& item : doc["values"]) v.push_back(value_from_json<value_t<Q>>(item));
  if (v.size() != expected) throw DimensionError("module has the wrong number of values");
  return v;
}

template <Quantale Q>
LeftModule<Q> left_module_from_json(const Json& doc, const std::filesystem::path& dir = {}) {
  if (module_side(doc) != Side::left) throw ParseError("expected a left module");
  auto a = category_from_json<Q>(doc.at("space"), dir);
  auto values = module_values<Q>(doc, a.size());
  return {std::move(a), std::move(values)};
}

template <Quantale Q>
RightModule<Q> right_module_from_json(const Json& doc, const std::filesystem::path& dir = {}) {
  if (module_side(doc) != Side::right) throw ParseError("expected a right module");
  auto a = category_from_json<Q>(doc.at("space"), dir);
  auto values = module_values<Q>(doc, a.size());
  return {std::move(a), std::move(values)};
}

Json filter_to_json(const PrincipalFilter& f);
PrincipalFilter filter_from_json(const Json& doc, const std::filesystem::path& dir = {});

Json sequence_to_json(const EventuallyPeriodicSequence& s);
EventuallyPeriodicSequence sequence_from_json(const Json& doc, const std::filesystem::path& dir = {});

template <Quantale Q>
Json functor_to_json(const EnrichedFunctor<Q>& f) {
  Json doc;
  doc["source"] = space_to_json(f.source);
  doc["target"] = space_to_json(f.target);
  Json map = Json::object();
  for (std::size_t x = 0; x < f.source.size(); ++x) map[f.source.name(x)] = f.target.name(f(x));
  doc["map"] = std::move(map);
  return doc;
}

template <Quantale Q>
EnrichedFunctor<Q> functor_from_json(const Json& doc, const std::filesystem::path& dir = {}) {
  auto src = category_from_json<Q>(doc.at("source"), dir);
  auto tgt = category_from_json<Q>(doc.at("target"), dir);
  const Json& map = doc.at("map");
  if (!map.is_object()) throw ParseError("functor \"map\" must be an object");
  std::vector<std::size_t> assignment(src.size(), 0);
  std::vector<bool> seen(src.size(), false);
  for (const auto& [key, value] : map.items()) {
    const std::size_t x = src.index_of(key);
    if (!value.is_string()) throw ParseError("functor images must be object names");
    assignment[x] = tgt.index_of(value.template get<std::string>());
    seen[x] = true;
  }
  for (std::size_t x = 0; x < src.size(); ++x)
    if (!seen[x]) throw ParseError("functor map misses object '" + src.name(x) + "'");
  return {std::move(src), std::move(tgt), std::move(assignment)};
}

/// Completion space document plus "kind", "embedding" and "carrier".
Json completion_to_json(const CompletionSpace& c);
Json ideal_completion_to_json(const Preorder& base, const IdealCompletion& c);
Json reflection_to_json(const Preorder& base, const PosetReflection& r);

template <Quantale Q>
Json report_to_json(const EnrichedCategory<Q>& a, const ValidationReport& r) {
  Json doc;
  doc["valid"] = r.valid();
  Json vs = Json::array();
  for (const auto& v : r.violations) {
    Json item;
    item["rule"] = v.rule;
    Json objs = Json::array();
    for (auto x : v.objects) objs.push_back(a.name(x));
    item["objects"] = std::move(objs);
    vs.push_back(std::move(item));
  }
  doc["violations"] = std::move(vs);
  return doc;
}

}  // namespace qcat::io
