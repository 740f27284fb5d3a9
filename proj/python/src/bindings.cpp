// Python bindings. Documents cross the boundary as JSON text; the package
// wrapper in qcat/__init__.py converts to and from dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcat/completion.hpp"
#include "qcat/filters.hpp"
#include "qcat/flatness.hpp"
#include "qcat/io.hpp"
#include "qcat/preorder.hpp"
#include "qcat/suite.hpp"

namespace py = pybind11;
using namespace qcat;
using io::Json;

namespace {

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string emit(const Json& doc) { return doc.dump(); }

std::string validate(const std::string& text, const std::string& dir) {
  const Json doc = parse(text);
  if (doc.contains("core")) {
    const auto f = io::filter_from_json(doc, dir);
    return emit(io::report_to_json(f.space(), validate_category(f.space())));
  }
  if (doc.contains("map")) {
    const auto g = io::functor_from_json<CostQuantale>(doc, dir);
    return emit(io::report_to_json(g.source, validate_functor(g)));
  }
  if (doc.contains("side")) {
    const auto m = io::left_module_from_json<CostQuantale>(doc, dir);
    return emit(io::report_to_json(m.over, validate_left_module(m)));
  }
  const auto space = io::space_from_json(doc, dir);
  return std::visit([](const auto& a) { return emit(io::report_to_json(a, validate_category(a))); }, space);
}

std::string classify_module(const std::string& text, const std::string& dir) {
  const auto m = io::left_module_from_json<CostQuantale>(parse(text), dir);
  if (!validate_left_module(m).valid()) throw InvalidInputError("values do not form a left module");
  const auto v = classify(m);
  Json out;
  out["p1"] = v.p1;
  out["omega"] = v.aleph;
  out["adjoint"] = v.adjoint;
  return emit(out);
}

std::string complete_space(const std::string& text, const std::string& kind, const std::string& dir) {
  const auto a = io::metric_space_from_json(parse(text), dir);
  if (!validate_category(a).valid()) throw InvalidInputError("not a valid space");
  return emit(io::completion_to_json(complete(a, CompletionKind::parse(kind))));
}

std::string filter_distance_of(const std::string& f1, const std::string& f2, const std::string& dir) {
  const auto a = io::filter_from_json(parse(f1), dir);
  const auto b = io::filter_from_json(parse(f2), dir);
  return filter_distance(a, b).to_string();
}

std::optional<std::string> representative_of(const std::string& text, const std::string& dir) {
  const auto f = io::filter_from_json(parse(text), dir);
  const auto r = representative(f);
  if (!r) return std::nullopt;
  return f.space().name(*r);
}

std::string kan(const std::string& module, const std::string& functor, const std::string& dir) {
  const auto m = io::left_module_from_json<CostQuantale>(parse(module), dir);
  const auto g = io::functor_from_json<CostQuantale>(parse(functor), dir);
  Json out = io::module_to_json(left_kan_extension(m, g));
  const auto colim = weighted_colimit(m, g);
  out["colimit"] = colim ? Json(g.target.name(*colim)) : Json(nullptr);
  return emit(out);
}

std::string ideal_complete(const std::string& text, const std::string& dir) {
  const auto p = io::preorder_from_json(parse(text), dir);
  return emit(io::ideal_completion_to_json(p, ideal_completion(p)));
}

std::string reflect(const std::string& text, const std::string& dir) {
  const auto p = io::preorder_from_json(parse(text), dir);
  return emit(io::reflection_to_json(p, poset_reflection(p)));
}

bool check_dcpo(const std::string& a, const std::string& b, const std::string& dir) {
  return check_dcpo_universal_property(io::preorder_from_json(parse(a), dir), io::preorder_from_json(parse(b), dir)).holds;
}

std::string run_check(std::uint64_t seed, std::size_t max_objects) {
  suite::SuiteConfig config;
  config.seed = seed;
  config.max_objects = max_objects;
  return emit(suite::run_suite(config).to_json());
}

}  // namespace

PYBIND11_MODULE(_qcat, m) {
  m.doc() = "Finite quantale-enriched categories: completions, flatness and filters.";

  py::register_exception<Error>(m, "QcatError", PyExc_ValueError);

  m.def("cost_tensor", [](const std::string& a, const std::string& b) {
    return (CostValue::parse(a) + CostValue::parse(b)).to_string();
  });
  m.def("cost_hom", [](const std::string& a, const std::string& b) {
    return CostQuantale::internal_hom(CostValue::parse(a), CostValue::parse(b)).to_string();
  });
  m.def("validate", &validate, py::arg("doc"), py::arg("dir") = "");
  m.def("classify", &classify_module, py::arg("module"), py::arg("dir") = "");
  m.def("complete", &complete_space, py::arg("space"), py::arg("kind") = "type1", py::arg("dir") = "");
  m.def("filter_distance", &filter_distance_of, py::arg("f1"), py::arg("f2"), py::arg("dir") = "");
  m.def("representative", &representative_of, py::arg("filter"), py::arg("dir") = "");
  m.def("kan", &kan, py::arg("module"), py::arg("functor"), py::arg("dir") = "");
  m.def("ideal_complete", &ideal_complete, py::arg("preorder"), py::arg("dir") = "");
  m.def("reflect", &reflect, py::arg("preorder"), py::arg("dir") = "");
  m.def("check_dcpo", &check_dcpo, py::arg("a"), py::arg("b"), py::arg("dir") = "");
  m.def("check", &run_check, py::arg("seed") = 42, py::arg("max_objects") = 4);
}
