#include "qcat/suite.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace qcat::suite {

namespace {

const std::vector<std::string> kSpaceTheorems = {
    "space-valid",         "yoneda-isometry",  "filter-distance",  "composite-lim-minus",
    "hom-lim-plus",        "minimax-exchange", "filter-chain",     "flatness-hierarchy",
    "hom-left-adjoint",    "completion-complete", "completion-reflection",
};

std::string names(const MetricSpace& a, const ObjectSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto x : s.members()) {
    out += (first ? "" : ",") + a.name(x);
    first = false;
  }
  return out + "}";
}

std::string values(const std::vector<CostValue>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].to_string();
  return out + ")";
}

CostValue max_min(const MetricSpace& a, const ObjectSet& s, const ObjectSet& t) {
  CostValue outer(0);
  for (auto x : s.members()) {
    CostValue inner = CostValue::infinity();
    for (auto y : t.members()) inner = std::min(inner, a(x, y));
    outer = std::max(outer, inner);
  }
  return outer;
}

CostValue min_max(const MetricSpace& a, const ObjectSet& s, const ObjectSet& t) {
  CostValue outer = CostValue::infinity();
  for (auto y : t.members()) {
    CostValue inner(0);
    for (auto x : s.members()) inner = std::max(inner, a(x, y));
    outer = std::min(outer, inner);
  }
  return outer;
}

std::vector<PrincipalFilter> all_filters(const MetricSpace& a) {
  std::vector<PrincipalFilter> out;
  for (const auto& s : gen::nonempty_subsets(a.size())) out.emplace_back(a, s);
  return out;
}

/// M-(F) for every filter, each also shifted up by 1.
std::vector<MetricModule> sample_left_modules(const MetricSpace& a) {
  std::vector<MetricModule> out;
  for (const auto& f : all_filters(a)) {
    MetricModule m = module_minus(f);
    MetricModule shifted = m;
    for (auto& v : shifted.values) v = v + CostValue(1);
    out.push_back(std::move(m));
    out.push_back(std::move(shifted));
  }
  return out;
}

std::vector<MetricRightModule> sample_right_modules(const MetricSpace& a) {
  std::vector<MetricRightModule> out;
  for (const auto& f : all_filters(a)) {
    MetricRightModule n = right_module_of_filter(f);
    if (validate_right_module(n).valid()) out.push_back(std::move(n));
  }
  return out;
}

using Check = std::function<std::optional<std::string>(const MetricSpace&)>;

std::optional<std::string> space_valid(const MetricSpace& a) {
  const auto report = validate_category(a);
  if (report.valid()) return std::nullopt;
  const auto& v = report.violations.front();
  std::string objs;
  for (auto x : v.objects) objs += (objs.empty() ? "" : ",") + a.name(x);
  return v.rule + " axiom fails at (" + objs + ")";
}

std::optional<std::string> yoneda_isometry(const MetricSpace& a) {
  const auto c = type1_completion(a);
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (c.space(c.embedding[x], c.embedding[y]) != a(x, y))
        return "hom(i " + a.name(x) + ", i " + a.name(y) + ") = " + c.space(c.embedding[x], c.embedding[y]).to_string() +
               " but A = " + a(x, y).to_string();
  return std::nullopt;
}

std::optional<std::string> filter_distance(const MetricSpace& a) {
  const auto filters = all_filters(a);
  std::vector<MetricModule> minus;
  for (const auto& f : filters) minus.push_back(module_minus(f));
  for (std::size_t i = 0; i < filters.size(); ++i)
    for (std::size_t j = 0; j < filters.size(); ++j) {
      const CostValue lhs = presheaf_hom(minus[i], minus[j]);
      const CostValue rhs = max_min(a, filters[i].core(), filters[j].core());
      if (lhs != rhs)
        return "cores " + names(a, filters[i].core()) + ", " + names(a, filters[j].core()) + ": hom = " +
               lhs.to_string() + ", max-min = " + rhs.to_string();
    }
  return std::nullopt;
}

std::optional<std::string> composite_lim_minus(const MetricSpace& a) {
  const auto right = sample_right_modules(a);
  for (const auto& f : all_filters(a)) {
    const MetricModule m = module_minus(f);
    for (const auto& n : right) {
      const CostValue lhs = compose(n, m);
      const CostValue rhs = lim_minus(f, n.values);
      if (lhs != rhs)
        return "core " + names(a, f.core()) + ", N = " + values(n.values) + ": N*M- = " + lhs.to_string() +
               ", lim- N = " + rhs.to_string();
    }
  }
  return std::nullopt;
}

std::optional<std::string> hom_lim_plus(const MetricSpace& a) {
  const auto left = sample_left_modules(a);
  for (const auto& f : all_filters(a)) {
    const MetricModule m = module_minus(f);
    for (const auto& n : left) {
      const CostValue lhs = presheaf_hom(m, n);
      const CostValue rhs = lim_plus(f, n.values);
      if (lhs != rhs)
        return "core " + names(a, f.core()) + ", M = " + values(n.values) + ": hom = " + lhs.to_string() +
               ", lim+ M = " + rhs.to_string();
    }
  }
  return std::nullopt;
}

std::optional<std::string> minimax_exchange(const MetricSpace& a) {
  const auto filters = all_filters(a);
  for (const auto& f1 : filters) {
    if (!is_cauchy(f1)) continue;
    for (const auto& f2 : filters) {
      const CostValue lhs = max_min(a, f1.core(), f2.core());
      const CostValue rhs = min_max(a, f1.core(), f2.core());
      if (lhs != rhs)
        return "Cauchy core " + names(a, f1.core()) + " against " + names(a, f2.core()) + ": " + lhs.to_string() +
               " vs " + rhs.to_string();
    }
  }
  return std::nullopt;
}

std::optional<std::string> filter_chain(const MetricSpace& a) {
  const bool symmetric = is_symmetric(a);
  for (const auto& f : all_filters(a)) {
    const bool cauchy = is_cauchy(f);
    const bool aleph = is_type_aleph(f);
    const bool one = is_type1(f);
    if (cauchy && !aleph) return "core " + names(a, f.core()) + " is Cauchy but not of type omega";
    if (aleph && !one) return "core " + names(a, f.core()) + " is of type omega but not of type 1";
    if (symmetric && aleph && !cauchy) return "symmetric space, core " + names(a, f.core()) + " of type omega but not Cauchy";
  }
  return std::nullopt;
}

std::optional<std::string> flatness_hierarchy(const MetricSpace& a) {
  const bool symmetric = is_symmetric(a);
  for (const auto& m : sample_left_modules(a)) {
    const auto v = classify(m);
    if (v.adjoint && !v.aleph) return "M = " + values(m.values) + " is a left adjoint but not omega-flat";
    if (v.aleph && !v.p1) return "M = " + values(m.values) + " is omega-flat but not P1-flat";
    if (symmetric && v.aleph != v.adjoint) return "symmetric space, M = " + values(m.values) + " separates omega-flat and left adjoint";
  }
  return std::nullopt;
}

std::optional<std::string> hom_left_adjoint(const MetricSpace& a) {
  const auto left = sample_left_modules(a);
  for (const auto& m : left) {
    if (!is_left_adjoint(m)) continue;
    const MetricRightModule tilde = right_adjoint_candidate(m);
    for (const auto& n : left) {
      const CostValue lhs = presheaf_hom(m, n);
      const CostValue rhs = compose(tilde, n);
      if (lhs != rhs)
        return "M = " + values(m.values) + ", N = " + values(n.values) + ": hom = " + lhs.to_string() +
               ", M~*N = " + rhs.to_string();
    }
  }
  return std::nullopt;
}

std::optional<std::string> completion_complete(const MetricSpace& a) {
  const auto c = type1_completion(a);
  if (const auto core = unrepresented_core(c.space, CompletionKind::type1()))
    return "closed core " + names(c.space, *core) + " of the completion has no representative";
  return std::nullopt;
}

/// The completion C is an algebra: the representative map r from the
/// completion of C back to C is a reflection, r i = id and C(r P, x) equals
/// the distance from P to i x.
std::optional<std::string> completion_reflection(const MetricSpace& a) {
  const auto c = type1_completion(a);
  const auto cc = type1_completion(c.space);
  const MetricMap r = extend_map(identity_functor(c.space), CompletionKind::type1());
  for (std::size_t x = 0; x < c.space.size(); ++x) {
    const std::size_t back = r(cc.embedding[x]);
    if (!equivalent_objects(c.space, back, x)) return "r(i " + c.space.name(x) + ") = " + c.space.name(back);
  }
  for (std::size_t p = 0; p < cc.space.size(); ++p)
    for (std::size_t x = 0; x < c.space.size(); ++x)
      if (c.space(r(p), x) != cc.space(p, cc.embedding[x]))
        return "C(r " + cc.space.name(p) + ", " + c.space.name(x) + ") = " + c.space(r(p), x).to_string() +
               " but the completion distance is " + cc.space(p, cc.embedding[x]).to_string();
  return std::nullopt;
}

std::optional<std::string> symmetric_completion(const MetricSpace& a) {
  const auto report = check_symmetric_completion(a);
  if (!report.isomorphic) return report.failure;
  const auto ta = type_aleph_completion(a);
  const auto ca = cauchy_completion(a);
  if (ta.carrier != ca.carrier) return "type-omega and Cauchy carriers differ";
  if (!(ta.space.matrix() == ca.space.matrix())) return "type-omega and Cauchy distances differ";
  return std::nullopt;
}

const std::map<std::string, Check>& space_checks() {
  static const std::map<std::string, Check> checks = {
      {"space-valid", space_valid},
      {"yoneda-isometry", yoneda_isometry},
      {"filter-distance", filter_distance},
      {"composite-lim-minus", composite_lim_minus},
      {"hom-lim-plus", hom_lim_plus},
      {"minimax-exchange", minimax_exchange},
      {"filter-chain", filter_chain},
      {"flatness-hierarchy", flatness_hierarchy},
      {"hom-left-adjoint", hom_left_adjoint},
      {"completion-complete", completion_complete},
      {"completion-reflection", completion_reflection},
      {"symmetric-completion", symmetric_completion},
  };
  return checks;
}

/// Library errors on a corrupted instance count as failures, not crashes.
template <class F>
std::optional<std::string> guarded(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    return std::string("error: ") + e.what();
  }
}

/// Drops objects greedily while the theorem still fails.
MetricSpace shrink(const std::string& theorem, MetricSpace a) {
  bool progress = true;
  while (progress && a.size() > 1) {
    progress = false;
    for (std::size_t drop = 0; drop < a.size(); ++drop) {
      std::vector<std::size_t> keep;
      for (std::size_t x = 0; x < a.size(); ++x)
        if (x != drop) keep.push_back(x);
      MetricSpace smaller = full_subcategory(a, keep);
      if (check_space_theorem(theorem, smaller)) {
        a = std::move(smaller);
        progress = true;
        break;
      }
    }
  }
  return a;
}

class Recorder {
 public:
  Recorder() {
    for (const auto& name : theorem_names()) tallies_.push_back({name});
  }

  void record(const std::string& theorem, const std::optional<std::string>& failure, Json instance) {
    auto it = std::find_if(tallies_.begin(), tallies_.end(), [&](const Tally& t) { return t.theorem == theorem; });
    if (!failure) {
      ++it->verified;
      return;
    }
    ++it->violations;
    Json doc;
    doc["theorem"] = theorem;
    doc["instance"] = std::move(instance);
    doc["detail"] = *failure;
    counterexamples_.push_back(std::move(doc));
  }

  void space(const std::string& theorem, const MetricSpace& a) {
    auto failure = check_space_theorem(theorem, a);
    if (!failure) {
      record(theorem, failure, {});
      return;
    }
    const MetricSpace small = shrink(theorem, a);
    Json instance;
    instance["space"] = io::space_to_json(small);
    record(theorem, check_space_theorem(theorem, small), std::move(instance));
  }

  SuiteResult finish() && { return {std::move(tallies_), std::move(counterexamples_)}; }

 private:
  std::vector<Tally> tallies_;
  std::vector<Json> counterexamples_;
};

Json kan_instance(const MetricMap& g, const ObjectSet& core) {
  Json instance;
  instance["functor"] = io::functor_to_json(g);
  Json c = Json::array();
  for (auto x : core.members()) c.push_back(g.source.name(x));
  instance["core"] = std::move(c);
  return instance;
}

}  // namespace

Json SuiteResult::to_json() const {
  Json doc;
  doc["status"] = ok() ? "ok" : "violations";
  Json ts = Json::array();
  for (const auto& t : tallies) {
    Json item;
    item["theorem"] = t.theorem;
    item["verified"] = t.verified;
    item["violations"] = t.violations;
    ts.push_back(std::move(item));
  }
  doc["theorems"] = std::move(ts);
  doc["counterexamples"] = counterexamples;
  return doc;
}

const std::vector<std::string>& theorem_names() {
  static const std::vector<std::string> names = [] {
    auto v = kSpaceTheorems;
    v.push_back("symmetric-completion");
    v.push_back("kan-coherence");
    v.push_back("preorder-collapse");
    return v;
  }();
  return names;
}

std::optional<std::string> check_space_theorem(const std::string& theorem, const MetricSpace& a) {
  const auto it = space_checks().find(theorem);
  if (it == space_checks().end()) throw ParseError("unknown theorem '" + theorem + "'");
  return guarded([&] { return it->second(a); });
}

std::optional<std::string> check_kan_coherence(const MetricMap& g, const ObjectSet& core) {
  return guarded([&]() -> std::optional<std::string> {
    const PrincipalFilter f(g.source, core);
    const MetricModule m = module_minus(f);
    const PrincipalFilter image = direct_image(f, g);
    const MetricModule lan = left_kan_extension(m, g);
    if (module_minus(image).values != lan.values)
      return "M-(G F) = " + values(module_minus(image).values) + " but Lan M-(F) = " + values(lan.values);
    const auto rep = representative(image);
    const auto colim = weighted_colimit(m, g);
    if (rep != colim) return "representative of G F and the weighted colimit differ";
    const auto before = classify(m);
    const auto after = classify(lan);
    if ((before.p1 && !after.p1) || (before.aleph && !after.aleph) || (before.adjoint && !after.adjoint))
      return "left Kan extension loses a flatness class";
    return std::nullopt;
  });
}

std::optional<std::string> check_preorder_collapse(const Preorder& p) {
  return guarded([&]() -> std::optional<std::string> {
    const auto ideals = ideal_completion(p);
    const auto reflection = poset_reflection(p);
    std::vector<std::size_t> map;
    for (const auto& cls : reflection.classes) map.push_back(ideals.embedding[cls.first()]);
    if (!isomorphic_via(reflection.poset, ideals.space, map))
      return "ideal completion (" + std::to_string(ideals.space.size()) + " points) is not isomorphic to the poset reflection (" +
             std::to_string(reflection.poset.size()) + " points)";
    return std::nullopt;
  });
}

SuiteResult run_suite(const SuiteConfig& config) {
  if (config.max_objects < 1) throw InvalidInputError("max_objects must be at least 1");
  if (config.grid.empty() || !config.grid.front().is_zero()) throw InvalidInputError("grid must contain 0");
  gen::Rng rng(config.seed);
  Recorder rec;
  auto size = [&] { return 1 + gen::below(rng, config.max_objects); };

  for (std::size_t i = 0; i < config.spaces; ++i) {
    const MetricSpace a = gen::random_space(rng, size(), config.grid);
    for (const auto& t : kSpaceTheorems) {
      if (t == "completion-reflection" && a.size() > config.double_completion_limit) continue;
      rec.space(t, a);
    }
  }
  for (std::size_t i = 0; i < config.symmetric_spaces; ++i) {
    const MetricSpace a = gen::random_symmetric_space(rng, size(), config.grid);
    rec.space("symmetric-completion", a);
    rec.space("filter-chain", a);
    rec.space("flatness-hierarchy", a);
  }
  for (std::size_t i = 0; i < config.functors; ++i) {
    const MetricSpace a = gen::random_space(rng, size(), config.grid);
    const MetricMap g = gen::random_functor(rng, a, size(), config.grid);
    const PrincipalFilter f = gen::random_filter(rng, a);
    rec.record("kan-coherence", check_kan_coherence(g, f.core()), kan_instance(g, f.core()));
  }
  for (std::size_t i = 0; i < config.preorders; ++i) {
    const Preorder p = gen::random_preorder(rng, size());
    Json instance;
    instance["preorder"] = io::space_to_json(p);
    const auto failure = check_preorder_collapse(p);
    rec.record("preorder-collapse", failure, failure ? std::move(instance) : Json{});
  }
  return std::move(rec).finish();
}

SuiteResult run_on_space(const io::AnySpace& space) {
  Recorder rec;
  if (const auto* p = std::get_if<Preorder>(&space)) {
    Json instance;
    instance["preorder"] = io::space_to_json(*p);
    rec.record("preorder-collapse", check_preorder_collapse(*p), std::move(instance));
    return std::move(rec).finish();
  }
  const auto& a = std::get<MetricSpace>(space);
  for (const auto& t : kSpaceTheorems) rec.space(t, a);
  if (is_symmetric(a)) rec.space("symmetric-completion", a);
  return std::move(rec).finish();
}

std::optional<std::string> replay(const Json& cex) {
  if (!cex.contains("theorem") || !cex.contains("instance")) throw ParseError("counterexample needs \"theorem\" and \"instance\"");
  const std::string theorem = cex["theorem"].get<std::string>();
  const Json& instance = cex["instance"];
  if (theorem == "kan-coherence") {
    const MetricMap g = io::functor_from_json<CostQuantale>(instance.at("functor"));
    ObjectSet core(g.source.size());
    for (const auto& n : instance.at("core")) core.insert(g.source.index_of(n.get<std::string>()));
    return check_kan_coherence(g, core);
  }
  if (theorem == "preorder-collapse") return check_preorder_collapse(io::preorder_from_json(instance.at("preorder")));
  return check_space_theorem(theorem, io::metric_space_from_json(instance.at("space")));
}

}  // namespace qcat::suite
