#include "qcat/completion.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qcat {

namespace {

std::string core_name(const MetricSpace& a, const ObjectSet& core) {
  std::string s = "{";
  bool first = true;
  for (auto x : core.members()) {
    if (!first) s += ",";
    s += a.name(x);
    first = false;
  }
  return s + "}";
}

/// min_{y in T} A(x,y) for every x.
std::vector<CostValue> distances_to(const MetricSpace& a, const ObjectSet& t) {
  const auto members = t.members();
  std::vector<CostValue> d;
  d.reserve(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    CostValue acc = CostValue::infinity();
    for (auto y : members) acc = CostQuantale::join(acc, a(x, y));
    d.push_back(acc);
  }
  return d;
}

CompletionSpace build_subset_completion(const MetricSpace& a, const CompletionKind& kind) {
  CompletionSpace c{kind, a, {}, {}, {}};
  for (auto& s : closed_subsets(a))
    if (core_has_kind(a, s, kind)) c.carrier.push_back(std::move(s));

  const std::size_t m = c.carrier.size();
  std::vector<std::vector<CostValue>> dist;
  dist.reserve(m);
  for (const auto& t : c.carrier) dist.push_back(distances_to(a, t));

  std::vector<std::vector<std::size_t>> members;
  members.reserve(m);
  for (const auto& s : c.carrier) members.push_back(s.members());

  std::vector<CostValue> flat;
  flat.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      CostValue acc;
      for (auto x : members[i]) acc = CostQuantale::meet(acc, dist[j][x]);
      flat.push_back(acc);
    }
  }
  std::vector<std::string> names;
  names.reserve(m);
  for (const auto& s : c.carrier) names.push_back(core_name(a, s));
  c.space = MetricSpace::from_flat(std::move(names), std::move(flat));

  for (std::size_t x = 0; x < a.size(); ++x) c.embedding.push_back(c.index_of(closure(a, ObjectSet(a.size(), {x}))));
  return c;
}

}  // namespace

CompletionKind CompletionKind::parse(std::string_view text) {
  if (text == "type1") return type1();
  if (text == "cauchy") return cauchy();
  if (text.starts_with("type-")) return type_aleph(Cardinal::parse(text.substr(5)));
  throw ParseError("unknown completion kind '" + std::string(text) + "'");
}

std::string CompletionKind::to_string() const {
  switch (tag) {
    case Tag::type1:
      return "type1";
    case Tag::type_aleph:
      return "type-" + aleph.to_string();
    case Tag::cauchy:
      return "cauchy";
  }
  return "?";
}

std::size_t CompletionSpace::index_of(const ObjectSet& core) const {
  auto it = std::lower_bound(carrier.begin(), carrier.end(), core);
  if (it == carrier.end() || !(*it == core)) throw UnknownObjectError("core is not a point of the completion");
  return static_cast<std::size_t>(it - carrier.begin());
}

ObjectSet closure(const MetricSpace& a, const ObjectSet& s) {
  if (s.empty()) throw InvalidInputError("closure of an empty set");
  if (s.universe() != a.size()) throw DimensionError("subset does not match the space");
  const auto d = distances_to(a, s);
  ObjectSet out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    if (d[x].is_zero()) out.insert(x);
  return out;
}

std::vector<ObjectSet> closed_subsets(const MetricSpace& a, std::size_t limit) {
  const std::size_t n = a.size();
  std::vector<ObjectSet> down(n, ObjectSet(n));
  std::vector<ObjectSet> up(n, ObjectSet(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (a(x, y).is_zero()) {
        down[y].insert(x);
        up[x].insert(y);
      }

  std::vector<ObjectSet> out;
  // Decide objects in index order; including y drags in everything at zero
  // distance to it, excluding x rules out everything x is at zero distance to.
  std::function<void(const ObjectSet&, const ObjectSet&, std::size_t)> go =
      [&](const ObjectSet& in, const ObjectSet& excluded, std::size_t next) {
        while (next < n && (in.contains(next) || excluded.contains(next))) ++next;
        if (next == n) {
          if (!in.empty()) {
            if (out.size() == limit) throw BoundExceededError("too many closed subsets");
            out.push_back(in);
          }
          return;
        }
        if ((down[next] & excluded).empty()) go(in | down[next], excluded, next + 1);
        if ((up[next] & in).empty()) go(in, excluded | up[next], next + 1);
      };
  go(ObjectSet(n), ObjectSet(n), 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool core_has_kind(const MetricSpace& a, const ObjectSet& core, const CompletionKind& kind) {
  const PrincipalFilter f(a, core);
  switch (kind.tag) {
    case CompletionKind::Tag::type1:
      return is_type1(f);
    case CompletionKind::Tag::type_aleph:
      return is_type_aleph(f, kind.aleph);
    case CompletionKind::Tag::cauchy:
      return is_cauchy(f);
  }
  return false;
}

CostValue semi_hausdorff(const MetricSpace& a, const ObjectSet& s, const ObjectSet& t) {
  if (s.empty() || t.empty()) throw InvalidInputError("semi-Hausdorff distance of an empty set");
  if (s.universe() != a.size() || t.universe() != a.size()) throw DimensionError("subset does not match the space");
  const auto d = distances_to(a, t);
  CostValue acc;
  for (auto x : s.members()) acc = CostQuantale::meet(acc, d[x]);
  return acc;
}

CompletionSpace type1_completion(const MetricSpace& a) { return build_subset_completion(a, CompletionKind::type1()); }

CompletionSpace type_aleph_completion(const MetricSpace& a, Cardinal aleph) {
  return build_subset_completion(a, CompletionKind::type_aleph(aleph));
}

CompletionSpace cauchy_completion(const MetricSpace& a) {
  const std::size_t n = a.size();
  CompletionSpace c{CompletionKind::cauchy(), a, {}, {}, {}};
  std::vector<bool> seen(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    ObjectSet cls(n);
    for (std::size_t y = x; y < n; ++y)
      if (equivalent_objects(a, x, y)) {
        cls.insert(y);
        seen[y] = true;
      }
    c.carrier.push_back(std::move(cls));
  }
  std::sort(c.carrier.begin(), c.carrier.end());
  std::vector<std::size_t> reps;
  for (const auto& cls : c.carrier) reps.push_back(cls.first());
  c.space = full_subcategory(a, reps);
  c.embedding.resize(n);
  for (std::size_t i = 0; i < c.carrier.size(); ++i)
    for (auto x : c.carrier[i].members()) c.embedding[x] = i;
  return c;
}

CompletionSpace complete(const MetricSpace& a, const CompletionKind& kind) {
  switch (kind.tag) {
    case CompletionKind::Tag::type1:
      return type1_completion(a);
    case CompletionKind::Tag::type_aleph:
      return type_aleph_completion(a, kind.aleph);
    case CompletionKind::Tag::cauchy:
      return cauchy_completion(a);
  }
  throw Error("unknown completion kind");
}

std::optional<ObjectSet> unrepresented_core(const MetricSpace& a, const CompletionKind& kind) {
  for (const auto& s : closed_subsets(a)) {
    if (!core_has_kind(a, s, kind)) continue;
    if (!representative(PrincipalFilter(a, s))) return s;
  }
  return std::nullopt;
}

bool is_complete(const MetricSpace& a, const CompletionKind& kind) { return !unrepresented_core(a, kind); }

MetricMap extend_map(const MetricMap& f, const CompletionKind& kind) {
  if (!validate_functor(f).valid()) throw InvalidInputError("map to extend is not non-expansive");
  if (!is_complete(f.target, kind))
    throw IncompleteTargetError("target is not " + kind.to_string() + "-complete");
  const CompletionSpace c = complete(f.source, kind);
  std::vector<std::size_t> map;
  map.reserve(c.carrier.size());
  for (const auto& s : c.carrier) {
    ObjectSet image(f.target.size());
    for (auto x : s.members()) image.insert(f(x));
    const auto rep = representative(PrincipalFilter(f.target, image));
    if (!rep) throw IncompleteTargetError("image core has no representative");
    map.push_back(*rep);
  }
  return {c.space, f.target, std::move(map)};
}

bool equivalent_via(const MetricSpace& small, const MetricSpace& big, const std::vector<std::size_t>& embedding) {
  if (embedding.size() != small.size()) return false;
  for (std::size_t x = 0; x < small.size(); ++x)
    for (std::size_t y = 0; y < small.size(); ++y)
      if (!(big(embedding[x], embedding[y]) == small(x, y))) return false;
  for (std::size_t p = 0; p < big.size(); ++p) {
    bool found = false;
    for (auto e : embedding) {
      if (equivalent_objects(big, p, e)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

UniversalPropertyReport check_universal_property(const MetricSpace& a, const MetricSpace& b,
                                                 const CompletionKind& kind, const UniversalPropertyBounds& bounds) {
  if (a.size() > bounds.max_source || b.size() > bounds.max_target)
    throw BoundExceededError("universal property check is bounded to |A| <= " + std::to_string(bounds.max_source) +
                             ", |B| <= " + std::to_string(bounds.max_target));
  require_valid(a);
  require_valid(b);
  if (!is_complete(b, kind)) throw IncompleteTargetError("target is not " + kind.to_string() + "-complete");

  UniversalPropertyReport report;
  auto fail = [&](std::string msg) {
    report.holds = false;
    report.failures.push_back(std::move(msg));
  };

  const CompletionSpace c = complete(a, kind);
  const MetricSpace& cs = c.space;

  struct Core {
    std::vector<std::size_t> members;
    std::size_t rep;
  };
  std::vector<Core> cores;
  for (const auto& s : closed_subsets(cs)) {
    if (!core_has_kind(cs, s, kind)) continue;
    const auto rep = representative(PrincipalFilter(cs, s));
    if (!rep) {
      fail("completion lacks a representative for " + core_name(cs, s));
      continue;
    }
    cores.push_back({s.members(), *rep});
  }

  // F(rep S) is a representative of F(S): B(F rep, t) = max_{s in S} B(F s, t).
  auto preserves_representatives = [&](const std::vector<std::size_t>& f) {
    for (const auto& core : cores) {
      for (std::size_t t = 0; t < b.size(); ++t) {
        CostValue acc;
        for (auto s : core.members) acc = CostQuantale::meet(acc, b(f[s], t));
        if (!(b(f[core.rep], t) == acc)) return false;
      }
    }
    return true;
  };

  const auto source_maps = enumerate_functors(a, b);
  std::vector<std::vector<std::size_t>> extension_maps;
  for_each_functor(cs, b, [&](const std::vector<std::size_t>& f) {
    if (preserves_representatives(f)) extension_maps.push_back(f);
  });
  report.source_maps = source_maps.size();
  report.extension_maps = extension_maps.size();

  std::vector<std::vector<std::size_t>> restricted;
  for (const auto& f : extension_maps) {
    std::vector<std::size_t> r(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) r[x] = f[c.embedding[x]];
    restricted.push_back(std::move(r));
  }

  for (const auto& f : source_maps) {
    bool hit = false;
    for (const auto& r : restricted) {
      if (pointwise_distance(b, f, r).is_zero() && pointwise_distance(b, r, f).is_zero()) {
        hit = true;
        break;
      }
    }
    if (!hit) {
      std::string s;
      for (auto y : f) s += b.name(y) + " ";
      fail("no extension restricts to map [ " + s + "]");
    }
    const MetricMap ext = extend_map(MetricMap(a, b, f), kind);
    if (!preserves_representatives(ext.map)) fail("extend_map result is not representative preserving");
    for (std::size_t x = 0; x < a.size(); ++x) {
      if (!equivalent_objects(b, ext(c.embedding[x]), f[x])) {
        fail("extend_map does not restrict to the original map");
        break;
      }
    }
  }

  for (std::size_t i = 0; i < extension_maps.size(); ++i) {
    for (std::size_t j = 0; j < extension_maps.size(); ++j) {
      const CostValue full = pointwise_distance(b, extension_maps[i], extension_maps[j]);
      const CostValue part = pointwise_distance(b, restricted[i], restricted[j]);
      if (!(full == part)) {
        fail("restriction changes a distance: " + full.to_string() + " vs " + part.to_string());
        return report;
      }
    }
  }
  return report;
}

SymmetricCompletionReport check_symmetric_completion(const MetricSpace& a) {
  if (!is_symmetric(a)) throw InvalidInputError("space is not symmetric");
  SymmetricCompletionReport report;
  const CompletionSpace c1 = type1_completion(a);
  const CompletionSpace cc = cauchy_completion(a);
  const auto hausdorff_points = closed_subsets(cc.space);

  auto quotient = [&](const ObjectSet& s) {
    ObjectSet q(cc.carrier.size());
    for (auto x : s.members()) q.insert(cc.embedding[x]);
    return q;
  };

  if (hausdorff_points.size() != c1.carrier.size()) {
    report.isomorphic = false;
    report.failure = "carrier sizes differ: " + std::to_string(c1.carrier.size()) + " vs " +
                     std::to_string(hausdorff_points.size());
    return report;
  }
  std::vector<ObjectSet> images;
  for (const auto& s : c1.carrier) {
    ObjectSet q = quotient(s);
    if (!std::binary_search(hausdorff_points.begin(), hausdorff_points.end(), q)) {
      report.isomorphic = false;
      report.failure = "image of " + core_name(a, s) + " is not closed in the Cauchy completion";
      return report;
    }
    images.push_back(std::move(q));
  }
  auto sorted = images;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    report.isomorphic = false;
    report.failure = "quotient map is not injective on closed subsets";
    return report;
  }
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = 0; j < images.size(); ++j) {
      const CostValue d = semi_hausdorff(cc.space, images[i], images[j]);
      if (!(d == c1.space(i, j))) {
        report.isomorphic = false;
        report.failure = "distance mismatch between " + c1.space.name(i) + " and " + c1.space.name(j);
        return report;
      }
    }
  }
  return report;
}

std::string specialization_dot(const MetricSpace& a) {
  std::ostringstream os;
  os << "digraph specialization {\n";
  for (std::size_t x = 0; x < a.size(); ++x) os << "  \"" << a.name(x) << "\";\n";
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (x != y && a(x, y).is_zero()) os << "  \"" << a.name(x) << "\" -> \"" << a.name(y) << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace qcat
