#include "qcat/preorder.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qcat {

namespace {

bool is_down_closed(const Preorder& a, const ObjectSet& s) {
  for (auto y : s.members())
    for (std::size_t x = 0; x < a.size(); ++x)
      if (leq(a, x, y) && !s.contains(x)) return false;
  return true;
}

bool is_upper_bound(const Preorder& a, const ObjectSet& s, std::size_t u) {
  for (auto x : s.members())
    if (!leq(a, x, u)) return false;
  return true;
}

bool directed_set(const Preorder& a, const ObjectSet& s) {
  for (auto u : s.members())
    if (is_upper_bound(a, s, u)) return true;
  return false;
}

}  // namespace

Downset::Downset(Preorder over, ObjectSet members) : over_(std::move(over)), members_(std::move(members)) {
  if (members_.universe() != over_.size()) throw DimensionError("down-set does not match the preorder");
  if (!is_down_closed(over_, members_)) throw InvalidInputError("set is not downward closed");
}

Downset principal_downset(const Preorder& a, std::size_t x) {
  a.check_index(x);
  ObjectSet s(a.size());
  for (std::size_t y = 0; y < a.size(); ++y)
    if (leq(a, y, x)) s.insert(y);
  return {a, std::move(s)};
}

Downset downset_of_module(const BoolModule& m) {
  if (!validate_left_module(m).valid()) throw InvalidInputError("not a left module");
  ObjectSet s(m.over.size());
  for (std::size_t x = 0; x < m.values.size(); ++x)
    if (m(x).bit) s.insert(x);
  return {m.over, std::move(s)};
}

BoolModule module_of_downset(const Downset& d) {
  std::vector<BoolValue> v;
  for (std::size_t x = 0; x < d.over().size(); ++x) v.emplace_back(d.members().contains(x));
  return {d.over(), std::move(v)};
}

bool is_directed(const Downset& d, Cardinal /*aleph*/) {
  return !d.members().empty() && directed_set(d.over(), d.members());
}

bool flatness_bool(const BoolModule& m, const FlatnessClass& cls) {
  const Downset d = downset_of_module(m);
  switch (cls.kind) {
    case FlatnessClass::Kind::p1:
      return !d.members().empty();
    case FlatnessClass::Kind::aleph:
      return is_directed(d, cls.aleph);
    case FlatnessClass::Kind::q:
      // Left adjoint down-sets are the principal ones: their greatest element
      // is the upper bound a directed finite down-set already contains.
      return is_directed(d, Cardinal::omega());
  }
  return false;
}

std::vector<ObjectSet> all_downsets(const Preorder& a, std::size_t limit) {
  const std::size_t n = a.size();
  std::vector<ObjectSet> down(n, ObjectSet(n));
  std::vector<ObjectSet> up(n, ObjectSet(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (leq(a, x, y)) {
        down[y].insert(x);
        up[x].insert(y);
      }
  std::vector<ObjectSet> out;
  std::function<void(const ObjectSet&, const ObjectSet&, std::size_t)> go =
      [&](const ObjectSet& in, const ObjectSet& excluded, std::size_t next) {
        while (next < n && (in.contains(next) || excluded.contains(next))) ++next;
        if (next == n) {
          if (out.size() == limit) throw BoundExceededError("too many down-sets");
          out.push_back(in);
          return;
        }
        if ((down[next] & excluded).empty()) go(in | down[next], excluded, next + 1);
        if ((up[next] & in).empty()) go(in, excluded | up[next], next + 1);
      };
  go(ObjectSet(n), ObjectSet(n), 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> least_upper_bound(const Preorder& a, const ObjectSet& s) {
  std::vector<std::size_t> bounds;
  for (std::size_t u = 0; u < a.size(); ++u)
    if (is_upper_bound(a, s, u)) bounds.push_back(u);
  for (auto u : bounds) {
    bool least = true;
    for (auto v : bounds) {
      if (!leq(a, u, v)) {
        least = false;
        break;
      }
    }
    if (least) return u;
  }
  return std::nullopt;
}

std::optional<std::size_t> lub_of_downset(const Downset& d) { return least_upper_bound(d.over(), d.members()); }

IdealCompletion ideal_completion(const Preorder& a, Cardinal aleph) {
  IdealCompletion c;
  for (auto& s : all_downsets(a)) {
    if (s.empty()) continue;
    if (is_directed(Downset(a, s), aleph)) c.carrier.push_back(std::move(s));
  }
  const std::size_t m = c.carrier.size();
  std::vector<BoolValue> flat;
  flat.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) flat.emplace_back(c.carrier[i].is_subset_of(c.carrier[j]));
  std::vector<std::string> names;
  for (const auto& s : c.carrier) {
    std::string name = "{";
    bool first = true;
    for (auto x : s.members()) {
      name += (first ? "" : ",") + a.name(x);
      first = false;
    }
    names.push_back(name + "}");
  }
  c.space = Preorder::from_flat(std::move(names), std::move(flat));
  for (std::size_t x = 0; x < a.size(); ++x) {
    const ObjectSet down = principal_downset(a, x).members();
    c.embedding.push_back(
        static_cast<std::size_t>(std::lower_bound(c.carrier.begin(), c.carrier.end(), down) - c.carrier.begin()));
  }
  return c;
}

PosetReflection poset_reflection(const Preorder& a) {
  const std::size_t n = a.size();
  PosetReflection r;
  r.quotient.assign(n, n);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < n; ++x) {
    if (r.quotient[x] != n) continue;
    ObjectSet cls(n);
    for (std::size_t y = x; y < n; ++y)
      if (leq(a, x, y) && leq(a, y, x)) {
        cls.insert(y);
        r.quotient[y] = reps.size();
      }
    reps.push_back(x);
    r.classes.push_back(std::move(cls));
  }
  r.poset = full_subcategory(a, reps);
  return r;
}

bool is_directed_complete(const Preorder& a) {
  for (const auto& s : all_downsets(a)) {
    if (s.empty() || !directed_set(a, s)) continue;
    if (!least_upper_bound(a, s)) return false;
  }
  return true;
}

bool isomorphic_via(const Preorder& a, const Preorder& b, const std::vector<std::size_t>& map) {
  if (a.size() != b.size() || map.size() != a.size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (auto y : map) {
    if (y >= b.size() || hit[y]) return false;
    hit[y] = true;
  }
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (leq(a, x, y) != leq(b, map[x], map[y])) return false;
  return true;
}

DcpoReport check_dcpo_universal_property(const Preorder& a, const Preorder& b, std::size_t bound) {
  if (a.size() > bound || b.size() > bound)
    throw BoundExceededError("dcpo check is bounded to " + std::to_string(bound) + " elements");
  require_valid(a);
  require_valid(b);

  DcpoReport report;
  auto fail = [&](std::string msg) {
    report.holds = false;
    report.failures.push_back(std::move(msg));
  };

  const IdealCompletion ideals = ideal_completion(a);
  const Preorder& is = ideals.space;

  struct Directed {
    ObjectSet members;
    std::size_t lub;
  };
  std::vector<Directed> directed;
  for (auto& s : all_downsets(is)) {
    if (s.empty() || !directed_set(is, s)) continue;
    const auto lub = least_upper_bound(is, s);
    if (!lub) {
      fail("ideal completion lacks a directed lub");
      continue;
    }
    directed.push_back({std::move(s), *lub});
  }

  // F(lub D) is a least upper bound of F(D) in B.
  auto preserves_lubs = [&](const std::vector<std::size_t>& f) {
    for (const auto& d : directed) {
      ObjectSet image(b.size());
      for (auto x : d.members.members()) image.insert(f[x]);
      const std::size_t top = f[d.lub];
      if (!is_upper_bound(b, image, top)) return false;
      for (std::size_t u = 0; u < b.size(); ++u)
        if (is_upper_bound(b, image, u) && !leq(b, top, u)) return false;
    }
    return true;
  };

  const auto source_maps = enumerate_functors(a, b);
  std::vector<std::vector<std::size_t>> extension_maps;
  for_each_functor(is, b, [&](const std::vector<std::size_t>& f) {
    if (preserves_lubs(f)) extension_maps.push_back(f);
  });
  report.source_maps = source_maps.size();
  report.extension_maps = extension_maps.size();

  std::vector<std::vector<std::size_t>> restricted;
  for (const auto& f : extension_maps) {
    std::vector<std::size_t> r(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) r[x] = f[ideals.embedding[x]];
    restricted.push_back(std::move(r));
  }
  for (const auto& f : source_maps) {
    const bool hit = std::any_of(restricted.begin(), restricted.end(), [&](const auto& r) {
      return pointwise_distance(b, f, r).bit && pointwise_distance(b, r, f).bit;
    });
    if (!hit) fail("a monotone map has no lub-preserving extension");
  }
  for (std::size_t i = 0; i < extension_maps.size(); ++i)
    for (std::size_t j = 0; j < extension_maps.size(); ++j)
      if (pointwise_distance(b, extension_maps[i], extension_maps[j]) !=
          pointwise_distance(b, restricted[i], restricted[j])) {
        fail("restriction does not reflect the pointwise order");
        return report;
      }
  return report;
}

std::string hasse_dot(const Preorder& a) {
  const std::size_t n = a.size();
  auto strict = [&](std::size_t x, std::size_t y) { return leq(a, x, y) && !leq(a, y, x); };
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (std::size_t x = 0; x < n; ++x) os << "  \"" << a.name(x) << "\";\n";
  const PosetReflection r = poset_reflection(a);
  for (const auto& cls : r.classes) {
    const auto m = cls.members();
    for (std::size_t i = 1; i < m.size(); ++i)
      os << "  \"" << a.name(m[i - 1]) << "\" -> \"" << a.name(m[i]) << "\" [dir=both];\n";
  }
  // Covering relation between class representatives.
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    for (std::size_t j = 0; j < r.classes.size(); ++j) {
      const std::size_t x = r.classes[i].first();
      const std::size_t y = r.classes[j].first();
      if (!strict(x, y)) continue;
      bool covers = true;
      for (std::size_t k = 0; k < r.classes.size() && covers; ++k) {
        const std::size_t z = r.classes[k].first();
        if (strict(x, z) && strict(z, y)) covers = false;
      }
      if (covers) os << "  \"" << a.name(x) << "\" -> \"" << a.name(y) << "\";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace qcat
