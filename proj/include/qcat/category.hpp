#pragma once

// Finite enriched categories: quasi-metric spaces over the cost base and
// preorders over the Boolean base, with enriched functors between them.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcat/errors.hpp"
#include "qcat/quantale.hpp"

namespace qcat {

struct Violation {
  std::string rule;
  std::vector<std::size_t> objects;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
};

/// Finite category enriched in Q. Objects are addressed by index; names are
/// metadata. Instances are immutable and share their storage on copy.
template <Quantale Q>
class EnrichedCategory {
 public:
  using quantale = Q;
  using value_type = value_t<Q>;

  EnrichedCategory() : data_(std::make_shared<const Data>()) {}

  EnrichedCategory(std::vector<std::string> names, const std::vector<std::vector<value_type>>& hom) {
    const std::size_t n = names.size();
    if (hom.size() != n) throw DimensionError("hom matrix has " + std::to_string(hom.size()) + " rows for " +
                                              std::to_string(n) + " objects");
    std::vector<value_type> flat;
    flat.reserve(n * n);
    for (const auto& row : hom) {
      if (row.size() != n) throw DimensionError("hom matrix is not square");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    init(std::move(names), std::move(flat));
  }

  /// Row-major construction: hom(x, y) = flat[x * n + y].
  static EnrichedCategory from_flat(std::vector<std::string> names, std::vector<value_type> flat) {
    if (flat.size() != names.size() * names.size()) throw DimensionError("flat hom has wrong length");
    EnrichedCategory c;
    c.init(std::move(names), std::move(flat));
    return c;
  }

  std::size_t size() const { return data_->names.size(); }
  const std::vector<std::string>& names() const { return data_->names; }
  const std::string& name(std::size_t x) const { return data_->names.at(x); }

  std::size_t index_of(std::string_view name) const {
    for (std::size_t i = 0; i < size(); ++i)
      if (data_->names[i] == name) return i;
    throw UnknownObjectError("unknown object '" + std::string(name) + "'");
  }

  void check_index(std::size_t x) const {
    if (x >= size()) throw UnknownObjectError("object index " + std::to_string(x) + " out of range");
  }

  const value_type& hom(std::size_t x, std::size_t y) const { return data_->hom[x * size() + y]; }
  const value_type& operator()(std::size_t x, std::size_t y) const { return hom(x, y); }

  std::vector<std::vector<value_type>> matrix() const {
    std::vector<std::vector<value_type>> m(size());
    for (std::size_t x = 0; x < size(); ++x)
      for (std::size_t y = 0; y < size(); ++y) m[x].push_back(hom(x, y));
    return m;
  }

  friend bool operator==(const EnrichedCategory& a, const EnrichedCategory& b) {
    return a.data_ == b.data_ || (a.data_->names == b.data_->names && a.data_->hom == b.data_->hom);
  }

 private:
  struct Data {
    std::vector<std::string> names;
    std::vector<value_type> hom;
  };

  void init(std::vector<std::string> names, std::vector<value_type> flat) {
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (names[i] == names[j]) throw InvalidInputError("duplicate object name '" + names[i] + "'");
    data_ = std::make_shared<const Data>(Data{std::move(names), std::move(flat)});
  }

  std::shared_ptr<const Data> data_;
};

using MetricSpace = EnrichedCategory<CostQuantale>;
using Preorder = EnrichedCategory<BoolQuantale>;

/// Checks the identity axiom and every composition triple, in index order.
template <Quantale Q>
ValidationReport validate_category(const EnrichedCategory<Q>& a) {
  ValidationReport report;
  const std::size_t n = a.size();
  for (std::size_t x = 0; x < n; ++x)
    if (!Q::arrow(Q::unit(), a(x, x))) report.violations.push_back({"identity", {x}});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (!Q::arrow(Q::tensor(a(y, z), a(x, y)), a(x, z)))
          report.violations.push_back({"composition", {x, y, z}});
  return report;
}

template <Quantale Q>
void require_valid(const EnrichedCategory<Q>& a) {
  if (!validate_category(a).valid()) throw InvalidInputError("category fails its axioms");
}

template <Quantale Q>
EnrichedCategory<Q> opposite(const EnrichedCategory<Q>& a) {
  const std::size_t n = a.size();
  std::vector<value_t<Q>> flat;
  flat.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) flat.push_back(a(y, x));
  return EnrichedCategory<Q>::from_flat(a.names(), std::move(flat));
}

template <Quantale Q>
bool is_symmetric(const EnrichedCategory<Q>& a) {
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = x + 1; y < a.size(); ++y)
      if (a(x, y) != a(y, x)) return false;
  return true;
}

/// Full subcategory on the given objects, in the given order.
template <Quantale Q>
EnrichedCategory<Q> full_subcategory(const EnrichedCategory<Q>& a, const std::vector<std::size_t>& objects) {
  std::vector<std::string> names;
  std::vector<value_t<Q>> flat;
  for (auto x : objects) {
    a.check_index(x);
    names.push_back(a.name(x));
  }
  for (auto x : objects)
    for (auto y : objects) flat.push_back(a(x, y));
  return EnrichedCategory<Q>::from_flat(std::move(names), std::move(flat));
}

/// An assignment of objects between two categories over the same base.
/// Non-expansiveness is checked by `validate_functor`, not on construction.
template <Quantale Q>
struct EnrichedFunctor {
  EnrichedCategory<Q> source;
  EnrichedCategory<Q> target;
  std::vector<std::size_t> map;

  EnrichedFunctor(EnrichedCategory<Q> src, EnrichedCategory<Q> tgt, std::vector<std::size_t> assignment)
      : source(std::move(src)), target(std::move(tgt)), map(std::move(assignment)) {
    if (map.size() != source.size()) throw DimensionError("functor assignment does not cover the source");
    for (auto y : map) target.check_index(y);
  }

  std::size_t operator()(std::size_t x) const { return map.at(x); }
};

using MetricMap = EnrichedFunctor<CostQuantale>;
using MonotoneMap = EnrichedFunctor<BoolQuantale>;

template <Quantale Q>
EnrichedFunctor<Q> identity_functor(const EnrichedCategory<Q>& a) {
  std::vector<std::size_t> map(a.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  return {a, a, std::move(map)};
}

template <Quantale Q>
EnrichedFunctor<Q> constant_functor(const EnrichedCategory<Q>& a, const EnrichedCategory<Q>& b, std::size_t value) {
  b.check_index(value);
  return {a, b, std::vector<std::size_t>(a.size(), value)};
}

/// Lists every pair (x, y) with A(x,y) not above B(Fx,Fy).
template <Quantale Q>
ValidationReport validate_functor(const EnrichedFunctor<Q>& f) {
  ValidationReport report;
  for (std::size_t x = 0; x < f.source.size(); ++x)
    for (std::size_t y = 0; y < f.source.size(); ++y)
      if (!Q::arrow(f.source(x, y), f.target(f(x), f(y)))) report.violations.push_back({"non-expansive", {x, y}});
  return report;
}

/// g after f.
template <Quantale Q>
EnrichedFunctor<Q> compose_functors(const EnrichedFunctor<Q>& g, const EnrichedFunctor<Q>& f) {
  if (!(f.target == g.source)) throw MismatchError("functors are not composable");
  std::vector<std::size_t> map(f.source.size());
  for (std::size_t x = 0; x < map.size(); ++x) map[x] = g(f(x));
  return {f.source, g.target, std::move(map)};
}

/// Distance in the function space [A,B]: the meet over x of B(f x, g x).
template <Quantale Q>
value_t<Q> function_space_distance(const EnrichedFunctor<Q>& f, const EnrichedFunctor<Q>& g) {
  if (!(f.source == g.source) || !(f.target == g.target)) throw MismatchError("functors have different endpoints");
  if (!validate_functor(f).valid() || !validate_functor(g).valid())
    throw InvalidInputError("function space distance needs non-expansive maps");
  value_t<Q> acc = Q::top();
  for (std::size_t x = 0; x < f.source.size(); ++x) acc = Q::meet(acc, f.target(f(x), g(x)));
  return acc;
}

/// Unchecked variant used by the enumeration routines, on raw assignments.
template <Quantale Q>
value_t<Q> pointwise_distance(const EnrichedCategory<Q>& target, const std::vector<std::size_t>& f,
                              const std::vector<std::size_t>& g) {
  value_t<Q> acc = Q::top();
  for (std::size_t x = 0; x < f.size(); ++x) acc = Q::meet(acc, target(f[x], g[x]));
  return acc;
}

/// Calls `visit` on every non-expansive assignment A -> B, in lexicographic
/// order of the image vector.
template <Quantale Q, class Visit>
void for_each_functor(const EnrichedCategory<Q>& a, const EnrichedCategory<Q>& b, Visit&& visit) {
  const std::size_t n = a.size();
  if (n == 0) {
    visit(std::vector<std::size_t>{});
    return;
  }
  if (b.size() == 0) return;
  std::vector<std::size_t> cur(n, 0);
  std::size_t depth = 0;
  // cur[0..depth) is a consistent partial map.
  auto consistent = [&](std::size_t k) {
    for (std::size_t j = 0; j <= k; ++j) {
      if (!Q::arrow(a(j, k), b(cur[j], cur[k]))) return false;
      if (!Q::arrow(a(k, j), b(cur[k], cur[j]))) return false;
    }
    return true;
  };
  while (true) {
    if (consistent(depth)) {
      if (depth + 1 == n) {
        visit(static_cast<const std::vector<std::size_t>&>(cur));
      } else {
        ++depth;
        cur[depth] = 0;
        continue;
      }
    }
    while (cur[depth] + 1 == b.size()) {
      if (depth == 0) return;
      --depth;
    }
    ++cur[depth];
  }
}

/// Every non-expansive assignment A -> B, in lexicographic order. Throws
/// BoundExceededError past `limit` maps.
template <Quantale Q>
std::vector<std::vector<std::size_t>> enumerate_functors(const EnrichedCategory<Q>& a, const EnrichedCategory<Q>& b,
                                                         std::size_t limit = 1'000'000) {
  std::vector<std::vector<std::size_t>> out;
  for_each_functor(a, b, [&](const std::vector<std::size_t>& m) {
    if (out.size() == limit) throw BoundExceededError("too many functors to enumerate");
    out.push_back(m);
  });
  return out;
}

/// The function space [A,B] as a category over the same base; objects are
/// the non-expansive maps named by their image lists.
template <Quantale Q>
std::pair<EnrichedCategory<Q>, std::vector<std::vector<std::size_t>>> function_space(const EnrichedCategory<Q>& a,
                                                                                      const EnrichedCategory<Q>& b) {
  auto maps = enumerate_functors(a, b);
  std::vector<std::string> names;
  for (const auto& m : maps) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + b.name(m[i]);
    names.push_back(s + "]");
  }
  std::vector<value_t<Q>> flat;
  for (const auto& f : maps)
    for (const auto& g : maps) flat.push_back(pointwise_distance(b, f, g));
  return {EnrichedCategory<Q>::from_flat(std::move(names), std::move(flat)), std::move(maps)};
}

/// Both A(x,y) and A(y,x) at the unit: x and y are isomorphic.
template <Quantale Q>
bool equivalent_objects(const EnrichedCategory<Q>& a, std::size_t x, std::size_t y) {
  return a(x, y) == Q::unit() && a(y, x) == Q::unit();
}

}  // namespace qcat
