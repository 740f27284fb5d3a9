#pragma once

// Left and right modules (presheaves and copresheaves) on a finite enriched
// category, their composite, presheaf homs, adjoint pairs, left Kan
// extension along a functor, and weighted (co)limits found by search.

#include <cstddef>
#include <optional>
#include <vector>

#include "qcat/category.hpp"

namespace qcat {

namespace detail {

template <Quantale Q>
void check_length(const EnrichedCategory<Q>& over, std::size_t n) {
  if (n != over.size())
    throw DimensionError("module has " + std::to_string(n) + " values over " + std::to_string(over.size()) +
                         " objects");
}

template <class A, class B>
void require_same_category(const A& a, const B& b) {
  if (!(a == b)) throw MismatchError("modules live over different categories");
}

}  // namespace detail

/// Module I -|-> A: M(y) (x) A(x,y) -> M(x) for all x, y.
template <Quantale Q>
struct LeftModule {
  EnrichedCategory<Q> over;
  std::vector<value_t<Q>> values;

  LeftModule(EnrichedCategory<Q> category, std::vector<value_t<Q>> vals)
      : over(std::move(category)), values(std::move(vals)) {
    detail::check_length(over, values.size());
  }

  const value_t<Q>& operator()(std::size_t x) const { return values.at(x); }
  friend bool operator==(const LeftModule&, const LeftModule&) = default;
};

/// Module A -|-> I: A(x,y) (x) N(x) -> N(y) for all x, y.
template <Quantale Q>
struct RightModule {
  EnrichedCategory<Q> over;
  std::vector<value_t<Q>> values;

  RightModule(EnrichedCategory<Q> category, std::vector<value_t<Q>> vals)
      : over(std::move(category)), values(std::move(vals)) {
    detail::check_length(over, values.size());
  }

  const value_t<Q>& operator()(std::size_t x) const { return values.at(x); }
  friend bool operator==(const RightModule&, const RightModule&) = default;
};

using MetricModule = LeftModule<CostQuantale>;
using MetricRightModule = RightModule<CostQuantale>;

template <Quantale Q>
ValidationReport validate_left_module(const LeftModule<Q>& m) {
  ValidationReport report;
  const auto& a = m.over;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (!Q::arrow(Q::tensor(m(y), a(x, y)), m(x))) report.violations.push_back({"left-module", {x, y}});
  return report;
}

template <Quantale Q>
ValidationReport validate_right_module(const RightModule<Q>& n) {
  ValidationReport report;
  const auto& a = n.over;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (!Q::arrow(Q::tensor(a(x, y), n(x)), n(y))) report.violations.push_back({"right-module", {x, y}});
  return report;
}

/// A(-, a).
template <Quantale Q>
LeftModule<Q> representable_left(const EnrichedCategory<Q>& a, std::size_t object) {
  a.check_index(object);
  std::vector<value_t<Q>> v;
  for (std::size_t x = 0; x < a.size(); ++x) v.push_back(a(x, object));
  return {a, std::move(v)};
}

/// A(a, -).
template <Quantale Q>
RightModule<Q> representable_right(const EnrichedCategory<Q>& a, std::size_t object) {
  a.check_index(object);
  std::vector<value_t<Q>> v;
  for (std::size_t x = 0; x < a.size(); ++x) v.push_back(a(object, x));
  return {a, std::move(v)};
}

/// N * M: join over x of M(x) (x) N(x). For the cost base, min of sums.
template <Quantale Q>
value_t<Q> compose(const RightModule<Q>& n, const LeftModule<Q>& m) {
  detail::require_same_category(n.over, m.over);
  value_t<Q> acc = Q::bottom();
  for (std::size_t x = 0; x < m.values.size(); ++x) acc = Q::join(acc, Q::tensor(m(x), n(x)));
  return acc;
}

/// Hom in the presheaf category: meet over x of [M1(x), M2(x)].
template <Quantale Q>
value_t<Q> presheaf_hom(const LeftModule<Q>& m1, const LeftModule<Q>& m2) {
  detail::require_same_category(m1.over, m2.over);
  value_t<Q> acc = Q::top();
  for (std::size_t x = 0; x < m1.values.size(); ++x) acc = Q::meet(acc, Q::internal_hom(m1(x), m2(x)));
  return acc;
}

/// Hom in the copresheaf category: meet over x of [N1(x), N2(x)].
template <Quantale Q>
value_t<Q> copresheaf_hom(const RightModule<Q>& n1, const RightModule<Q>& n2) {
  detail::require_same_category(n1.over, n2.over);
  value_t<Q> acc = Q::top();
  for (std::size_t x = 0; x < n1.values.size(); ++x) acc = Q::meet(acc, Q::internal_hom(n1(x), n2(x)));
  return acc;
}

/// M~(x) = meet over y of [M(y), A(y,x)]. When M has a right adjoint at all,
/// it is this one.
template <Quantale Q>
RightModule<Q> right_adjoint_candidate(const LeftModule<Q>& m) {
  const auto& a = m.over;
  std::vector<value_t<Q>> v;
  for (std::size_t x = 0; x < a.size(); ++x) {
    value_t<Q> acc = Q::top();
    for (std::size_t y = 0; y < a.size(); ++y) acc = Q::meet(acc, Q::internal_hom(m(y), a(y, x)));
    v.push_back(std::move(acc));
  }
  return {a, std::move(v)};
}

/// Unit condition I -> N * M and counit condition N(y) (x) M(x) -> A(x,y).
template <Quantale Q>
bool is_adjoint_pair(const LeftModule<Q>& m, const RightModule<Q>& n) {
  if (!Q::arrow(Q::unit(), compose(n, m))) return false;
  const auto& a = m.over;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (!Q::arrow(Q::tensor(n(y), m(x)), a(x, y))) return false;
  return true;
}

/// Pointwise left Kan extension of M along G: Lan(b) = join over x of
/// M(x) (x) B(b, Gx).
template <Quantale Q>
LeftModule<Q> left_kan_extension(const LeftModule<Q>& m, const EnrichedFunctor<Q>& g) {
  if (!(m.over == g.source)) throw MismatchError("module and functor have different source categories");
  const auto& b = g.target;
  std::vector<value_t<Q>> v;
  for (std::size_t y = 0; y < b.size(); ++y) {
    value_t<Q> acc = Q::bottom();
    for (std::size_t x = 0; x < m.values.size(); ++x) acc = Q::join(acc, Q::tensor(m(x), b(y, g(x))));
    v.push_back(std::move(acc));
  }
  return {b, std::move(v)};
}

/// Lowest-index object c with A(c, a) = [K^op, V](M, A(G-, a)) for every a,
/// i.e. a representative of the colimit M * G; nullopt when none exists.
template <Quantale Q>
std::optional<std::size_t> weighted_colimit(const LeftModule<Q>& m, const EnrichedFunctor<Q>& g) {
  if (!(m.over == g.source)) throw MismatchError("weight and diagram have different domains");
  const auto& a = g.target;
  std::vector<value_t<Q>> required;
  for (std::size_t t = 0; t < a.size(); ++t) {
    value_t<Q> acc = Q::top();
    for (std::size_t k = 0; k < m.values.size(); ++k) acc = Q::meet(acc, Q::internal_hom(m(k), a(g(k), t)));
    required.push_back(std::move(acc));
  }
  for (std::size_t c = 0; c < a.size(); ++c) {
    bool ok = true;
    for (std::size_t t = 0; t < a.size() && ok; ++t) ok = a(c, t) == required[t];
    if (ok) return c;
  }
  return std::nullopt;
}

/// Lowest-index object c with A(a, c) = [K, V](N, A(a, G-)) for every a.
template <Quantale Q>
std::optional<std::size_t> weighted_limit(const RightModule<Q>& n, const EnrichedFunctor<Q>& g) {
  if (!(n.over == g.source)) throw MismatchError("weight and diagram have different domains");
  const auto& a = g.target;
  std::vector<value_t<Q>> required;
  for (std::size_t s = 0; s < a.size(); ++s) {
    value_t<Q> acc = Q::top();
    for (std::size_t k = 0; k < n.values.size(); ++k) acc = Q::meet(acc, Q::internal_hom(n(k), a(s, g(k))));
    required.push_back(std::move(acc));
  }
  for (std::size_t c = 0; c < a.size(); ++c) {
    bool ok = true;
    for (std::size_t s = 0; s < a.size() && ok; ++s) ok = a(s, c) == required[s];
    if (ok) return c;
  }
  return std::nullopt;
}

/// The one-object category with hom = unit.
template <Quantale Q>
EnrichedCategory<Q> unit_category(std::string name = "*") {
  return EnrichedCategory<Q>::from_flat({std::move(name)}, {Q::unit()});
}

/// Cotensor v |> b: the limit of the weight (v) on the unit category.
template <Quantale Q>
std::optional<std::size_t> cotensor(const EnrichedCategory<Q>& a, const value_t<Q>& v, std::size_t b) {
  const auto point = unit_category<Q>();
  return weighted_limit(RightModule<Q>{point, {v}}, EnrichedFunctor<Q>{point, a, {b}});
}

}  // namespace qcat
