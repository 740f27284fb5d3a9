#pragma once

// Flatness classification of left modules.
//
// The decision predicates go through the module's zero set: a module is
// P1-flat iff it is rebuilt from its zero set Z by M(x) = join_{y in Z} A(x,y);
// P_aleph-flat iff in addition some y in Z satisfies A(x,y) = unit for all x in
// Z; left adjoint iff the canonical right adjoint candidate is an adjoint.
//
// `lattice_check` evaluates the defining preservation equations
//   (1) join_x M(x) = unit
//   (2) join_x (M(x) (x) meet_i N_i(x)) = meet_i join_x (M(x) (x) N_i(x))
//   (3) join_x (M(x) (x) [v, N(x)])     = [v, join_x (M(x) (x) N(x))]
// against every right module valued in a finite grid. It is independent of
// the zero-set predicates and serves as their cross-check.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcat/cardinal.hpp"
#include "qcat/modules.hpp"
#include "qcat/object_set.hpp"

namespace qcat {

struct FlatnessClass {
  enum class Kind { p1, aleph, q };

  Kind kind = Kind::p1;
  Cardinal aleph = Cardinal::omega();

  static FlatnessClass p1() { return {Kind::p1, Cardinal::omega()}; }
  static FlatnessClass aleph_flat(Cardinal c = Cardinal::omega()) { return {Kind::aleph, c}; }
  static FlatnessClass q() { return {Kind::q, Cardinal::omega()}; }

  std::string to_string() const {
    switch (kind) {
      case Kind::p1:
        return "P1";
      case Kind::aleph:
        return "P_" + aleph.to_string();
      case Kind::q:
        return "Q";
    }
    return "?";
  }
};

/// {x : M(x) = unit}.
template <Quantale Q>
ObjectSet zero_set(const LeftModule<Q>& m) {
  ObjectSet z(m.over.size());
  for (std::size_t x = 0; x < m.values.size(); ++x)
    if (m(x) == Q::unit()) z.insert(x);
  return z;
}

/// x |-> join over y in S of A(x,y); the module of the filter with core S.
template <Quantale Q>
LeftModule<Q> module_of_core(const EnrichedCategory<Q>& a, const ObjectSet& core) {
  const auto members = core.members();
  std::vector<value_t<Q>> v;
  for (std::size_t x = 0; x < a.size(); ++x) {
    value_t<Q> acc = Q::bottom();
    for (auto y : members) acc = Q::join(acc, a(x, y));
    v.push_back(std::move(acc));
  }
  return {a, std::move(v)};
}

template <Quantale Q>
bool is_p1_flat(const LeftModule<Q>& m) {
  const ObjectSet z = zero_set(m);
  if (z.empty()) return false;
  return module_of_core(m.over, z).values == m.values;
}

template <Quantale Q>
bool is_aleph_flat(const LeftModule<Q>& m, Cardinal /*aleph*/ = Cardinal::omega()) {
  if (!is_p1_flat(m)) return false;
  const auto z = zero_set(m).members();
  for (auto y : z) {
    bool witness = true;
    for (auto x : z) {
      if (!(m.over(x, y) == Q::unit())) {
        witness = false;
        break;
      }
    }
    if (witness) return true;
  }
  return false;
}

template <Quantale Q>
bool is_left_adjoint(const LeftModule<Q>& m) {
  return is_adjoint_pair(m, right_adjoint_candidate(m));
}

template <Quantale Q>
bool is_small_projective(const LeftModule<Q>& m) {
  return is_left_adjoint(m);
}

template <Quantale Q>
bool is_flat(const LeftModule<Q>& m, const FlatnessClass& cls) {
  switch (cls.kind) {
    case FlatnessClass::Kind::p1:
      return is_p1_flat(m);
    case FlatnessClass::Kind::aleph:
      return is_aleph_flat(m, cls.aleph);
    case FlatnessClass::Kind::q:
      return is_left_adjoint(m);
  }
  return false;
}

struct FlatnessVerdict {
  bool p1 = false;
  bool aleph = false;
  bool adjoint = false;

  friend bool operator==(const FlatnessVerdict&, const FlatnessVerdict&) = default;
};

template <Quantale Q>
FlatnessVerdict classify(const LeftModule<Q>& m, Cardinal aleph = Cardinal::omega()) {
  return {is_p1_flat(m), is_aleph_flat(m, aleph), is_left_adjoint(m)};
}

// ---------------------------------------------------------------------------
// Lattice-equation check.

struct LatticeCheckOptions {
  /// Largest family size tried in condition (2).
  std::size_t max_family_size = 4;
  /// Most grid vectors examined when enumerating right modules; beyond it a
  /// deterministic sample of this size is used and the report is marked
  /// non-exhaustive.
  std::size_t budget = std::size_t{1} << 20;
  /// Violations kept in the report (all are counted).
  std::size_t max_reported = 64;
};

template <Quantale Q>
struct LatticeViolation {
  int condition = 0;
  std::optional<value_t<Q>> v;
  std::vector<std::vector<value_t<Q>>> right_modules;
  value_t<Q> lhs;
  value_t<Q> rhs;
};

template <Quantale Q>
struct LatticeReport {
  std::vector<value_t<Q>> grid;
  std::size_t right_modules_checked = 0;
  bool exhaustive = true;
  std::size_t violation_count = 0;
  /// Violations per condition, indexed 1..3; counted even when not kept.
  std::array<std::size_t, 4> condition_counts{};
  std::vector<LatticeViolation<Q>> violations;

  bool clean() const { return violation_count == 0; }
  bool violates(int condition) const { return condition_counts.at(static_cast<std::size_t>(condition)) > 0; }
};

namespace detail {

template <Quantale Q>
bool categorical_less(const value_t<Q>& a, const value_t<Q>& b) {
  return Q::arrow(a, b) && !Q::arrow(b, a);
}

/// Sorted, deduplicated in the categorical order.
template <Quantale Q>
void sort_unique(std::vector<value_t<Q>>& values) {
  std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) { return categorical_less<Q>(a, b); });
  values.erase(std::unique(values.begin(), values.end()), values.end());
}

/// Exact cover of `universe` objects by at most `limit` of `masks`.
inline bool find_cover(const std::vector<ObjectSet>& masks, const ObjectSet& covered, std::size_t universe,
                       std::size_t limit, std::vector<std::size_t>& chosen) {
  std::size_t target = universe;
  for (std::size_t x = 0; x < universe; ++x) {
    if (!covered.contains(x)) {
      target = x;
      break;
    }
  }
  if (target == universe) return true;
  if (limit == 0) return false;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (!masks[i].contains(target)) continue;
    chosen.push_back(i);
    if (find_cover(masks, covered | masks[i], universe, limit - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

/// Values occurring in A and M plus unit and bottom, in categorical order.
template <Quantale Q>
std::vector<value_t<Q>> lattice_grid(const LeftModule<Q>& m) {
  std::vector<value_t<Q>> grid{Q::unit(), Q::bottom()};
  for (std::size_t x = 0; x < m.over.size(); ++x) {
    grid.push_back(m(x));
    for (std::size_t y = 0; y < m.over.size(); ++y) grid.push_back(m.over(x, y));
  }
  detail::sort_unique<Q>(grid);
  return grid;
}

/// Every valid right module with values in `grid`, in lexicographic order of
/// grid indices. Past `budget` candidate vectors, a deterministic sample of
/// `budget` vectors is drawn instead; `exhaustive` reports which happened.
template <Quantale Q>
std::vector<RightModule<Q>> enumerate_right_modules(const EnrichedCategory<Q>& a, const std::vector<value_t<Q>>& grid,
                                                    std::size_t budget, bool* exhaustive = nullptr) {
  const std::size_t n = a.size();
  const std::size_t g = grid.size();
  double total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(g);
  const bool full = total <= static_cast<double>(budget);
  if (exhaustive) *exhaustive = full;

  std::vector<RightModule<Q>> out;
  std::vector<std::size_t> idx(n, 0);
  auto emit = [&] {
    std::vector<value_t<Q>> v;
    v.reserve(n);
    for (auto i : idx) v.push_back(grid[i]);
    RightModule<Q> cand{a, std::move(v)};
    if (validate_right_module(cand).valid()) out.push_back(std::move(cand));
  };
  if (full) {
    while (true) {
      emit();
      std::size_t k = n;
      while (k > 0 && idx[k - 1] + 1 == g) idx[--k] = 0;
      if (k == 0) break;
      ++idx[k - 1];
    }
  } else {
    std::uint64_t state = 0x9E3779B97F4A7C15ULL;
    for (std::size_t s = 0; s < budget; ++s) {
      for (auto& i : idx) {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        i = static_cast<std::size_t>((z ^ (z >> 31)) % g);
      }
      emit();
    }
  }
  return out;
}

template <Quantale Q>
LatticeReport<Q> lattice_check(const LeftModule<Q>& m, const FlatnessClass& cls,
                               const LatticeCheckOptions& opts = {}) {
  using V = value_t<Q>;
  LatticeReport<Q> report;
  report.grid = lattice_grid(m);
  const auto& a = m.over;
  const std::size_t n = a.size();

  auto record = [&](LatticeViolation<Q> v) {
    ++report.violation_count;
    ++report.condition_counts[static_cast<std::size_t>(v.condition)];
    if (report.violations.size() < opts.max_reported) report.violations.push_back(std::move(v));
  };

  // (1)
  V total = Q::bottom();
  for (const auto& x : m.values) total = Q::join(total, x);
  if (!(total == Q::unit())) record({1, std::nullopt, {}, total, Q::unit()});

  bool exhaustive = true;
  const auto right = enumerate_right_modules(a, report.grid, opts.budget, &exhaustive);
  report.exhaustive = exhaustive;
  report.right_modules_checked = right.size();

  // s_N(x) = M(x) (x) N(x) and its join over x.
  std::vector<std::vector<V>> sums;
  std::vector<V> composite;
  for (const auto& nmod : right) {
    std::vector<V> s;
    V acc = Q::bottom();
    for (std::size_t x = 0; x < n; ++x) {
      s.push_back(Q::tensor(m(x), nmod(x)));
      acc = Q::join(acc, s.back());
    }
    sums.push_back(std::move(s));
    composite.push_back(std::move(acc));
  }

  // (3)
  for (const auto& v : report.grid) {
    for (std::size_t i = 0; i < right.size(); ++i) {
      V lhs = Q::bottom();
      for (std::size_t x = 0; x < n; ++x) lhs = Q::join(lhs, Q::tensor(m(x), Q::internal_hom(v, right[i](x))));
      V rhs = Q::internal_hom(v, composite[i]);
      if (!(lhs == rhs)) record({3, v, {right[i].values}, lhs, rhs});
    }
  }

  if (cls.kind == FlatnessClass::Kind::p1) return report;

  // (2): the left side sits below the right in the categorical order. A
  // family violates it with right side >= R iff every member has composite
  // >= R and, at every x, some member has s(x) < R. So for each threshold R
  // it is enough to cover the objects with the sets {x : s_N(x) < R}.
  std::vector<V> thresholds = composite;
  detail::sort_unique<Q>(thresholds);
  for (const auto& r : thresholds) {
    std::vector<ObjectSet> masks;
    std::vector<std::size_t> owner;
    for (std::size_t i = 0; i < right.size(); ++i) {
      if (detail::categorical_less<Q>(composite[i], r)) continue;
      ObjectSet mask(n);
      for (std::size_t x = 0; x < n; ++x)
        if (detail::categorical_less<Q>(sums[i][x], r)) mask.insert(x);
      if (mask.empty()) continue;
      if (std::find(masks.begin(), masks.end(), mask) != masks.end()) continue;
      masks.push_back(std::move(mask));
      owner.push_back(i);
    }
    std::vector<std::size_t> chosen;
    if (!detail::find_cover(masks, ObjectSet(n), n, opts.max_family_size, chosen)) continue;
    LatticeViolation<Q> v{2, std::nullopt, {}, Q::bottom(), Q::top()};
    for (auto c : chosen) {
      const std::size_t i = owner[c];
      v.right_modules.push_back(right[i].values);
      v.rhs = Q::meet(v.rhs, composite[i]);
    }
    for (std::size_t x = 0; x < n; ++x) {
      V inner = Q::top();
      for (auto c : chosen) inner = Q::meet(inner, sums[owner[c]][x]);
      v.lhs = Q::join(v.lhs, inner);
    }
    record(std::move(v));
  }
  return report;
}

/// Alias matching the CLI vocabulary: the grid check with a vector budget.
template <Quantale Q>
LatticeReport<Q> sampled_lattice_check(const LeftModule<Q>& m, const FlatnessClass& cls, std::size_t budget) {
  LatticeCheckOptions opts;
  opts.budget = budget;
  return lattice_check(m, cls, opts);
}

}  // namespace qcat
