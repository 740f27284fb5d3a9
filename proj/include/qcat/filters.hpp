#pragma once

// Filter calculus on finite quasi-metric spaces.
//
// On a finite object set every filter is the up-closure of the intersection
// of its members, so a filter is represented by that non-empty core. Limits
// along a filter become max/min over the core.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qcat/cardinal.hpp"
#include "qcat/modules.hpp"
#include "qcat/object_set.hpp"

namespace qcat {

class PrincipalFilter {
 public:
  PrincipalFilter(MetricSpace space, ObjectSet core);
  PrincipalFilter(MetricSpace space, const std::vector<std::size_t>& core);

  const MetricSpace& space() const { return space_; }
  const ObjectSet& core() const { return core_; }
  std::vector<std::size_t> members() const { return core_.members(); }

  /// Filter membership: S belongs iff it contains the core.
  bool contains(const ObjectSet& s) const { return core_.is_subset_of(s); }

  friend bool operator==(const PrincipalFilter&, const PrincipalFilter&) = default;

 private:
  MetricSpace space_;
  ObjectSet core_;
};

/// prefix followed by cycle repeated forever.
class EventuallyPeriodicSequence {
 public:
  EventuallyPeriodicSequence(MetricSpace space, std::vector<std::size_t> prefix, std::vector<std::size_t> cycle);

  const MetricSpace& space() const { return space_; }
  const std::vector<std::size_t>& prefix() const { return prefix_; }
  const std::vector<std::size_t>& cycle() const { return cycle_; }

  std::size_t at(std::size_t n) const;

 private:
  MetricSpace space_;
  std::vector<std::size_t> prefix_;
  std::vector<std::size_t> cycle_;
};

/// max over the core.
CostValue lim_plus(const PrincipalFilter& f, std::span<const CostValue> values);
/// min over the core.
CostValue lim_minus(const PrincipalFilter& f, std::span<const CostValue> values);

/// M-(F)(x) = min over y in the core of A(x,y). Always a left module.
MetricModule module_minus(const PrincipalFilter& f);
/// M+(F)(x) = max over y in the core of A(x,y). Not a module in general.
std::vector<CostValue> module_plus(const PrincipalFilter& f);
/// M^r(F)(x) = max over y in the core of A(y,x).
MetricRightModule right_module_of_filter(const PrincipalFilter& f);

/// Filter generated by the sublevel sets of M. These stabilize at the zero
/// set Z(M) for small epsilon, so the result is principal on Z(M); absent
/// when M never reaches 0.
std::optional<PrincipalFilter> filter_of_module(const MetricModule& m);

bool is_cauchy(const PrincipalFilter& f);
bool is_type1(const PrincipalFilter& f);

/// Some y in the core with A(x,y) = 0 for every x in the core. This is the
/// finite form of the type-aleph condition; `aleph` does not affect it.
bool is_type_aleph(const PrincipalFilter& f, Cardinal aleph = Cardinal::omega());

/// Core {y : A(y,x) = 0}.
PrincipalFilter neighborhood_filter(const MetricSpace& a, std::size_t x);

bool converges_to(const PrincipalFilter& f, std::size_t x);

/// Lowest-index x0 with A(x0,a) = max over the core of A(-,a) for all a.
std::optional<std::size_t> representative(const PrincipalFilter& f);

PrincipalFilter direct_image(const PrincipalFilter& f, const MetricMap& map);

/// F1 -> F2 in the filter space: hom(M-(F1), M-(F2)) = 0.
bool filter_leq(const PrincipalFilter& f1, const PrincipalFilter& f2);

/// lim+_{x in F1} lim-_{y in F2} A(x,y).
CostValue filter_distance(const PrincipalFilter& f1, const PrincipalFilter& f2);

/// Filter of tails: principal on the set of objects in the cycle.
PrincipalFilter sequence_filter(const EventuallyPeriodicSequence& s);

/// Every ordered pair of cycle values recurs as (x_n, x_m) with n <= m, so
/// the sequence is forward Cauchy iff all those distances vanish.
bool is_forward_cauchy(const EventuallyPeriodicSequence& s);

}  // namespace qcat
