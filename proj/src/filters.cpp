#include "qcat/filters.hpp"

namespace qcat {

namespace {

ObjectSet set_of(std::size_t universe, const std::vector<std::size_t>& members) {
  ObjectSet s(universe);
  for (auto x : members) {
    if (x >= universe) throw UnknownObjectError("object index " + std::to_string(x) + " out of range");
    s.insert(x);
  }
  return s;
}

void require_same_space(const PrincipalFilter& f1, const PrincipalFilter& f2) {
  if (!(f1.space() == f2.space())) throw MismatchError("filters live on different spaces");
}

}  // namespace

PrincipalFilter::PrincipalFilter(MetricSpace space, ObjectSet core) : space_(std::move(space)), core_(std::move(core)) {
  if (core_.universe() != space_.size()) throw DimensionError("filter core does not match the space");
  if (core_.empty()) throw InvalidInputError("filter core must be non-empty");
}

PrincipalFilter::PrincipalFilter(MetricSpace space, const std::vector<std::size_t>& core)
    : PrincipalFilter(space, set_of(space.size(), core)) {}

EventuallyPeriodicSequence::EventuallyPeriodicSequence(MetricSpace space, std::vector<std::size_t> prefix,
                                                       std::vector<std::size_t> cycle)
    : space_(std::move(space)), prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
  if (cycle_.empty()) throw InvalidInputError("sequence cycle must be non-empty");
  for (auto x : prefix_) space_.check_index(x);
  for (auto x : cycle_) space_.check_index(x);
}

std::size_t EventuallyPeriodicSequence::at(std::size_t n) const {
  if (n < prefix_.size()) return prefix_[n];
  return cycle_[(n - prefix_.size()) % cycle_.size()];
}

CostValue lim_plus(const PrincipalFilter& f, std::span<const CostValue> values) {
  detail::check_length(f.space(), values.size());
  CostValue acc;
  for (auto x : f.members()) acc = CostQuantale::meet(acc, values[x]);
  return acc;
}

CostValue lim_minus(const PrincipalFilter& f, std::span<const CostValue> values) {
  detail::check_length(f.space(), values.size());
  CostValue acc = CostValue::infinity();
  for (auto x : f.members()) acc = CostQuantale::join(acc, values[x]);
  return acc;
}

MetricModule module_minus(const PrincipalFilter& f) {
  const auto& a = f.space();
  const auto core = f.members();
  std::vector<CostValue> v;
  for (std::size_t x = 0; x < a.size(); ++x) {
    CostValue acc = CostValue::infinity();
    for (auto y : core) acc = CostQuantale::join(acc, a(x, y));
    v.push_back(acc);
  }
  return {a, std::move(v)};
}

std::vector<CostValue> module_plus(const PrincipalFilter& f) {
  const auto& a = f.space();
  const auto core = f.members();
  std::vector<CostValue> v;
  for (std::size_t x = 0; x < a.size(); ++x) {
    CostValue acc;
    for (auto y : core) acc = CostQuantale::meet(acc, a(x, y));
    v.push_back(acc);
  }
  return v;
}

MetricRightModule right_module_of_filter(const PrincipalFilter& f) {
  const auto& a = f.space();
  const auto core = f.members();
  std::vector<CostValue> v;
  for (std::size_t x = 0; x < a.size(); ++x) {
    CostValue acc;
    for (auto y : core) acc = CostQuantale::meet(acc, a(y, x));
    v.push_back(acc);
  }
  return {a, std::move(v)};
}

std::optional<PrincipalFilter> filter_of_module(const MetricModule& m) {
  ObjectSet zeros(m.over.size());
  for (std::size_t x = 0; x < m.values.size(); ++x)
    if (m(x).is_zero()) zeros.insert(x);
  if (zeros.empty()) return std::nullopt;
  return PrincipalFilter(m.over, std::move(zeros));
}

bool is_cauchy(const PrincipalFilter& f) {
  const auto core = f.members();
  for (auto x : core)
    for (auto y : core)
      if (!f.space()(x, y).is_zero()) return false;
  return true;
}

bool is_type1(const PrincipalFilter& f) {
  const auto core = f.members();
  CostValue outer;
  for (auto x : core) {
    CostValue inner = CostValue::infinity();
    for (auto y : core) inner = CostQuantale::join(inner, f.space()(x, y));
    outer = CostQuantale::meet(outer, inner);
  }
  return outer.is_zero();
}

bool is_type_aleph(const PrincipalFilter& f, Cardinal /*aleph*/) {
  const auto core = f.members();
  for (auto y : core) {
    bool witness = true;
    for (auto x : core) {
      if (!f.space()(x, y).is_zero()) {
        witness = false;
        break;
      }
    }
    if (witness) return true;
  }
  return false;
}

PrincipalFilter neighborhood_filter(const MetricSpace& a, std::size_t x) {
  a.check_index(x);
  ObjectSet core(a.size());
  for (std::size_t y = 0; y < a.size(); ++y)
    if (a(y, x).is_zero()) core.insert(y);
  return {a, std::move(core)};
}

bool converges_to(const PrincipalFilter& f, std::size_t x) {
  return f.core().is_subset_of(neighborhood_filter(f.space(), x).core());
}

std::optional<std::size_t> representative(const PrincipalFilter& f) {
  const auto& a = f.space();
  const auto core = f.members();
  std::vector<CostValue> required;
  for (std::size_t t = 0; t < a.size(); ++t) {
    CostValue acc;
    for (auto x : core) acc = CostQuantale::meet(acc, a(x, t));
    required.push_back(acc);
  }
  for (std::size_t c = 0; c < a.size(); ++c) {
    bool ok = true;
    for (std::size_t t = 0; t < a.size() && ok; ++t) ok = a(c, t) == required[t];
    if (ok) return c;
  }
  return std::nullopt;
}

PrincipalFilter direct_image(const PrincipalFilter& f, const MetricMap& map) {
  if (!(map.source == f.space())) throw MismatchError("map source is not the filter's space");
  ObjectSet image(map.target.size());
  for (auto x : f.members()) image.insert(map(x));
  return {map.target, std::move(image)};
}

bool filter_leq(const PrincipalFilter& f1, const PrincipalFilter& f2) {
  require_same_space(f1, f2);
  return presheaf_hom(module_minus(f1), module_minus(f2)).is_zero();
}

CostValue filter_distance(const PrincipalFilter& f1, const PrincipalFilter& f2) {
  require_same_space(f1, f2);
  const auto& a = f1.space();
  const auto c2 = f2.members();
  CostValue outer;
  for (auto x : f1.members()) {
    CostValue inner = CostValue::infinity();
    for (auto y : c2) inner = CostQuantale::join(inner, a(x, y));
    outer = CostQuantale::meet(outer, inner);
  }
  return outer;
}

PrincipalFilter sequence_filter(const EventuallyPeriodicSequence& s) {
  return {s.space(), s.cycle()};
}

bool is_forward_cauchy(const EventuallyPeriodicSequence& s) {
  for (auto x : s.cycle())
    for (auto y : s.cycle())
      if (!s.space()(x, y).is_zero()) return false;
  return true;
}

}  // namespace qcat
