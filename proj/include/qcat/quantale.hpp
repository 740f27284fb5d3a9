#pragma once

// Value algebra for the two enrichment bases: the cost quantale [0,inf]
// (tensor +, reverse numeric order) and the Boolean quantale 2 (tensor and).

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "qcat/errors.hpp"

namespace qcat {

/// Element of [0,inf]: a non-negative rational in lowest terms, or infinity.
///
/// Values whose numerator and denominator fit in 64 bits are kept inline;
/// larger ones spill into a shared immutable GMP rational. The two
/// representations never overlap, so equality is structural.
class CostValue {
 public:
  constexpr CostValue() = default;
  CostValue(std::int64_t n);  // NOLINT(google-explicit-constructor)

  static CostValue ratio(std::int64_t num, std::int64_t den);
  static CostValue from_mpq(const mpq_class& q);
  static CostValue infinity();

  /// Accepts "p/q", "n" and "inf". Non-reduced fractions are normalized.
  static CostValue parse(std::string_view text);

  /// Canonical rendering: "inf", "n" for integers, otherwise reduced "p/q".
  std::string to_string() const;

  bool is_infinite() const { return rep_ == Rep::inf; }
  bool is_finite() const { return rep_ != Rep::inf; }
  bool is_zero() const { return rep_ == Rep::small && num_ == 0; }

  /// Exact value; throws for infinity.
  mpq_class to_mpq() const;

  friend CostValue operator+(const CostValue& a, const CostValue& b);
  CostValue& operator+=(const CostValue& b) { return *this = *this + b; }

  /// max(b - a, 0), with [inf, b] = 0 and [a, inf] = inf for finite a.
  friend CostValue truncated_difference(const CostValue& a, const CostValue& b);

  friend std::strong_ordering operator<=>(const CostValue& a, const CostValue& b);
  friend bool operator==(const CostValue& a, const CostValue& b);

 private:
  enum class Rep : std::uint8_t { small, big, inf };

  static CostValue normalize_big(mpq_class q);

  Rep rep_ = Rep::small;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const CostValue& v);

/// Element of 2 = {0, 1}.
struct BoolValue {
  bool bit = false;

  constexpr BoolValue() = default;
  constexpr BoolValue(bool b) : bit(b) {}  // NOLINT(google-explicit-constructor)

  static BoolValue parse(std::string_view text);
  std::string to_string() const { return bit ? "1" : "0"; }

  friend constexpr auto operator<=>(BoolValue, BoolValue) = default;
};

std::ostream& operator<<(std::ostream& os, BoolValue v);

enum class BaseKind { cost, boolean };

std::string_view base_name(BaseKind kind);

/// Static operation bundle for a commutative, totally ordered quantale.
///
/// `arrow(a, b)` is the categorical order a -> b. `meet`/`join` are taken in
/// that order, so for the cost base meet is numeric max and join numeric min.
/// `bottom()` is initial (an arrow to everything), `top()` terminal.
template <class Q>
concept Quantale = requires(const typename Q::value_type& a, const typename Q::value_type& b) {
  typename Q::value_type;
  { Q::kind } -> std::convertible_to<BaseKind>;
  { Q::tensor(a, b) } -> std::same_as<typename Q::value_type>;
  { Q::unit() } -> std::same_as<typename Q::value_type>;
  { Q::internal_hom(a, b) } -> std::same_as<typename Q::value_type>;
  { Q::arrow(a, b) } -> std::same_as<bool>;
  { Q::meet(a, b) } -> std::same_as<typename Q::value_type>;
  { Q::join(a, b) } -> std::same_as<typename Q::value_type>;
  { Q::bottom() } -> std::same_as<typename Q::value_type>;
  { Q::top() } -> std::same_as<typename Q::value_type>;
};

struct CostQuantale {
  using value_type = CostValue;
  static constexpr BaseKind kind = BaseKind::cost;

  static CostValue tensor(const CostValue& a, const CostValue& b) { return a + b; }
  static CostValue unit() { return CostValue{}; }
  static CostValue internal_hom(const CostValue& a, const CostValue& b) {
    return truncated_difference(a, b);
  }
  static bool arrow(const CostValue& a, const CostValue& b) { return a >= b; }
  static CostValue meet(const CostValue& a, const CostValue& b) { return a < b ? b : a; }
  static CostValue join(const CostValue& a, const CostValue& b) { return b < a ? b : a; }
  static CostValue bottom() { return CostValue::infinity(); }
  static CostValue top() { return CostValue{}; }
};

struct BoolQuantale {
  using value_type = BoolValue;
  static constexpr BaseKind kind = BaseKind::boolean;

  static BoolValue tensor(BoolValue a, BoolValue b) { return a.bit && b.bit; }
  static BoolValue unit() { return true; }
  static BoolValue internal_hom(BoolValue a, BoolValue b) { return !a.bit || b.bit; }
  static bool arrow(BoolValue a, BoolValue b) { return !a.bit || b.bit; }
  static BoolValue meet(BoolValue a, BoolValue b) { return a.bit && b.bit; }
  static BoolValue join(BoolValue a, BoolValue b) { return a.bit || b.bit; }
  static BoolValue bottom() { return false; }
  static BoolValue top() { return true; }
};

static_assert(Quantale<CostQuantale>);
static_assert(Quantale<BoolQuantale>);

template <Quantale Q>
using value_t = typename Q::value_type;

/// Meet of a non-empty family in the categorical order.
template <Quantale Q>
value_t<Q> meet_all(std::span<const value_t<Q>> values) {
  if (values.empty()) throw InvalidInputError("meet of an empty family");
  value_t<Q> acc = values.front();
  for (const auto& v : values.subspan(1)) acc = Q::meet(acc, v);
  return acc;
}

/// Join of a non-empty family in the categorical order.
template <Quantale Q>
value_t<Q> join_all(std::span<const value_t<Q>> values) {
  if (values.empty()) throw InvalidInputError("join of an empty family");
  value_t<Q> acc = values.front();
  for (const auto& v : values.subspan(1)) acc = Q::join(acc, v);
  return acc;
}

/// Total comparison in the categorical order (bottom < top).
template <Quantale Q>
std::strong_ordering categorical_compare(const value_t<Q>& a, const value_t<Q>& b) {
  const bool ab = Q::arrow(a, b);
  const bool ba = Q::arrow(b, a);
  if (ab && ba) return std::strong_ordering::equal;
  return ab ? std::strong_ordering::less : std::strong_ordering::greater;
}

/// Runtime view of a quantale's operations, for callers that pick the base
/// at run time (the CLI and the Python bindings).
template <class V>
struct QuantaleOps {
  BaseKind kind;
  std::function<V(const V&, const V&)> tensor;
  V unit;
  std::function<V(const V&, const V&)> internal_hom;
  std::function<V(std::span<const V>)> meet;
  std::function<V(std::span<const V>)> join;
  V bottom;
  V top;
  std::function<std::strong_ordering(const V&, const V&)> compare;
};

template <Quantale Q>
QuantaleOps<value_t<Q>> make_ops() {
  return {Q::kind,
          &Q::tensor,
          Q::unit(),
          &Q::internal_hom,
          &meet_all<Q>,
          &join_all<Q>,
          Q::bottom(),
          Q::top(),
          &categorical_compare<Q>};
}

inline QuantaleOps<CostValue> cost_ops() { return make_ops<CostQuantale>(); }
inline QuantaleOps<BoolValue> bool_ops() { return make_ops<BoolQuantale>(); }

/// Text codec shared by every document format.
template <class V>
V parse_value(std::string_view text);
template <>
inline CostValue parse_value<CostValue>(std::string_view text) { return CostValue::parse(text); }
template <>
inline BoolValue parse_value<BoolValue>(std::string_view text) { return BoolValue::parse(text); }

}  // namespace qcat
