#pragma once

// The Boolean-enriched case: preorders, down-sets as left modules,
// directedness, ideal completion and poset reflection.
//
// Orientation: A(x, y) = 1 iff x <= y.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qcat/cardinal.hpp"
#include "qcat/flatness.hpp"
#include "qcat/modules.hpp"
#include "qcat/object_set.hpp"

namespace qcat {

using BoolModule = LeftModule<BoolQuantale>;

inline bool leq(const Preorder& a, std::size_t x, std::size_t y) { return a(x, y).bit; }

class Downset {
 public:
  /// Throws InvalidInputError unless `members` is downward closed.
  Downset(Preorder over, ObjectSet members);

  const Preorder& over() const { return over_; }
  const ObjectSet& members() const { return members_; }

  friend bool operator==(const Downset&, const Downset&) = default;

 private:
  Preorder over_;
  ObjectSet members_;
};

Downset principal_downset(const Preorder& a, std::size_t x);

/// {x : M(x) = 1}. Throws if M is not a module.
Downset downset_of_module(const BoolModule& m);
BoolModule module_of_downset(const Downset& d);

/// Non-empty with an upper bound inside; on a finite carrier every aleph
/// gives the same answer.
bool is_directed(const Downset& d, Cardinal aleph = Cardinal::omega());

/// P1: non-empty down-set; P_aleph: directed; Q: has a greatest element.
bool flatness_bool(const BoolModule& m, const FlatnessClass& cls);

/// All down-sets (the empty one included), in increasing mask order.
std::vector<ObjectSet> all_downsets(const Preorder& a, std::size_t limit = std::size_t{1} << 22);

/// Lowest-index least upper bound of an arbitrary subset, if any.
std::optional<std::size_t> least_upper_bound(const Preorder& a, const ObjectSet& s);
std::optional<std::size_t> lub_of_downset(const Downset& d);

struct IdealCompletion {
  Preorder space;
  std::vector<ObjectSet> carrier;
  std::vector<std::size_t> embedding;
};

/// Directed down-sets ordered by inclusion; a |-> down(a).
IdealCompletion ideal_completion(const Preorder& a, Cardinal aleph = Cardinal::omega());

struct PosetReflection {
  Preorder poset;
  std::vector<ObjectSet> classes;
  std::vector<std::size_t> quotient;
};

/// Quotient by x ~ y iff x <= y and y <= x; classes in order of their
/// lowest member, named after it.
PosetReflection poset_reflection(const Preorder& a);

/// Every directed down-set has a least upper bound.
bool is_directed_complete(const Preorder& a);

/// `map` is a bijection with x <= y iff map(x) <= map(y).
bool isomorphic_via(const Preorder& a, const Preorder& b, const std::vector<std::size_t>& map);

struct DcpoReport {
  bool holds = true;
  std::size_t source_maps = 0;
  std::size_t extension_maps = 0;
  std::vector<std::string> failures;
};

/// Enumerates monotone maps A -> B and directed-lub preserving monotone maps
/// ideal_completion(A) -> B, and checks that restriction along the
/// embedding is an equivalence of preorders.
DcpoReport check_dcpo_universal_property(const Preorder& a, const Preorder& b, std::size_t bound = 4);

/// Graphviz Hasse diagram: covering edges of the strict order, plus
/// undirected edges joining equivalent elements.
std::string hasse_dot(const Preorder& a);

}  // namespace qcat
