#pragma once

// Completions of a finite quasi-metric space.
//
// Points of the type-1 completion are filters on A, represented by their
// zero-distance-closed cores; the distance between two of them is
//   hom(S, T) = max_{x in S} min_{y in T} A(x, y).
// The type-aleph completion is the full subspace on cores with a zero-distance
// upper bound inside the core; the Cauchy completion of a finite space is its
// quotient by two-sided zero distance.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qcat/cardinal.hpp"
#include "qcat/filters.hpp"
#include "qcat/object_set.hpp"

namespace qcat {

struct CompletionKind {
  enum class Tag { type1, type_aleph, cauchy };

  Tag tag = Tag::type1;
  Cardinal aleph = Cardinal::omega();

  static CompletionKind type1() { return {Tag::type1, Cardinal::omega()}; }
  static CompletionKind type_aleph(Cardinal c = Cardinal::omega()) { return {Tag::type_aleph, c}; }
  static CompletionKind cauchy() { return {Tag::cauchy, Cardinal::omega()}; }

  /// "type1", "type-omega", "type-aleph1", "cauchy".
  static CompletionKind parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const CompletionKind&, const CompletionKind&) = default;
};

struct CompletionSpace {
  CompletionKind kind;
  MetricSpace base;
  /// Canonical core of each point, in increasing mask order.
  std::vector<ObjectSet> carrier;
  MetricSpace space;
  /// Carrier index of the image of each base object.
  std::vector<std::size_t> embedding;

  MetricMap embedding_map() const { return {base, space, embedding}; }
  std::size_t index_of(const ObjectSet& core) const;
};

/// {x : min_{y in S} A(x,y) = 0}. Throws on an empty S.
ObjectSet closure(const MetricSpace& a, const ObjectSet& s);

/// All non-empty closed subsets in increasing mask order. These are the
/// down-sets of the zero-distance preorder. Throws BoundExceededError once
/// more than `limit` have been found.
std::vector<ObjectSet> closed_subsets(const MetricSpace& a, std::size_t limit = std::size_t{1} << 22);

/// Whether the filter with this core belongs to the completion of `kind`:
/// always for type1, a zero-distance witness for type-aleph, pairwise zero
/// distance for Cauchy.
bool core_has_kind(const MetricSpace& a, const ObjectSet& core, const CompletionKind& kind);

/// max_{x in S} min_{y in T} A(x,y). Throws on empty input.
CostValue semi_hausdorff(const MetricSpace& a, const ObjectSet& s, const ObjectSet& t);

CompletionSpace type1_completion(const MetricSpace& a);
CompletionSpace type_aleph_completion(const MetricSpace& a, Cardinal aleph = Cardinal::omega());
CompletionSpace cauchy_completion(const MetricSpace& a);
CompletionSpace complete(const MetricSpace& a, const CompletionKind& kind);

/// A closed core of the given kind without a representative, if any.
std::optional<ObjectSet> unrepresented_core(const MetricSpace& a, const CompletionKind& kind);
bool is_complete(const MetricSpace& a, const CompletionKind& kind);

/// Extension of f : A -> B along the embedding of A into its completion:
/// a point with core S goes to the representative of f(S). Throws
/// IncompleteTargetError unless B is complete for `kind`.
MetricMap extend_map(const MetricMap& f, const CompletionKind& kind);

/// `embedding` is distance preserving and every point of `big` is at
/// distance 0 both ways from some image point.
bool equivalent_via(const MetricSpace& small, const MetricSpace& big, const std::vector<std::size_t>& embedding);

struct UniversalPropertyBounds {
  std::size_t max_source = 3;
  std::size_t max_target = 3;
};

struct UniversalPropertyReport {
  bool holds = true;
  std::size_t source_maps = 0;
  std::size_t extension_maps = 0;
  std::vector<std::string> failures;
};

/// Enumerates the non-expansive maps A -> B and the representative
/// preserving non-expansive maps completion(A) -> B, then checks that
/// restriction along the embedding is essentially surjective and preserves
/// distances both ways.
UniversalPropertyReport check_universal_property(const MetricSpace& a, const MetricSpace& b,
                                                 const CompletionKind& kind, const UniversalPropertyBounds& bounds = {});

struct SymmetricCompletionReport {
  bool isomorphic = true;
  std::string failure;
};

/// For symmetric A: the type-1 completion against the non-empty closed
/// subsets of the Cauchy completion under the semi-Hausdorff distance,
/// matched through the quotient map.
SymmetricCompletionReport check_symmetric_completion(const MetricSpace& a);

/// Graphviz digraph with an edge x -> y whenever hom(x, y) = 0, x != y.
std::string specialization_dot(const MetricSpace& a);

}  // namespace qcat
