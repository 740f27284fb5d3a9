#pragma once

// Seeded instance generators. Random spaces sample grid values into a hom
// matrix, zero the diagonal and take the min-plus (shortest path) closure,
// which always yields a valid space. Draws use `rng() % n` so the streams
// are identical across standard libraries.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qcat/filters.hpp"
#include "qcat/preorder.hpp"

namespace qcat::gen {

using Rng = std::mt19937_64;

inline std::size_t below(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

/// {0, 1/3, 1/2, 1, 2, inf}
std::vector<CostValue> default_grid();
/// Comma separated values, e.g. "0,1/2,1,inf". Must contain 0.
std::vector<CostValue> parse_grid(std::string_view text);

/// "x0", "x1", ...
std::vector<std::string> object_names(std::size_t n);

/// Shortest-path closure with a zero diagonal.
MetricSpace min_plus_closure(std::vector<std::string> names, std::vector<std::vector<CostValue>> hom);

MetricSpace random_space(Rng& rng, std::size_t n, const std::vector<CostValue>& grid);
MetricSpace random_symmetric_space(Rng& rng, std::size_t n, const std::vector<CostValue>& grid);
/// Reflexive-transitive closure of a random relation.
Preorder random_preorder(Rng& rng, std::size_t n);
PrincipalFilter random_filter(Rng& rng, const MetricSpace& a);

/// A non-expansive map from `a` into a fresh random space on `m` objects:
/// the assignment is drawn first and the target's distances between images
/// are lowered to those of `a` before closing.
MetricMap random_functor(Rng& rng, const MetricSpace& a, std::size_t m, const std::vector<CostValue>& grid);

/// Every valid space on `n` objects whose off-diagonal entries lie in
/// `grid`, in lexicographic order of the entries.
void for_each_grid_space(std::size_t n, const std::vector<CostValue>& grid,
                         const std::function<void(const MetricSpace&)>& visit);

/// Every valid grid-valued left module over `a`, lexicographically.
void for_each_grid_module(const MetricSpace& a, const std::vector<CostValue>& grid,
                          const std::function<void(const MetricModule&)>& visit);

/// Every non-empty subset of the objects, in mask order.
std::vector<ObjectSet> nonempty_subsets(std::size_t n);

}  // namespace qcat::gen
