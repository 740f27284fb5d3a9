#include "qcat/generate.hpp"

#include <algorithm>

namespace qcat::gen {

std::vector<CostValue> default_grid() {
  return {CostValue(0), CostValue::ratio(1, 3), CostValue::ratio(1, 2), CostValue(1), CostValue(2),
          CostValue::infinity()};
}

std::vector<CostValue> parse_grid(std::string_view text) {
  std::vector<CostValue> grid;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) throw ParseError("empty grid entry");
    grid.push_back(CostValue::parse(item));
    start = end + 1;
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (grid.empty() || !grid.front().is_zero()) throw InvalidInputError("grid must contain 0");
  return grid;
}

std::vector<std::string> object_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

MetricSpace min_plus_closure(std::vector<std::string> names, std::vector<std::vector<CostValue>> hom) {
  const std::size_t n = hom.size();
  for (std::size_t x = 0; x < n; ++x) hom[x][x] = CostValue(0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x) {
      if (hom[x][k].is_infinite()) continue;
      for (std::size_t y = 0; y < n; ++y) {
        const CostValue via = hom[x][k] + hom[k][y];
        if (via < hom[x][y]) hom[x][y] = via;
      }
    }
  return {std::move(names), hom};
}

MetricSpace random_space(Rng& rng, std::size_t n, const std::vector<CostValue>& grid) {
  std::vector<std::vector<CostValue>> hom(n, std::vector<CostValue>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) hom[x][y] = grid[below(rng, grid.size())];
  return min_plus_closure(object_names(n), std::move(hom));
}

MetricSpace random_symmetric_space(Rng& rng, std::size_t n, const std::vector<CostValue>& grid) {
  std::vector<std::vector<CostValue>> hom(n, std::vector<CostValue>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) hom[x][y] = hom[y][x] = grid[below(rng, grid.size())];
  return min_plus_closure(object_names(n), std::move(hom));
}

Preorder random_preorder(Rng& rng, std::size_t n) {
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) rel[x][y] = x == y || below(rng, 3) == 0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (rel[x][k] && rel[k][y]) rel[x][y] = true;
  std::vector<BoolValue> flat;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) flat.emplace_back(rel[x][y]);
  return Preorder::from_flat(object_names(n), std::move(flat));
}

PrincipalFilter random_filter(Rng& rng, const MetricSpace& a) {
  const std::size_t n = a.size();
  ObjectSet core(n);
  while (core.empty())
    for (std::size_t x = 0; x < n; ++x)
      if (below(rng, 2) == 1) core.insert(x);
  return {a, core};
}

MetricMap random_functor(Rng& rng, const MetricSpace& a, std::size_t m, const std::vector<CostValue>& grid) {
  std::vector<std::size_t> assignment;
  for (std::size_t x = 0; x < a.size(); ++x) assignment.push_back(below(rng, m));
  std::vector<std::vector<CostValue>> hom(m, std::vector<CostValue>(m));
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) hom[u][v] = grid[below(rng, grid.size())];
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y) {
      CostValue& h = hom[assignment[x]][assignment[y]];
      h = std::min(h, a(x, y));
    }
  std::vector<std::string> names;
  for (std::size_t u = 0; u < m; ++u) names.push_back("y" + std::to_string(u));
  return {a, min_plus_closure(std::move(names), std::move(hom)), std::move(assignment)};
}

void for_each_grid_space(std::size_t n, const std::vector<CostValue>& grid,
                         const std::function<void(const MetricSpace&)>& visit) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y) cells.emplace_back(x, y);
  std::vector<std::size_t> idx(cells.size(), 0);
  const auto names = object_names(n);
  std::vector<CostValue> flat(n * n, CostValue(0));
  while (true) {
    for (std::size_t c = 0; c < cells.size(); ++c) flat[cells[c].first * n + cells[c].second] = grid[idx[c]];
    bool valid = true;
    for (std::size_t x = 0; x < n && valid; ++x)
      for (std::size_t y = 0; y < n && valid; ++y)
        for (std::size_t z = 0; z < n && valid; ++z)
          if (flat[y * n + z] + flat[x * n + y] < flat[x * n + z]) valid = false;
    if (valid) visit(MetricSpace::from_flat(names, flat));
    std::size_t c = cells.size();
    while (c > 0) {
      --c;
      if (++idx[c] < grid.size()) break;
      idx[c] = 0;
      if (c == 0) return;
    }
    if (cells.empty()) return;
  }
}

void for_each_grid_module(const MetricSpace& a, const std::vector<CostValue>& grid,
                          const std::function<void(const MetricModule&)>& visit) {
  const std::size_t n = a.size();
  std::vector<std::size_t> idx(n, 0);
  std::vector<CostValue> v(n);
  while (true) {
    for (std::size_t x = 0; x < n; ++x) v[x] = grid[idx[x]];
    bool valid = true;
    for (std::size_t x = 0; x < n && valid; ++x)
      for (std::size_t y = 0; y < n && valid; ++y)
        if (v[y] + a(x, y) < v[x]) valid = false;
    if (valid) visit(MetricModule{a, v});
    std::size_t c = n;
    while (c > 0) {
      --c;
      if (++idx[c] < grid.size()) break;
      idx[c] = 0;
      if (c == 0) return;
    }
  }
}

std::vector<ObjectSet> nonempty_subsets(std::size_t n) {
  std::vector<ObjectSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) out.push_back(ObjectSet::from_mask(n, mask));
  return out;
}

}  // namespace qcat::gen
