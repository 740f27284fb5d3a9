#pragma once

// Named spaces used across the test suite.

#include <string>
#include <vector>

#include "qcat/quantale.hpp"
#include "qcat/category.hpp"

namespace qcat::testing {

inline CostValue cv(const std::string& text) { return CostValue::parse(text); }

inline std::vector<CostValue> cvs(std::initializer_list<const char*> texts) {
  std::vector<CostValue> out;
  for (const char* t : texts) out.push_back(CostValue::parse(t));
  return out;
}

inline MetricSpace space(std::vector<std::string> names, std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<CostValue>> hom;
  for (const auto& row : rows) {
    std::vector<CostValue> r;
    for (const char* t : row) r.push_back(CostValue::parse(t));
    hom.push_back(std::move(r));
  }
  return {std::move(names), hom};
}

inline MetricSpace one_point() { return space({"*"}, {{"0"}}); }
inline MetricSpace z2() { return space({"p", "q"}, {{"0", "0"}, {"1", "0"}}); }
inline MetricSpace z2_prime() { return space({"p", "q"}, {{"0", "0"}, {"0", "0"}}); }
inline MetricSpace s2() { return space({"u", "v"}, {{"0", "2"}, {"2", "0"}}); }
inline MetricSpace t3() { return space({"a", "b", "c"}, {{"0", "1", "3"}, {"2", "0", "2"}, {"1", "1", "0"}}); }

inline Preorder preorder(std::vector<std::string> names, std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<BoolValue> flat;
  for (const auto& row : rows)
    for (int v : row) flat.emplace_back(v != 0);
  return Preorder::from_flat(std::move(names), std::move(flat));
}

inline Preorder c3() { return preorder({"0", "1", "2"}, {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}}); }
inline Preorder discrete2() { return preorder({"x", "y"}, {{1, 0}, {0, 1}}); }
inline Preorder two_cycle() { return preorder({"x", "y"}, {{1, 1}, {1, 1}}); }
inline Preorder bool_point() { return preorder({"*"}, {{1}}); }

}  // namespace qcat::testing
