#pragma once

// The theorem suite behind `qcat check`: seeded instances, one tally per
// theorem, and a replayable counterexample document for every failure.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcat/generate.hpp"
#include "qcat/io.hpp"

namespace qcat::suite {

using io::Json;

struct SuiteConfig {
  std::uint64_t seed = 42;
  std::size_t max_objects = 4;
  std::vector<CostValue> grid = gen::default_grid();
  std::size_t spaces = 40;
  std::size_t symmetric_spaces = 20;
  std::size_t preorders = 40;
  std::size_t functors = 40;
  /// Spaces above this size skip checks that complete the completion.
  std::size_t double_completion_limit = 4;
};

struct Tally {
  std::string theorem;
  std::size_t verified = 0;
  std::size_t violations = 0;
};

struct SuiteResult {
  std::vector<Tally> tallies;
  std::vector<Json> counterexamples;

  bool ok() const { return counterexamples.empty(); }
  Json to_json() const;
};

/// Theorem names in reporting order.
const std::vector<std::string>& theorem_names();

SuiteResult run_suite(const SuiteConfig& config);

/// Every theorem that applies to a single space document (cost or bool).
SuiteResult run_on_space(const io::AnySpace& space);

/// Re-checks a counterexample document. Returns the failure detail when the
/// violation is reproduced, nothing when the instance now passes. Throws
/// ParseError on an unknown theorem.
std::optional<std::string> replay(const Json& counterexample);

/// Individual checks; nothing on success, a detail string on failure.
std::optional<std::string> check_space_theorem(const std::string& theorem, const MetricSpace& a);
std::optional<std::string> check_kan_coherence(const MetricMap& g, const ObjectSet& core);
std::optional<std::string> check_preorder_collapse(const Preorder& p);

}  // namespace qcat::suite
