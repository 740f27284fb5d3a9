#pragma once

#include <string>
#include <string_view>

namespace qcat {

/// Tag for an infinite regular cardinal aleph_index (index 0 is omega).
///
/// On finite spaces every such cardinal exceeds the size of any family, so
/// all tags give the same answers; the tag is carried through the API and
/// into documents but never changes a result.
struct Cardinal {
  unsigned index = 0;

  static constexpr Cardinal omega() { return {0}; }

  /// Accepts "omega", "aleph0", "aleph_0", "aleph1", ...
  static Cardinal parse(std::string_view text);
  std::string to_string() const { return index == 0 ? "omega" : "aleph" + std::to_string(index); }

  friend constexpr bool operator==(Cardinal, Cardinal) = default;
};

}  // namespace qcat
