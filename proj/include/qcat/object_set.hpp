#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace qcat {

/// Finite set of object indices, stored as a bitmask.
///
/// Ordering is the numeric order of the mask (bit i has weight 2^i), which
/// is the canonical enumeration order for subsets everywhere in the library.
class ObjectSet {
 public:
  ObjectSet() = default;
  explicit ObjectSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  ObjectSet(std::size_t universe, std::initializer_list<std::size_t> members) : ObjectSet(universe) {
    for (auto i : members) insert(i);
  }

  static ObjectSet full(std::size_t universe) {
    ObjectSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  /// Subset of {0..63} given by a raw mask.
  static ObjectSet from_mask(std::size_t universe, std::uint64_t mask) {
    ObjectSet s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    s.trim();
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(std::size_t i) const {
    return i < universe_ && ((words_[i / 64] >> (i % 64)) & 1U) != 0;
  }
  void insert(std::size_t i) { words_.at(i / 64) |= std::uint64_t{1} << (i % 64); }
  void erase(std::size_t i) { words_.at(i / 64) &= ~(std::uint64_t{1} << (i % 64)); }

  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool is_subset_of(const ObjectSet& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      const std::uint64_t o = k < other.words_.size() ? other.words_[k] : 0;
      if ((words_[k] & ~o) != 0) return false;
    }
    return true;
  }

  ObjectSet& operator|=(const ObjectSet& other) {
    for (std::size_t k = 0; k < words_.size() && k < other.words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }
  ObjectSet& operator&=(const ObjectSet& other) {
    for (std::size_t k = 0; k < words_.size(); ++k)
      words_[k] &= k < other.words_.size() ? other.words_[k] : 0;
    return *this;
  }
  friend ObjectSet operator|(ObjectSet a, const ObjectSet& b) { return a |= b; }
  friend ObjectSet operator&(ObjectSet a, const ObjectSet& b) { return a &= b; }

  /// Members in increasing index order.
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w != 0) {
        out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  /// Lowest member; the set must be non-empty.
  std::size_t first() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return universe_;
  }

  /// Low 64 bits of the mask.
  std::uint64_t mask64() const { return words_.empty() ? 0 : words_[0]; }

  friend bool operator==(const ObjectSet& a, const ObjectSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  friend std::strong_ordering operator<=>(const ObjectSet& a, const ObjectSet& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    for (std::size_t k = a.words_.size(); k-- > 0;) {
      if (auto c = a.words_[k] <=> b.words_[k]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  void trim() {
    if (universe_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace qcat
