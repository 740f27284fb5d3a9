#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "qcat/generate.hpp"
#include "qcat/preorder.hpp"

using namespace qcat;
using namespace qcat::testing;

namespace {

ObjectSet set(std::size_t n, std::initializer_list<std::size_t> xs) {
  ObjectSet s(n);
  for (auto x : xs) s.insert(x);
  return s;
}

BoolModule bmod(const Preorder& p, std::initializer_list<int> bits) {
  std::vector<BoolValue> v;
  for (int b : bits) v.emplace_back(b != 0);
  return {p, v};
}

// C3 with the middle element doubled: 0 <= {1, 1'} <= 2.
Preorder c3_doubled() {
  return preorder({"0", "1", "1'", "2"}, {{1, 1, 1, 1}, {0, 1, 1, 1}, {0, 1, 1, 1}, {0, 0, 0, 1}});
}

// Every downward-closed subset, found without the library.
std::vector<ObjectSet> downsets_by_hand(const Preorder& p) {
  const std::size_t n = p.size();
  std::vector<ObjectSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    bool closed = true;
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x = 0; x < n; ++x)
        if ((mask >> y & 1) && !(mask >> x & 1) && leq(p, x, y)) closed = false;
    if (!closed) continue;
    ObjectSet s(n);
    for (std::size_t x = 0; x < n; ++x)
      if (mask >> x & 1) s.insert(x);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST(Preorder, DownsetsAndModules) {
  EXPECT_EQ(downset_of_module(bmod(c3(), {1, 1, 0})).members(), set(3, {0, 1}));
  for (const auto& s : all_downsets(c3())) {
    const Downset d(c3(), s);
    EXPECT_EQ(downset_of_module(module_of_downset(d)), d);
  }
  const Downset empty(c3(), ObjectSet(3));
  EXPECT_EQ(module_of_downset(empty), bmod(c3(), {0, 0, 0}));
  EXPECT_THROW(Downset(c3(), set(3, {1})), InvalidInputError);
}

TEST(Preorder, AllDownsetsMatchesEnumeration) {
  gen::Rng rng(17);
  for (int i = 0; i < 40; ++i) {
    const auto p = gen::random_preorder(rng, 1 + gen::below(rng, 5));
    auto ours = all_downsets(p);
    auto theirs = downsets_by_hand(p);
    std::sort(ours.begin(), ours.end());
    std::sort(theirs.begin(), theirs.end());
    ASSERT_EQ(ours, theirs);
  }
}

TEST(Preorder, Directedness) {
  for (std::size_t x = 0; x < 3; ++x) EXPECT_TRUE(is_directed(principal_downset(c3(), x)));
  EXPECT_FALSE(is_directed(Downset(discrete2(), set(2, {0, 1}))));
  EXPECT_FALSE(is_directed(Downset(c3(), ObjectSet(3))));
}

TEST(Preorder, FlatnessOverTwo) {
  const auto principal = bmod(c3(), {1, 0, 0});
  EXPECT_TRUE(flatness_bool(principal, FlatnessClass::p1()));
  EXPECT_TRUE(flatness_bool(principal, FlatnessClass::aleph_flat()));
  const auto both = bmod(discrete2(), {1, 1});
  EXPECT_TRUE(flatness_bool(both, FlatnessClass::p1()));
  EXPECT_FALSE(flatness_bool(both, FlatnessClass::aleph_flat()));
  const auto zero = bmod(c3(), {0, 0, 0});
  EXPECT_FALSE(flatness_bool(zero, FlatnessClass::p1()));
  EXPECT_FALSE(flatness_bool(zero, FlatnessClass::aleph_flat()));
}

TEST(Preorder, LeastUpperBounds) {
  EXPECT_EQ(lub_of_downset(principal_downset(c3(), 2)), std::optional<std::size_t>(2));
  EXPECT_EQ(lub_of_downset(Downset(c3(), set(3, {0, 1}))), std::optional<std::size_t>(1));
  EXPECT_EQ(lub_of_downset(Downset(discrete2(), set(2, {0, 1}))), std::nullopt);
  // Lowest index among equivalent bounds.
  EXPECT_EQ(lub_of_downset(principal_downset(two_cycle(), 1)), std::optional<std::size_t>(0));
  EXPECT_EQ(least_upper_bound(c3_doubled(), set(4, {1, 2})), std::optional<std::size_t>(1));
}

TEST(Preorder, IdealCompletionExamples) {
  const auto chain = ideal_completion(c3());
  ASSERT_EQ(chain.space.size(), 3u);
  EXPECT_TRUE(isomorphic_via(c3(), chain.space, chain.embedding));
  EXPECT_EQ(ideal_completion(two_cycle()).space.size(), 1u);
  const auto disc = ideal_completion(discrete2());
  EXPECT_EQ(disc.space.size(), 2u);
  EXPECT_EQ(disc.carrier, (std::vector<ObjectSet>{set(2, {0}), set(2, {1})}));
}

TEST(Preorder, PosetReflectionExamples) {
  const auto r = poset_reflection(c3());
  EXPECT_EQ(r.poset, c3());
  EXPECT_EQ(poset_reflection(two_cycle()).poset.size(), 1u);
  const auto d = poset_reflection(c3_doubled());
  EXPECT_EQ(d.poset.size(), 3u);
  EXPECT_EQ(d.quotient, (std::vector<std::size_t>{0, 1, 1, 2}));
  EXPECT_TRUE(isomorphic_via(c3(), d.poset, {0, 1, 2}));
  EXPECT_EQ(d.poset.name(1), "1");
}

TEST(Preorder, IdealCompletionIsThePosetReflection) {
  gen::Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    const auto p = gen::random_preorder(rng, 1 + gen::below(rng, 5));
    const auto ideal = ideal_completion(p);
    const auto refl = poset_reflection(p);
    ASSERT_EQ(ideal.space.size(), refl.poset.size());
    // Each class maps to the ideal generated by any of its members.
    std::vector<std::size_t> map(refl.poset.size());
    for (std::size_t x = 0; x < p.size(); ++x) map[refl.quotient[x]] = ideal.embedding[x];
    ASSERT_TRUE(isomorphic_via(refl.poset, ideal.space, map));
    ASSERT_TRUE(is_directed_complete(ideal.space));
  }
}

TEST(Preorder, DirectedCompleteness) {
  EXPECT_TRUE(is_directed_complete(c3()));
  EXPECT_TRUE(is_directed_complete(discrete2()));
  EXPECT_TRUE(is_directed_complete(two_cycle()));
}

TEST(Preorder, DcpoUniversalProperty) {
  auto r = check_dcpo_universal_property(c3(), c3());
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.source_maps, r.extension_maps);
  r = check_dcpo_universal_property(two_cycle(), bool_point());
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.source_maps, 1u);
  EXPECT_EQ(r.extension_maps, 1u);
  r = check_dcpo_universal_property(discrete2(), c3());
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.source_maps, 9u);
  EXPECT_THROW(check_dcpo_universal_property(c3_doubled(), c3(), 3), BoundExceededError);
}

TEST(Preorder, HasseDiagram) {
  const auto dot = hasse_dot(c3());
  EXPECT_NE(dot.find("\"0\" -> \"1\""), std::string::npos);
  EXPECT_NE(dot.find("\"1\" -> \"2\""), std::string::npos);
  EXPECT_EQ(dot.find("\"0\" -> \"2\""), std::string::npos);
  const auto cyc = hasse_dot(two_cycle());
  EXPECT_NE(cyc.find("\"x\" -> \"y\" [dir=both]"), std::string::npos);
}
