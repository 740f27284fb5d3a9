#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "qcat/completion.hpp"
#include "qcat/generate.hpp"

using namespace qcat;
using namespace qcat::testing;

namespace {

ObjectSet set(std::size_t n, std::initializer_list<std::size_t> xs) {
  ObjectSet s(n);
  for (auto x : xs) s.insert(x);
  return s;
}

CostValue max_min(const MetricSpace& a, const ObjectSet& s, const ObjectSet& t) {
  CostValue out(0);
  for (auto x : s.members()) {
    CostValue best = CostValue::infinity();
    for (auto y : t.members()) best = std::min(best, a(x, y));
    out = std::max(out, best);
  }
  return out;
}

std::vector<MetricSpace> corpus(std::uint64_t seed, std::size_t count, std::size_t max_objects) {
  gen::Rng rng(seed);
  std::vector<MetricSpace> out{z2(), z2_prime(), s2(), t3(), one_point()};
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(gen::random_space(rng, 1 + gen::below(rng, max_objects), gen::default_grid()));
  return out;
}

}  // namespace

TEST(Completion, KindNames) {
  EXPECT_EQ(CompletionKind::parse("type1"), CompletionKind::type1());
  EXPECT_EQ(CompletionKind::parse("type-omega"), CompletionKind::type_aleph());
  EXPECT_EQ(CompletionKind::parse("type-aleph2").aleph.index, 2u);
  EXPECT_EQ(CompletionKind::parse("cauchy"), CompletionKind::cauchy());
  EXPECT_EQ(CompletionKind::type_aleph().to_string(), "type-omega");
  EXPECT_THROW(CompletionKind::parse("type2"), ParseError);
}

TEST(Completion, Closure) {
  EXPECT_EQ(closure(z2(), set(2, {1})), set(2, {0, 1}));
  EXPECT_EQ(closure(z2(), set(2, {0})), set(2, {0}));
  for (const auto& s : gen::nonempty_subsets(3)) EXPECT_EQ(closure(t3(), s), s);
  EXPECT_THROW(closure(t3(), ObjectSet(3)), InvalidInputError);
  for (const auto& a : corpus(1, 30, 5))
    for (const auto& s : gen::nonempty_subsets(a.size())) {
      const auto c = closure(a, s);
      ASSERT_TRUE(s.is_subset_of(c));
      ASSERT_EQ(closure(a, c), c);
    }
}

TEST(Completion, ClosedSubsetsAreExactlyTheFixedPoints) {
  for (const auto& a : corpus(2, 40, 5)) {
    std::vector<ObjectSet> fixed;
    for (const auto& s : gen::nonempty_subsets(a.size()))
      if (closure(a, s) == s) fixed.push_back(s);
    ASSERT_EQ(closed_subsets(a), fixed);
  }
}

TEST(Completion, TypeOneOfT3) {
  const auto c = type1_completion(t3());
  ASSERT_EQ(c.space.size(), 7u);
  const auto at = [&](std::initializer_list<std::size_t> s) { return c.index_of(set(3, s)); };
  EXPECT_EQ(c.space(at({0}), at({1, 2})), cv("1"));
  EXPECT_EQ(c.space(at({0, 1}), at({2})), cv("3"));
  EXPECT_EQ(c.space.name(at({0, 2})), "{a,c}");
  EXPECT_EQ(c.embedding, (std::vector<std::size_t>{at({0}), at({1}), at({2})}));
  EXPECT_TRUE(validate_category(c.space).valid());
}

TEST(Completion, TypeOneOfZ2) {
  const auto c = type1_completion(z2());
  ASSERT_EQ(c.space.size(), 2u);
  EXPECT_EQ(c.carrier[0], set(2, {0}));
  EXPECT_EQ(c.carrier[1], set(2, {0, 1}));
  EXPECT_EQ(c.space(0, 1), cv("0"));
  EXPECT_EQ(c.space(1, 0), cv("1"));
}

TEST(Completion, TypeOneOfSymmetricSpaceIsNotSymmetric) {
  const auto c = type1_completion(s2());
  ASSERT_EQ(c.space.size(), 3u);
  const auto u = c.index_of(set(2, {0}));
  const auto uv = c.index_of(set(2, {0, 1}));
  EXPECT_EQ(c.space(u, uv), cv("0"));
  EXPECT_EQ(c.space(uv, u), cv("2"));
  EXPECT_FALSE(is_symmetric(c.space));
}

TEST(Completion, TypeOneMatchesQuotientOfAllFilters) {
  // Independent construction: all non-empty subsets under the max-min
  // distance, collapsed by zero distance both ways.
  for (const auto& a : corpus(3, 40, 4)) {
    const auto subsets = gen::nonempty_subsets(a.size());
    std::vector<ObjectSet> reps;
    for (const auto& s : subsets) {
      bool known = false;
      for (const auto& r : reps)
        if (max_min(a, s, r).is_zero() && max_min(a, r, s).is_zero()) known = true;
      if (!known) reps.push_back(s);
    }
    const auto c = type1_completion(a);
    ASSERT_EQ(c.space.size(), reps.size());
    for (const auto& r : reps) {
      const auto i = c.index_of(closure(a, r));
      for (const auto& t : reps) ASSERT_EQ(c.space(i, c.index_of(closure(a, t))), max_min(a, r, t));
    }
  }
}

TEST(Completion, TypeAleph) {
  const auto z = type_aleph_completion(z2());
  EXPECT_EQ(z.carrier, (std::vector<ObjectSet>{set(2, {0}), set(2, {0, 1})}));
  const auto t = type_aleph_completion(t3());
  EXPECT_EQ(t.carrier, (std::vector<ObjectSet>{set(3, {0}), set(3, {1}), set(3, {2})}));
  const auto s = type_aleph_completion(s2());
  EXPECT_EQ(s.space.size(), 2u);
  EXPECT_EQ(s.space.matrix(), cauchy_completion(s2()).space.matrix());
}

TEST(Completion, Cauchy) {
  EXPECT_EQ(cauchy_completion(t3()).space, t3());
  const auto zp = cauchy_completion(z2_prime());
  EXPECT_EQ(zp.space.size(), 1u);
  EXPECT_EQ(zp.embedding, (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(cauchy_completion(z2()).space, z2());
}

TEST(Completion, Completeness) {
  EXPECT_FALSE(is_complete(t3(), CompletionKind::type1()));
  EXPECT_EQ(unrepresented_core(t3(), CompletionKind::type1()), set(3, {0, 1}));
  EXPECT_TRUE(is_complete(type1_completion(t3()).space, CompletionKind::type1()));
  for (const auto& kind : {CompletionKind::type1(), CompletionKind::type_aleph(), CompletionKind::cauchy()})
    EXPECT_TRUE(is_complete(one_point(), kind));
}

TEST(Completion, YonedaIsometryAndCompleteness) {
  for (const auto& a : corpus(4, 60, 4)) {
    const auto c = type1_completion(a);
    for (std::size_t x = 0; x < a.size(); ++x)
      for (std::size_t y = 0; y < a.size(); ++y) ASSERT_EQ(c.space(c.embedding[x], c.embedding[y]), a(x, y));
    ASSERT_TRUE(is_complete(c.space, CompletionKind::type1()));
    ASSERT_TRUE(validate_functor(c.embedding_map()).valid());
  }
}

TEST(Completion, OrderMatchesInclusion) {
  for (const auto& a : corpus(5, 40, 4)) {
    const auto c = type1_completion(a);
    for (std::size_t i = 0; i < c.carrier.size(); ++i)
      for (std::size_t j = 0; j < c.carrier.size(); ++j) {
        ASSERT_EQ(c.space(i, j).is_zero(), c.carrier[i].is_subset_of(c.carrier[j]));
        ASSERT_EQ(c.space(i, j), semi_hausdorff(a, c.carrier[i], c.carrier[j]));
      }
  }
}

TEST(Completion, CarrierPointsAreConicalColimitsOfPoints) {
  for (const auto& a : corpus(6, 40, 4)) {
    const auto c = type1_completion(a);
    for (const auto& s : c.carrier) {
      const auto whole = module_minus(PrincipalFilter(a, s));
      std::vector<CostValue> low(a.size(), CostValue::infinity());
      for (auto x : s.members()) {
        const auto single = module_minus(PrincipalFilter(a, std::vector<std::size_t>{x}));
        for (std::size_t y = 0; y < a.size(); ++y) low[y] = std::min(low[y], single(y));
      }
      ASSERT_EQ(whole.values, low);
    }
  }
}

TEST(Completion, SemiHausdorff) {
  const auto full = set(2, {0, 1});
  EXPECT_EQ(semi_hausdorff(s2(), full, full), CostValue(0));
  EXPECT_EQ(semi_hausdorff(s2(), full, set(2, {0})), cv("2"));
  EXPECT_EQ(semi_hausdorff(t3(), set(3, {0}), set(3, {1, 2})), cv("1"));
  EXPECT_THROW(semi_hausdorff(t3(), ObjectSet(3), set(3, {0})), InvalidInputError);
}

TEST(Completion, ExtendMap) {
  // The embedding itself extends to (a map equivalent to) the identity.
  const auto c = type1_completion(z2());
  const auto ext = extend_map(c.embedding_map(), CompletionKind::type1());
  const auto cc = type1_completion(z2());
  for (std::size_t i = 0; i < cc.space.size(); ++i) EXPECT_TRUE(equivalent_objects(c.space, ext(i), i));
  // Into a point: constant.
  const auto to_point = extend_map(constant_functor(z2(), one_point(), 0), CompletionKind::type1());
  EXPECT_EQ(to_point.map, (std::vector<std::size_t>(2, 0)));
  // Identity of a complete space: S goes to its representative.
  const auto complete_space = c.space;
  const auto id_ext = extend_map(identity_functor(complete_space), CompletionKind::type1());
  const auto big = type1_completion(complete_space);
  for (std::size_t i = 0; i < big.carrier.size(); ++i)
    EXPECT_EQ(std::optional<std::size_t>(id_ext(i)), representative(PrincipalFilter(complete_space, big.carrier[i])));
  EXPECT_THROW(extend_map(identity_functor(t3()), CompletionKind::type1()), IncompleteTargetError);
  EXPECT_THROW(extend_map(MetricMap{z2(), z2(), {1, 0}}, CompletionKind::type1()), InvalidInputError);
}

TEST(Completion, UniversalPropertySmallCases) {
  const auto point = one_point();
  auto r = check_universal_property(point, point, CompletionKind::type1());
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.source_maps, 1u);
  EXPECT_EQ(r.extension_maps, 1u);
  r = check_universal_property(z2(), type1_completion(z2()).space, CompletionKind::type1());
  EXPECT_TRUE(r.holds) << (r.failures.empty() ? "" : r.failures.front());
  EXPECT_THROW(check_universal_property(t3(), type1_completion(t3()).space, CompletionKind::type1()),
               BoundExceededError);
  r = check_universal_property(t3(), type1_completion(t3()).space, CompletionKind::type1(), {3, 7});
  EXPECT_TRUE(r.holds) << (r.failures.empty() ? "" : r.failures.front());
}

TEST(Completion, UniversalPropertyDetectsIncompleteTargets) {
  EXPECT_THROW(check_universal_property(z2(), t3(), CompletionKind::type1()), IncompleteTargetError);
}

TEST(Completion, SymmetricSpaces) {
  gen::Rng rng(9);
  for (int i = 0; i < 60; ++i) {
    const auto a = gen::random_symmetric_space(rng, 1 + gen::below(rng, 4), gen::default_grid());
    const auto report = check_symmetric_completion(a);
    ASSERT_TRUE(report.isomorphic) << report.failure;
    const auto ta = type_aleph_completion(a);
    const auto ca = cauchy_completion(a);
    ASSERT_EQ(ta.carrier, ca.carrier);
    ASSERT_EQ(ta.space.matrix(), ca.space.matrix());
  }
  EXPECT_THROW(check_symmetric_completion(z2()), InvalidInputError);
}

TEST(Completion, DoubleCompletionNeedNotCollapse) {
  // Completing the completion of S2 adds the filter {{u},{v}}: its
  // representative is {u,v} but it is not equivalent to that point.
  const auto c = type1_completion(s2());
  const auto cc = type1_completion(c.space);
  EXPECT_EQ(c.space.size(), 3u);
  EXPECT_EQ(cc.space.size(), 4u);
  EXPECT_FALSE(equivalent_via(c.space, cc.space, cc.embedding));
  // What does hold: the representative map is a reflection onto C.
  const auto r = extend_map(identity_functor(c.space), CompletionKind::type1());
  for (std::size_t p = 0; p < cc.space.size(); ++p)
    for (std::size_t x = 0; x < c.space.size(); ++x) ASSERT_EQ(c.space(r(p), x), cc.space(p, cc.embedding[x]));
}

TEST(Completion, SpecializationDot) {
  const auto dot = specialization_dot(z2());
  EXPECT_NE(dot.find("\"p\" -> \"q\""), std::string::npos);
  EXPECT_EQ(dot.find("\"q\" -> \"p\""), std::string::npos);
}
