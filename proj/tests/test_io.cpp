#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "qcat/generate.hpp"
#include "qcat/io.hpp"

using namespace qcat;
using namespace qcat::testing;

TEST(Io, ValuesAreStrings) {
  EXPECT_EQ(io::value_to_json(cv("1/3")), io::Json("1/3"));
  EXPECT_EQ(io::value_to_json(CostValue::infinity()), io::Json("inf"));
  EXPECT_EQ(io::value_from_json<CostValue>(io::Json("2/4")), cv("1/2"));
  EXPECT_EQ(io::value_from_json<CostValue>(io::Json(3)), cv("3"));
  EXPECT_THROW(io::value_from_json<CostValue>(io::Json(-1)), ParseError);
  EXPECT_THROW(io::value_from_json<CostValue>(io::Json(0.5)), ParseError);
  EXPECT_EQ(io::value_from_json<BoolValue>(io::Json("1")), BoolValue(true));
  EXPECT_EQ(io::value_from_json<BoolValue>(io::Json(false)), BoolValue(false));
  EXPECT_THROW(io::value_from_json<BoolValue>(io::Json("2")), ParseError);
}

TEST(Io, SpacesRoundTripExactly) {
  gen::Rng rng(31);
  const auto grid = gen::parse_grid("0,1/3,1/2,1,2,inf,12345678901234567890/7");
  for (int i = 0; i < 100; ++i) {
    const auto a = gen::random_space(rng, 1 + gen::below(rng, 5), grid);
    const auto doc = io::space_to_json(a);
    ASSERT_EQ(io::metric_space_from_json(doc), a);
    ASSERT_EQ(io::dump(io::space_to_json(io::metric_space_from_json(io::Json::parse(io::dump(doc))))), io::dump(doc));
  }
  for (const auto& p : {c3(), discrete2(), two_cycle()}) EXPECT_EQ(io::preorder_from_json(io::space_to_json(p)), p);
}

TEST(Io, BaseMismatch) {
  EXPECT_THROW(io::preorder_from_json(io::space_to_json(t3())), MismatchError);
  EXPECT_THROW(io::metric_space_from_json(io::space_to_json(c3())), MismatchError);
  auto doc = io::space_to_json(t3());
  doc["base"] = "lattice";
  EXPECT_THROW(io::space_from_json(doc), ParseError);
}

TEST(Io, MalformedDocuments) {
  EXPECT_THROW(io::metric_space_from_json(io::Json::parse(R"({"base":"cost","objects":["a"]})")), ParseError);
  EXPECT_THROW(io::metric_space_from_json(io::Json::parse(R"({"base":"cost","objects":["a"],"hom":[["x"]]})")),
               ParseError);
  EXPECT_THROW(io::metric_space_from_json(io::Json::parse(R"({"base":"cost","objects":["a","b"],"hom":[["0"]]})")),
               DimensionError);
  EXPECT_THROW(io::load_json("no_such_file.json"), ParseError);
}

TEST(Io, FileReferences) {
  // Tests run from the data directory.
  const auto a = io::metric_space_from_json(io::Json("t3.json"), ".");
  EXPECT_EQ(a, t3());
  const auto m = io::left_module_from_json<CostQuantale>(io::load_json("t3_module.json"), ".");
  EXPECT_EQ(m.values, cvs({"0", "2", "0"}));
  const auto f = io::filter_from_json(io::load_json("z2_filter.json"), ".");
  EXPECT_EQ(f.core().size(), 2u);
  const auto g = io::functor_from_json<CostQuantale>(io::load_json("z2_to_t3.json"), ".");
  EXPECT_EQ(g.map, (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(io::preorder_from_json(io::load_json("c3.json")), c3());
}

TEST(Io, ModulesFiltersFunctorsRoundTrip) {
  const MetricModule m{t3(), cvs({"0", "2", "1"})};
  EXPECT_EQ(io::left_module_from_json<CostQuantale>(io::module_to_json(m)), m);
  const MetricRightModule r{t3(), cvs({"0", "1", "3"})};
  EXPECT_EQ(io::right_module_from_json<CostQuantale>(io::module_to_json(r)), r);
  EXPECT_EQ(io::module_side(io::module_to_json(r)), io::Side::right);
  EXPECT_THROW(io::left_module_from_json<CostQuantale>(io::module_to_json(r)), ParseError);

  const PrincipalFilter f(t3(), std::vector<std::size_t>{0, 2});
  EXPECT_EQ(io::filter_from_json(io::filter_to_json(f)).core(), f.core());

  const MetricMap g = constant_functor(z2(), t3(), 1);
  EXPECT_EQ(io::functor_from_json<CostQuantale>(io::functor_to_json(g)).map, g.map);

  const EventuallyPeriodicSequence s(t3(), {0}, {1, 2});
  const auto back = io::sequence_from_json(io::sequence_to_json(s));
  EXPECT_EQ(back.prefix(), s.prefix());
  EXPECT_EQ(back.cycle(), s.cycle());
}

TEST(Io, ValidationReports) {
  const auto bad = space({"a", "b"}, {{"0", "0"}, {"1", "1"}});
  const auto doc = io::report_to_json(bad, validate_category(bad));
  EXPECT_FALSE(doc["valid"].get<bool>());
  EXPECT_EQ(doc["violations"][0]["objects"][0], "b");
}
