#include <gtest/gtest.h>

#include "catfuse/typesys.hpp"
#include "../support/oracles.hpp"

using namespace catfuse;

TEST(Category, NamesRoundTrip) {
  for (auto c : kAllCategories) EXPECT_EQ(parse_category(category_name(c)), c);
  EXPECT_FALSE(parse_category("GROUP"));
}

TEST(SetObject, DuplicatesAndLookup) {
  EXPECT_THROW(SetObject({"a", "a"}), InvalidObject);
  SetObject s{"a", "b"};
  EXPECT_EQ(s.require_index("b"), 1u);
  EXPECT_THROW(s.require_index("z"), InvalidObject);
}

TEST(FiniteMap, FromLabelsNeedsTotalityAndTargetMembership) {
  SetObject a{"x", "y"}, b{"p"};
  EXPECT_EQ(FiniteMap::from_labels(a, b, {{"x", "p"}, {"y", "p"}}).image, (std::vector<std::size_t>{0, 0}));
  EXPECT_THROW(FiniteMap::from_labels(a, b, {{"x", "p"}}), InvalidObject);
  EXPECT_THROW(FiniteMap::from_labels(a, b, {{"x", "p"}, {"y", "q"}}), InvalidObject);
  EXPECT_THROW(FiniteMap::from_labels(a, b, {{"x", "p"}, {"y", "p"}, {"w", "p"}}), InvalidObject);
}

TEST(BoolObject, OnlyZeroAndOne) {
  EXPECT_EQ(BoolObject::from_set(SetObject{"1"}), BoolObject(false, true));
  EXPECT_THROW(BoolObject::from_set(SetObject{"2"}), InvalidObject);
  EXPECT_EQ(BoolObject(true, true).as_set().size(), 2u);
}

TEST(RelObject, ShapeChecks) {
  SetObject s{"a", "b"};
  EXPECT_THROW(RelObject(s, 1, {}), InvalidObject);
  EXPECT_THROW(RelObject(s, 2, {{"a"}}), InvalidObject);
  EXPECT_THROW(RelObject(s, 2, {{"a", "c"}}), InvalidObject);
  EXPECT_THROW(RelObject(s, 2, {{"a", "b"}, {"a", "b"}}), InvalidObject);
  RelObject r(s, 2, {{"a", "b"}});
  EXPECT_TRUE(r.contains({0, 1}));
  EXPECT_FALSE(r.contains({1, 0}));
}

TEST(RelationMap, WitnessNamesOffendingTuple) {
  SetObject s{"a", "b"};
  RelObject r(s, 2, {{"a", "b"}});
  RelObject flipped(s, 2, {{"b", "a"}});
  EXPECT_NO_THROW(check_relation_map(r, flipped, FiniteMap{{1, 0}}));
  try {
    check_relation_map(r, flipped, FiniteMap{{0, 1}});
    FAIL();
  } catch (const ViolationError& e) {
    EXPECT_EQ(e.witness(), "<a,b> -> <a,b>");
  }
  EXPECT_THROW(check_relation_map(r, RelObject(s, 3, {}), FiniteMap{{0, 1}}), ViolationError);
}

TEST(Orders, AxiomsEnforced) {
  SetObject s{"a", "b", "c"};
  EXPECT_THROW(PosetObject(s, {{"a", "a"}, {"b", "b"}}), ViolationError);  // c not reflexive
  EXPECT_THROW(PosetObject(s, {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"a", "b"}, {"b", "a"}}), ViolationError);
  EXPECT_THROW(PosetObject(s, {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"a", "b"}, {"b", "c"}}), ViolationError);
  EXPECT_NO_THROW(PosetObject(s, {{"a", "a"}, {"b", "b"}, {"c", "c"}}));
  EXPECT_THROW(TotalOrderObject(s, {{"a", "a"}, {"b", "b"}, {"c", "c"}}), ViolationError);
  auto chain = TotalOrderObject::chain(s);
  EXPECT_EQ(chain.relation().tuples().size(), 6u);
  EXPECT_TRUE(chain.leq(0, 2));
  EXPECT_FALSE(chain.leq(2, 0));
}

TEST(Interval, ArithmeticMatchesEndpointOracle) {
  const auto vals = oracle::integer_intervals(-2, 2);
  for (const auto& a : vals)
    for (const auto& b : vals) {
      Interval x(Rational(a.lo), Rational(a.hi)), y(Rational(b.lo), Rational(b.hi));
      auto s = interval_add(x, y);
      auto p = interval_mul(x, y);
      auto os = oracle::add(a, b), op = oracle::mul(a, b);
      EXPECT_EQ(s, Interval(Rational(os.lo), Rational(os.hi)));
      EXPECT_EQ(p, Interval(Rational(op.lo), Rational(op.hi)));
      EXPECT_EQ(interval_leq(x, y), oracle::contained(a, b));
    }
  EXPECT_THROW(Interval(Rational(2), Rational(1)), IntervalError);
}

TEST(Interval, SubdistributiveEverywhereOnWindow) {
  // a(b+c) always sits inside ab+ac; equality can fail.
  SemiringObject r(SemiringKind::integer_intervals, Window{-2, 2, 1});
  for (const auto& a : r.enumerate())
    for (const auto& b : r.enumerate())
      for (const auto& c : r.enumerate())
        EXPECT_TRUE(interval_leq(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c))));
}

TEST(Semiring, WindowEnumeration) {
  EXPECT_EQ(SemiringObject(SemiringKind::naturals, Window{0, 3, 1}).enumerate().size(), 4u);
  EXPECT_EQ(SemiringObject(SemiringKind::naturals, Window{-2, 3, 1}).enumerate().size(), 4u);
  // 5 grid points -> 15 intervals.
  EXPECT_EQ(SemiringObject(SemiringKind::integer_intervals, Window{0, 4, 1}).enumerate().size(), 15u);
  // 0, 1/2, 1 -> 6 intervals.
  EXPECT_EQ(SemiringObject(SemiringKind::rational_intervals, Window{0, 1, 2}).enumerate().size(), 6u);
  EXPECT_THROW(SemiringObject(SemiringKind::naturals).enumerate(), WindowRequired);
  EXPECT_THROW(SemiringObject(SemiringKind::naturals, Window{0, 1, 2}), InvalidObject);
  EXPECT_THROW(SemiringObject(SemiringKind::naturals, Window{3, 1, 1}), InvalidObject);
}

TEST(Semiring, NaturalsSatisfyEveryAxiom) {
  for (const auto& r : check_semiring_axioms(SemiringObject(SemiringKind::naturals, Window{0, 4, 1})))
    EXPECT_TRUE(r.holds) << r.axiom << ": " << r.witness;
}

TEST(Semiring, IntervalsFailOnlyDistributivity) {
  for (const auto& r : check_semiring_axioms(SemiringObject(SemiringKind::integer_intervals, Window{-1, 1, 1}))) {
    const bool distributive = r.axiom.find("distributivity") != std::string::npos;
    EXPECT_EQ(r.holds, !distributive) << r.axiom << ": " << r.witness;
  }
}

TEST(SemiringHom, IdentityPassesAndConstantFails) {
  SemiringObject n(SemiringKind::naturals, Window{0, 3, 1});
  EXPECT_NO_THROW(check_semiring_hom(n, n, SemiringHom::identity()));
  SemiringHom zero{"zero", [](const Interval&) { return Interval::point(Rational(0)); }};
  EXPECT_THROW(check_semiring_hom(n, n, zero), ViolationError);
  SemiringHom twice{"twice", [](const Interval& v) { return Interval(v.lo() * 2, v.hi() * 2); }};
  EXPECT_THROW(check_semiring_hom(n, n, twice), ViolationError);
  EXPECT_TRUE(same_on_window(n, compose(SemiringHom::identity(), SemiringHom::identity()), SemiringHom::identity()));
}

TEST(Elements, RelationalAndOrderPoints) {
  SetObject s{"a", "b", "c"};
  RelObject r(s, 3, {{"a", "b", "c"}});
  EXPECT_EQ(relation_elements(r).size(), 3u);
  EXPECT_EQ(order_elements(TotalOrderObject::chain(s).relation()).size(), 3u);
  EXPECT_EQ(set_elements(SetObject{}).size(), 0u);
  // Without reflexivity the one-point order has nowhere to land.
  EXPECT_THROW(order_elements(RelObject(s, 2, {{"a", "b"}})), ViolationError);
}
