#include <gtest/gtest.h>

#include "catfuse/typed.hpp"
#include "../support/universe.hpp"

using namespace catfuse;
namespace ts = testsupport;

TEST(TypedObject, PayloadMustMatchCategory) {
  EXPECT_THROW(TypedObject(Category::set, BoolObject(true, true)), InvalidObject);
  EXPECT_THROW(TypedObject::bi_rel(RelObject(SetObject{"a"}, 3, {})), InvalidObject);
  EXPECT_THROW(TypedObject::scalar(SemiringObject(SemiringKind::integer_intervals)), InvalidObject);
  EXPECT_THROW(TypedObject::set(SetObject{"a"}).as<RelObject>(), InvalidObject);
}

TEST(CheckMorphism, RejectsWhatTheCategoryForbids) {
  auto s2 = TypedObject::set(SetObject{"a", "b"});
  EXPECT_THROW(check_morphism(Category::set, FiniteMap{{0}}, s2, s2), ViolationError);
  EXPECT_THROW(check_morphism(Category::boolean, FiniteMap{{0, 1}}, s2, s2), Error);
  auto bin = TypedObject::bi_rel(RelObject(SetObject{"a", "b"}, 2, {{"a", "b"}}));
  EXPECT_THROW(check_morphism(Category::bi_rel, FiniteMap{{1, 0}}, bin, bin), ViolationError);
  EXPECT_NO_THROW(check_morphism(Category::bi_rel, FiniteMap{{0, 1}}, bin, bin));
  auto chain = TypedObject::ordinal(TotalOrderObject::chain(SetObject{"a", "b"}));
  EXPECT_THROW(check_morphism(Category::ordinal, FiniteMap{{1, 0}}, chain, chain), ViolationError);
  auto p = TypedObject::prob(ts::mspace(2));
  Matrix<Rational> half(2, 2);
  half(0, 0) = half(1, 1) = Rational(1, 2);
  EXPECT_THROW(check_morphism(Category::prob, Kernel<Rational>(ts::mspace(2), ts::mspace(2), half), p, p),
               ViolationError);
  auto m = TypedObject::meas(ts::mspace(2));
  EXPECT_NO_THROW(check_morphism(Category::meas, Kernel<Rational>(ts::mspace(2), ts::mspace(2), half), m, m));
}

TEST(CheckMorphism, KRelRequiresEqualArity) {
  auto r2 = TypedObject::k_rel(RelObject(SetObject{"a"}, 2, {}));
  auto r3 = TypedObject::k_rel(RelObject(SetObject{"a"}, 3, {}));
  EXPECT_THROW(check_morphism(Category::k_rel, FiniteMap{{0}}, r2, r3), ViolationError);
  auto n2 = TypedObject::n_rel(RelObject(SetObject{"a"}, 2, {}));
  auto n3 = TypedObject::n_rel(RelObject(SetObject{"a"}, 3, {}));
  EXPECT_THROW(check_morphism(Category::n_rel, FiniteMap{{0}}, n2, n3), ViolationError);
}

class CategoryLaws : public ::testing::TestWithParam<Category> {};

// Identity is neutral on random composable pairs; associativity on random
// triples drawn from the exhaustive family.
TEST_P(CategoryLaws, IdentityAndAssociativity) {
  const Category c = GetParam();
  ts::Rng rng(31 + static_cast<int>(c));
  for (int trial = 0; trial < 60; ++trial) {
    auto [f, g] = ts::random_composable(c, rng, 4);
    EXPECT_TRUE(same_morphism(compose_morphism(f, identity_morphism(f.source())), f));
    EXPECT_TRUE(same_morphism(compose_morphism(identity_morphism(f.target()), f), f));
    EXPECT_TRUE(same_morphism(compose_morphism(identity_morphism(g.target()), compose_morphism(g, f)),
                              compose_morphism(g, f)));
  }
  const auto mors = ts::small_universe(c).morphisms;
  ASSERT_FALSE(mors.empty());
  auto after = [&](const TypedMorphism& f) {
    std::vector<const TypedMorphism*> out;
    for (const auto& m : mors)
      if (m.source() == f.target()) out.push_back(&m);
    return out;
  };
  std::size_t triples = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto& f = mors[ts::uniform(rng, 0, mors.size() - 1)];
    auto gs = after(f);
    if (gs.empty()) continue;
    const auto& g = *gs[ts::uniform(rng, 0, gs.size() - 1)];
    auto hs = after(g);
    if (hs.empty()) continue;
    const auto& h = *hs[ts::uniform(rng, 0, hs.size() - 1)];
    ++triples;
    EXPECT_TRUE(same_morphism(compose_morphism(h, compose_morphism(g, f)), compose_morphism(compose_morphism(h, g), f)));
  }
  EXPECT_GT(triples, 0u);
}

INSTANTIATE_TEST_SUITE_P(All, CategoryLaws, ::testing::ValuesIn(kAllCategories),
                         [](const auto& info) {
                           std::string n(category_name(info.param));
                           for (auto& ch : n)
                             if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                           return n;
                         });

TEST(Compose, EndpointsMustMatch) {
  auto a = TypedObject::set(SetObject{"a"});
  auto b = TypedObject::set(SetObject{"b", "c"});
  EXPECT_THROW(compose_morphism(identity_morphism(a), identity_morphism(b)), CompositionError);
}

TEST(Elements, CountsPerCategory) {
  EXPECT_EQ(elements(TypedObject::set(SetObject{"a", "b"})).size(), 2u);
  EXPECT_EQ(elements(TypedObject::boolean(BoolObject(false, true))).size(), 1u);
  EXPECT_EQ(elements(TypedObject::scalar(SemiringObject(SemiringKind::naturals, Window{0, 3, 1}))).size(), 4u);
  EXPECT_THROW(elements(TypedObject::interval(SemiringObject(SemiringKind::integer_intervals))), WindowRequired);
  ElementOptions w;
  w.window = Window{0, 1, 1};
  EXPECT_EQ(elements(TypedObject::interval(SemiringObject(SemiringKind::integer_intervals)), w).size(), 3u);
  EXPECT_THROW(elements(TypedObject::meas(ts::mspace(2))), WindowRequired);
  ElementOptions g;
  g.grid = {Rational(0), Rational(1)};
  EXPECT_EQ(elements(TypedObject::meas(ts::mspace(2)), g).size(), 4u);
  EXPECT_EQ(elements(TypedObject::prob(ts::mspace(2)), g).size(), 2u);
  EXPECT_EQ(elements(TypedObject::rv(ts::make_rv(3, 2, FiniteMap{{0, 1, 1}}))).size(), 3u);
  auto sto = ts::make_sto(3, 1, ts::time_index(2), {FiniteMap{{0, 0, 0}}, FiniteMap{{0, 0, 0}}});
  EXPECT_EQ(elements(TypedObject::sto(sto)).size(), 9u);
}
