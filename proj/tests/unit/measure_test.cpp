#include <gtest/gtest.h>

#include "catfuse/measure.hpp"
#include "../support/oracles.hpp"
#include "../support/universe.hpp"

using namespace catfuse;
namespace ts = testsupport;

TEST(Measure, WeightsAreNonnegativeAndSized) {
  FiniteMeasurableSpace x{"a", "b"};
  EXPECT_THROW(Measure<Rational>(x, {Rational(1)}), SpaceError);
  EXPECT_THROW(Measure<Rational>(x, {Rational(1), Rational(-1)}), InvalidObject);
  EXPECT_EQ((Measure<Rational>(x, {Rational(1), Rational(2)}) + Measure<Rational>::zero(x)).total(), Rational(3));
}

TEST(ProbabilityMeasure, MassOne) {
  FiniteMeasurableSpace x{"a", "b", "c"};
  EXPECT_THROW(ProbabilityMeasure<Rational>(x, {Rational(1), Rational(1), Rational(0)}), InvalidObject);
  EXPECT_EQ(ProbabilityMeasure<Rational>::uniform(x).weights()[2], Rational(1, 3));
  EXPECT_THROW(ProbabilityMeasure<Rational>::uniform(FiniteMeasurableSpace(SetObject{})), InvalidObject);
  EXPECT_NO_THROW(ProbabilityMeasure<double>(x, {0.1, 0.2, 0.7}));
}

TEST(Kernel, StochasticRowsAndShape) {
  FiniteMeasurableSpace x{"a", "b"}, y{"p"};
  Matrix<Rational> m(2, 1);
  m(0, 0) = 1;
  m(1, 0) = Rational(1, 2);
  EXPECT_THROW(Kernel<Rational>(x, y, m, true), InvalidObject);
  EXPECT_NO_THROW(Kernel<Rational>(x, y, m, false));
  EXPECT_THROW(Kernel<Rational>(y, x, m), SpaceError);
  m(1, 0) = -1;
  EXPECT_THROW(Kernel<Rational>(x, y, m), InvalidObject);
}

TEST(Kernel, CompositionMatchesTripleLoopAndPushForward) {
  ts::Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = ts::mspace(ts::uniform(rng, 1, 4), "a"), b = ts::mspace(ts::uniform(rng, 1, 4), "b"),
         c = ts::mspace(ts::uniform(rng, 1, 4), "c");
    auto mu = ts::random_kernel(rng, a, b, trial % 2 == 0);
    auto nu = ts::random_kernel(rng, b, c, trial % 2 == 0);
    auto k = compose_kernels(nu, mu);
    oracle::RMat em(a.size(), std::vector<Rational>(b.size())), en(b.size(), std::vector<Rational>(c.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) em[i][j] = mu(i, j);
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) en[i][j] = nu(i, j);
    auto ref = oracle::compose_kernel_entries(en, em);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) EXPECT_EQ(k(i, j), ref[i][j]);
    // Pushing a measure through the composite equals pushing twice.
    std::vector<Rational> w;
    for (std::size_t i = 0; i < a.size(); ++i) w.push_back(ts::random_weight(rng));
    Measure<Rational> m(a, w);
    EXPECT_EQ(push_measure(k, m), push_measure(nu, push_measure(mu, m)));
    if (trial % 2 == 0) {
      EXPECT_EQ(push_measure(k, m).total(), m.total());
    }
  }
}

TEST(Kernel, MismatchedSpacesDoNotCompose) {
  auto a = ts::mspace(2, "a"), b = ts::mspace(2, "b");
  EXPECT_THROW(compose_kernels(Kernel<Rational>::identity(a), Kernel<Rational>::identity(b)), CompositionError);
}

TEST(Elements, KernelFromUnitRoundTrips) {
  FiniteMeasurableSpace x{"a", "b"};
  Measure<Rational> m(x, {Rational(1, 3), Rational(2)});
  auto k = element_kernel(m);
  EXPECT_EQ(k.source(), unit_space());
  EXPECT_EQ(element_of_kernel(k), m);
}

TEST(Elements, GridCounts) {
  // |grid|^n measures; probability ones are those summing to 1.
  const std::vector<Rational> grid{Rational(0), Rational(1, 2), Rational(1)};
  for (std::size_t n = 1; n <= 3; ++n) {
    auto x = ts::mspace(n);
    std::size_t expect_meas = 1, expect_prob = 0;
    for (std::size_t i = 0; i < n; ++i) expect_meas *= grid.size();
    std::vector<std::size_t> d(n, 0);
    while (true) {
      Rational s(0);
      for (auto i : d) s += grid[i];
      expect_prob += s == 1;
      std::size_t i = n;
      while (i > 0 && ++d[i - 1] == grid.size()) d[--i] = 0;
      if (i == 0) break;
    }
    EXPECT_EQ(meas_elements(x, grid).size(), expect_meas);
    EXPECT_EQ(prob_elements(x, grid).size(), expect_prob);
  }
}

TEST(RandomVariable, MorphismSquareMustCommute) {
  auto y = ts::make_rv(3, 2, FiniteMap{{0, 0, 1}});
  auto z = ts::make_rv(2, 2, FiniteMap{{1, 0}});
  EXPECT_NO_THROW(check_rv_morphism(FiniteMap{{0, 0, 1}}, FiniteMap{{1, 0}}, y, z));
  try {
    check_rv_morphism(FiniteMap{{0, 0, 1}}, FiniteMap{{0, 1}}, y, z);
    FAIL();
  } catch (const CommutationError& e) {
    EXPECT_EQ(e.omega(), "w0");
  }
  EXPECT_THROW(check_rv_morphism(FiniteMap{{0, 0}}, FiniteMap{{1, 0}}, y, z), CommutationError);
}

TEST(RandomVariable, TerminalReceivesExactlyOneMap) {
  ts::Rng rng(22);
  auto t = terminal_rv();
  for (int trial = 0; trial < 50; ++trial) {
    const auto o = ts::uniform(rng, 1, 4), s = ts::uniform(rng, 1, 3);
    auto y = ts::make_rv(o, s, ts::random_map(rng, o, s));
    std::size_t n = 0;
    for (const auto& p1 : ts::all_maps(o, 1))
      for (const auto& p2 : ts::all_maps(s, 1)) try {
          check_rv_morphism(p1, p2, y, t);
          ++n;
        } catch (const CommutationError&) {
        }
    EXPECT_EQ(n, 1u);
  }
}

TEST(StochasticProcess, ElementsAreFamilies) {
  auto p = ts::make_sto(2, 2, ts::time_index(3), {FiniteMap{{0, 1}}, FiniteMap{{1, 1}}, FiniteMap{{0, 0}}});
  auto es = sto_elements(p);
  EXPECT_EQ(es.size(), 8u);
  for (const auto& fam : es)
    for (std::size_t t = 0; t < 3; ++t) EXPECT_EQ(fam[t].state, p.x_maps()[t](fam[t].omega));
  EXPECT_THROW(sto_elements(p, 7), BoundError);
  EXPECT_EQ(p.at(1).x_map(), (FiniteMap{{1, 1}}));
}

TEST(StochasticProcess, MorphismsNeedSharedIndex) {
  auto p = ts::make_sto(1, 1, ts::time_index(2), {FiniteMap{{0}}, FiniteMap{{0}}});
  auto q = ts::make_sto(1, 1, ts::time_index(1), {FiniteMap{{0}}});
  EXPECT_THROW(check_sto_morphism({FiniteMap{{0}}}, {FiniteMap{{0}}}, p, q), CompositionError);
  EXPECT_NO_THROW(check_sto_morphism({FiniteMap{{0}}, FiniteMap{{0}}}, {FiniteMap{{0}}, FiniteMap{{0}}}, p, p));
}
