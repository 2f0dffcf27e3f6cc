#include <gtest/gtest.h>

#include "catfuse/pipeline.hpp"
#include "../support/oracles.hpp"

using namespace catfuse;

namespace {

PipelineResult run_l(double score, long violent, long calm, double tol = 0.0) {
  auto ex = build_L_example();
  std::vector<Reading> readings{{"C", ScorePayload{score}, 1},
                                {"E", TokensPayload{synthetic_article(violent, calm)}, 1}};
  return run_pipeline(readings, ex.sensors, ex.variables, "L", ex.sheaf, tol);
}

}  // namespace

TEST(Cooking, Thresholds) {
  EXPECT_EQ(cook_f1(0.0), 0);
  EXPECT_EQ(cook_f1(0.4999), 0);
  EXPECT_EQ(cook_f1(0.5), 1);
  EXPECT_EQ(cook_f1(1.0), 1);
  EXPECT_THROW(cook_f1(1.5), DomainError);
  EXPECT_EQ(cook_f2(1, 2), 0);
  EXPECT_EQ(cook_f2(2, 2), 1);
  EXPECT_THROW(cook_f2(-1, 0), DomainError);
}

TEST(BagOfWords, CountsAndConflicts) {
  auto d = bag_of_words({"riot", "calm", "riot", "the", "fight"}, default_violent_words(), default_calm_words());
  EXPECT_EQ(d, (CountDatum{3, 1}));
  EXPECT_THROW(bag_of_words({}, {"x"}, {"x"}), ConfigError);
}

TEST(Pipeline, AgreementDecidesTheSection) {
  for (int k = 0; k <= 10; ++k)
    for (long i = 0; i <= 3; ++i)
      for (long j = 0; j <= 3; ++j) {
        auto r = run_l(k / 10.0, i, j);
        EXPECT_EQ(r.report.is_section, oracle::threshold(k / 10.0) == oracle::compare_counts(i, j));
      }
}

TEST(Pipeline, ConflictDistanceAndTolerance) {
  auto r = run_l(0.1, 4, 0);
  ASSERT_FALSE(r.report.is_section);
  EXPECT_NEAR(r.report.max_violation, std::sqrt(2.0), 1e-12);
  EXPECT_EQ(r.report.violations.front().from, Simplex{"E"});
  EXPECT_TRUE(run_l(0.1, 4, 0, 1.5).report.is_section);
  ASSERT_EQ(r.trace.size(), 2u);
  EXPECT_EQ(r.trace[0].cooked, "0");
  EXPECT_EQ(r.trace[1].cooked, "1");
}

TEST(Pipeline, LatestReadingWins) {
  auto ex = build_L_example();
  std::vector<Reading> readings{{"C", ScorePayload{0.1}, 5},
                                {"C", ScorePayload{0.9}, 2},
                                {"E", TokensPayload{synthetic_article(0, 3)}, 1}};
  auto r = run_pipeline(readings, ex.sensors, ex.variables, "L", ex.sheaf);
  EXPECT_TRUE(r.report.is_section);
}

TEST(Pipeline, ErrorsNameSensorAndVariable) {
  auto ex = build_L_example();
  std::vector<Reading> only_c{{"C", ScorePayload{0.9}, 1}};
  try {
    run_pipeline(only_c, ex.sensors, ex.variables, "L", ex.sheaf);
    FAIL();
  } catch (const IncompleteAssignmentError& e) {
    EXPECT_NE(std::string(e.what()).find("sensor E, variable L"), std::string::npos);
  }
  std::vector<Reading> wrong_kind{{"C", TokensPayload{{"riot"}}, 1}, {"E", TokensPayload{{"riot"}}, 1}};
  EXPECT_THROW(run_pipeline(wrong_kind, ex.sensors, ex.variables, "L", ex.sheaf), PayloadError);
  std::vector<Reading> bad_score{{"C", ScorePayload{2.0}, 1}, {"E", TokensPayload{{"riot"}}, 1}};
  EXPECT_THROW(run_pipeline(bad_score, ex.sensors, ex.variables, "L", ex.sheaf), DomainError);
  EXPECT_THROW(run_pipeline(only_c, ex.sensors, ex.variables, "Q", ex.sheaf), ConfigError);
  auto no_analytic = ex.sensors;
  no_analytic[1].analytics.clear();
  std::vector<Reading> both{{"C", ScorePayload{0.9}, 1}, {"E", TokensPayload{{"riot"}}, 1}};
  EXPECT_THROW(run_pipeline(both, no_analytic, ex.variables, "L", ex.sheaf), AnalyticMissing);
}

TEST(Pipeline, CookedValueMustBeAnElement) {
  auto ex = build_L_example();
  ex.variables[0].cooked_object = TypedObject::boolean(BoolObject(true, false));
  std::vector<Reading> readings{{"C", ScorePayload{0.9}, 1}, {"E", TokensPayload{{"riot"}}, 1}};
  EXPECT_THROW(run_pipeline(readings, ex.sensors, ex.variables, "L", ex.sheaf), DomainError);
}
