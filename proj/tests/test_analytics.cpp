#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "curate/analytics.hpp"
#include "curate/domain_vector.hpp"
#include "support.hpp"

using namespace curate;
namespace ct = curate::testing;

namespace {

TEST(Retention, Examples) {
  const auto r = retention_report({1000, 50000}, {10, 700}, Stage::stage1);
  EXPECT_EQ(r.retention_docs, 0.01);
  EXPECT_EQ(r.retention_tokens, 0.014);
  EXPECT_EQ(retention_report({7, 70}, {7, 70}, Stage::combined).retention_docs, 1.0);
  EXPECT_EQ(retention_report({0, 0}, {0, 0}, Stage::stage2).retention_docs, 1.0);
  EXPECT_EQ(to_json(r)["stage"], "stage1");
}

TEST(Retention, MoreOutThanInIsFatal) {
  EXPECT_THROW(retention_report({5, 50}, {6, 50}, Stage::stage1), Error);
  EXPECT_THROW(retention_report({5, 50}, {5, 51}, Stage::stage2), Error);
}

TEST(CostModel, ReproducesTableExactly) {
  const auto j = cost_report(CostModel{});
  const auto& s = j["scenarios"];
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0]["scenario"], "stage1_only");
  EXPECT_EQ(s[0]["hours"].get<double>(), 177.0);
  EXPECT_EQ(s[0]["cost"].get<double>(), 44.0);
  EXPECT_EQ(s[1]["hours"].get<double>(), 12000.0);
  EXPECT_EQ(s[1]["cost"].get<double>(), 16200.0);
  EXPECT_EQ(s[2]["hours"].get<double>(), 297.0);
  EXPECT_EQ(s[2]["cost"].get<double>(), 206.0);
}

TEST(CostModel, FullRetentionIsSumOfStages) {
  CostModel m;
  m.stage1_retention = 1.0;
  const auto a = estimate_cost(m, CostScenario::stage1_only);
  const auto b = estimate_cost(m, CostScenario::stage2_only);
  const auto c = estimate_cost(m, CostScenario::combined);
  EXPECT_DOUBLE_EQ(c.hours, a.hours + b.hours);
  EXPECT_DOUBLE_EQ(c.cost, a.cost + b.cost);
}

TEST(CostModel, RandomParametersMatchArithmetic) {
  Rng rng(77);
  for (int i = 0; i < 1000; ++i) {
    CostModel m;
    m.stage1_hours_full_corpus = 0.1 + 1000 * rng.uniform();
    m.stage2_hours_full_corpus = 0.1 + 50000 * rng.uniform();
    m.stage1_rate_per_hour = 0.01 + 5 * rng.uniform();
    m.stage2_rate_per_hour = 0.01 + 5 * rng.uniform();
    m.stage1_retention = 0.001 + 0.999 * rng.uniform();
    const auto c = estimate_cost(m, CostScenario::combined);
    const double hours = m.stage1_hours_full_corpus + m.stage2_hours_full_corpus * m.stage1_retention;
    const double cost = m.stage1_hours_full_corpus * m.stage1_rate_per_hour +
                        m.stage2_hours_full_corpus * m.stage1_retention * m.stage2_rate_per_hour;
    EXPECT_NEAR(c.hours, hours, 1e-9 * hours);
    EXPECT_NEAR(c.cost, cost, 1e-9 * cost);
  }
}

TEST(CostModel, Validation) {
  CostModel m;
  m.stage1_retention = 0.0;
  EXPECT_THROW(estimate_cost(m, CostScenario::combined), ConfigError);
  m.stage1_retention = 0.5;
  m.stage2_rate_per_hour = -1;
  EXPECT_THROW(estimate_cost(m, CostScenario::combined), ConfigError);
}

struct SweepFixture : ::testing::Test {
  ct::PlantedWorld world = ct::make_planted_world(31);
  EmbeddingTable table = world.table();
  DomainLexicon lexicon = world.lexicon();
  DomainVector dv = aggregate_domain_vector(table, lexicon);
  std::vector<Document> docs = ct::make_planted_corpus(world, 4000, 300, 32);
};

TEST_F(SweepFixture, NoneKeepsEverything) {
  MockScorer scorer(lexicon);
  SweepPlan plan;
  plan.strategies = {Strategy::none};
  plan.taus = {0.0};
  const auto r = threshold_sweep(&dv, &table, &lexicon, docs, scorer, plan);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].percent_kept, 100.0);
  EXPECT_EQ(r[0].retained.size(), docs.size());
}

TEST_F(SweepFixture, NestedAndQualityRises) {
  MockScorer scorer(lexicon);
  SweepPlan plan;
  plan.strategies = {Strategy::embedding, Strategy::keyword};
  const auto r = threshold_sweep(&dv, &table, &lexicon, docs, scorer, plan, 4);
  ASSERT_EQ(r.size(), 9u);
  EXPECT_EQ(scorer.stats().scored, docs.size());  // scored once
  for (std::size_t i = 1; i < r.size(); ++i) {
    if (r[i].strategy != r[i - 1].strategy) continue;
    EXPECT_LE(r[i].percent_kept, r[i - 1].percent_kept);
    EXPECT_TRUE(std::includes(r[i - 1].retained.begin(), r[i - 1].retained.end(), r[i].retained.begin(),
                              r[i].retained.end()));
  }
  ASSERT_EQ(r[0].parameter, 0.0);
  ASSERT_EQ(r[3].parameter, 0.3);
  ASSERT_TRUE(r[0].mean_quality && r[3].mean_quality);
  EXPECT_GT(*r[3].mean_quality, *r[0].mean_quality);

  // Direct recomputation of the tau = 0.3 row.
  const auto scores = MockScorer(lexicon).score(docs);
  double sum = 0.0;
  for (std::size_t i : r[3].retained) sum += scores[i].score;
  EXPECT_NEAR(*r[3].mean_quality, sum / static_cast<double>(r[3].retained.size()), 1e-12);

  std::ostringstream csv;
  write_sweep_csv(csv, r);
  const std::string text = csv.str();
  EXPECT_TRUE(text.starts_with("strategy,parameter,percent_kept,mean_quality,sem_quality\n"));
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 10);
  EXPECT_NE(text.find("\nembedding,0.3,"), std::string::npos);
  EXPECT_NE(text.find("\nkeyword,8,"), std::string::npos);
}

TEST_F(SweepFixture, EmptyRetainedSetHasNoMean) {
  MockScorer scorer(lexicon);
  SweepPlan plan;
  plan.taus = {0.2, 1.0};
  const auto r = threshold_sweep(&dv, &table, &lexicon, docs, scorer, plan);
  EXPECT_TRUE(r[0].mean_quality);
  EXPECT_FALSE(r[1].mean_quality);
  EXPECT_EQ(r[1].percent_kept, 0.0);
  std::ostringstream csv;
  write_sweep_csv(csv, r);
  EXPECT_NE(csv.str().find("embedding,1,0,,0\n"), std::string::npos) << csv.str();
}

TEST_F(SweepFixture, UnsortedTausRejected) {
  MockScorer scorer(lexicon);
  SweepPlan plan;
  plan.taus = {0.3, 0.1};
  EXPECT_THROW(threshold_sweep(&dv, &table, &lexicon, docs, scorer, plan), ConfigError);
}

std::vector<QualityScore> as_scores(const std::vector<double>& values) {
  std::vector<QualityScore> out;
  for (double v : values) out.push_back({"d", v, "t", false});
  return out;
}

TEST(ScoreDistribution, AllTopScores) {
  const auto h = score_distribution(as_scores(std::vector<double>(25, 5.0)), 0.5);
  ASSERT_EQ(h.counts.size(), 10u);
  for (std::size_t i = 0; i + 1 < h.counts.size(); ++i) EXPECT_EQ(h.counts[i], 0u);
  EXPECT_EQ(h.counts.back(), 25u);
}

TEST(ScoreDistribution, EmptyInput) {
  const auto h = score_distribution({}, 1.0);
  EXPECT_EQ(h.counts, std::vector<std::uint64_t>(5, 0));
  EXPECT_THROW(score_distribution({}, 0.3), ConfigError);
  EXPECT_THROW(score_distribution({}, 0.0), ConfigError);
}

// Scores on a cent grid, binned by integer arithmetic.
TEST(ScoreDistribution, MatchesIntegerBinning) {
  Rng rng(4);
  std::vector<double> values;
  std::vector<int> cents;
  for (int i = 0; i < 1000; ++i) {
    const int c = static_cast<int>(rng.below(501));
    cents.push_back(c);
    values.push_back(c / 100.0);
  }
  for (double width : {0.1, 0.25, 0.5, 1.0}) {
    const int wc = static_cast<int>(std::lround(width * 100));
    const std::size_t bins = static_cast<std::size_t>(500 / wc);
    std::vector<std::uint64_t> oracle(bins, 0);
    for (int c : cents) oracle[std::min<std::size_t>(static_cast<std::size_t>(c / wc), bins - 1)]++;
    const auto h = score_distribution(as_scores(values), width);
    EXPECT_EQ(h.counts, oracle) << width;
    EXPECT_EQ(h.total(), values.size());
  }
  std::ostringstream csv;
  write_histogram_csv(csv, score_distribution(as_scores(values), 1.0));
  EXPECT_TRUE(csv.str().starts_with("bin_low,bin_high,count\n0,1,"));
}

}  // namespace
