#include <gtest/gtest.h>

#include <random>

#include <cascade/consensus.hpp>
#include <cascade/error.hpp>

#include "consensus_oracle.hpp"

namespace cascade {
namespace {

using testing::OracleVerdict;

const LabelSpace kLabels({"Information Request", "General Inquiry", "Action Directive"});
const Label kIR = kLabels.by_id(0);
const Label kA = kLabels.by_id(1);
const Label kB = kLabels.by_id(2);
const Classification kPrimary(kIR, 0.65);

AgentVerdict suggest(AgentId agent, const Label& label, double c) {
  return AgentVerdict::suggest(agent, Classification(label, c), "test");
}

TEST(Consensus, UnanimousWorkedExample) {
  const std::vector<AgentVerdict> verdicts{suggest(AgentId::lexical, kIR, 0.70),
                                           suggest(AgentId::contextual, kIR, 0.75),
                                           suggest(AgentId::logic, kIR, 0.80)};
  const auto r = aggregate(verdicts, AgentWeights(), kPrimary, kLabels);
  EXPECT_EQ(r.final.label(), kIR);
  EXPECT_NEAR(r.final.confidence(), 0.75, 1e-12);
  EXPECT_EQ(r.participants, 3u);
  EXPECT_EQ(r.agreed_agents.size(), 3u);
  EXPECT_FALSE(r.fallback_used);
}

TEST(Consensus, SingleVerdictPassesThrough) {
  const std::vector<AgentVerdict> verdicts{suggest(AgentId::logic, kB, 0.42)};
  const auto r = aggregate(verdicts, AgentWeights(), kPrimary, kLabels);
  EXPECT_EQ(r.final, Classification(kB, 0.42));
}

TEST(Consensus, MajorityMassBeatsSingleHighConfidence) {
  // A = 0.9, B = 0.5 + 0.5 = 1.0 -> B with 1.0 / 3
  const std::vector<AgentVerdict> verdicts{suggest(AgentId::lexical, kA, 0.9), suggest(AgentId::contextual, kB, 0.5),
                                           suggest(AgentId::logic, kB, 0.5)};
  const auto r = aggregate(verdicts, AgentWeights(), kPrimary, kLabels);
  EXPECT_NEAR(r.per_label_score[kA.id], 0.9, 1e-12);
  EXPECT_NEAR(r.per_label_score[kB.id], 1.0, 1e-12);
  EXPECT_EQ(r.final.label(), kB);
  EXPECT_NEAR(r.final.confidence(), 1.0 / 3.0, 1e-12);
  EXPECT_EQ(r.agreed_agents, (std::vector<AgentId>{AgentId::contextual, AgentId::logic}));
}

TEST(Consensus, AbstainersAreExcludedFromBothSums) {
  const std::vector<AgentVerdict> verdicts{AgentVerdict::abstain(AgentId::lexical), suggest(AgentId::logic, kA, 0.6)};
  const auto r = aggregate(verdicts, AgentWeights(), kPrimary, kLabels);
  EXPECT_EQ(r.final, Classification(kA, 0.6));
  EXPECT_EQ(r.participants, 1u);
}

TEST(Consensus, AllAbstainFallsBackToPrimary) {
  const std::vector<AgentVerdict> verdicts{AgentVerdict::abstain(AgentId::lexical),
                                           AgentVerdict::abstain(AgentId::logic)};
  const auto r = aggregate(verdicts, AgentWeights(), kPrimary, kLabels);
  EXPECT_TRUE(r.fallback_used);
  EXPECT_EQ(r.final, kPrimary);
  EXPECT_TRUE(aggregate({}, AgentWeights(), kPrimary, kLabels).fallback_used);
}

TEST(Consensus, ZeroWeightParticipantsFallBack) {
  const AgentWeights w({{AgentId::lexical, 0.0}, {AgentId::contextual, 1.0}, {AgentId::logic, 1.0}});
  const std::vector<AgentVerdict> verdicts{suggest(AgentId::lexical, kB, 0.9)};
  const auto r = aggregate(verdicts, w, kPrimary, kLabels);
  EXPECT_TRUE(r.fallback_used);
  EXPECT_EQ(r.final, kPrimary);
}

TEST(Consensus, TiesGoToLowestLabelId) {
  const std::vector<AgentVerdict> verdicts{suggest(AgentId::lexical, kB, 0.5), suggest(AgentId::logic, kA, 0.5)};
  EXPECT_EQ(aggregate(verdicts, AgentWeights(), kPrimary, kLabels).final.label(), kA);
}

TEST(Consensus, DecimalSumTieIsStillATie) {
  // 0.1 + 0.2 and 0.3 are equal in exact arithmetic
  const std::vector<AgentVerdict> verdicts{suggest(AgentId::lexical, kB, 0.1), suggest(AgentId::contextual, kB, 0.2),
                                           suggest(AgentId::logic, kA, 0.3)};
  EXPECT_EQ(aggregate(verdicts, AgentWeights(), kPrimary, kLabels).final.label(), kA);
}

TEST(Consensus, RejectsDuplicateAgentsAndMissingWeights) {
  const std::vector<AgentVerdict> dup{suggest(AgentId::logic, kA, 0.5), suggest(AgentId::logic, kB, 0.5)};
  EXPECT_THROW(aggregate(dup, AgentWeights(), kPrimary, kLabels), Error);
  const AgentWeights partial({{AgentId::lexical, 1.0}});
  const std::vector<AgentVerdict> one{suggest(AgentId::logic, kA, 0.5)};
  try {
    aggregate(one, partial, kPrimary, kLabels);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownAgent);
  }
}

TEST(AgentWeights, Validation) {
  EXPECT_THROW(AgentWeights({{AgentId::logic, -1.0}}), Error);
  EXPECT_THROW(AgentWeights({{AgentId::logic, 0.0}}), Error);
  EXPECT_THROW(AgentWeights({{AgentId::logic, std::nan("")}}), Error);
  EXPECT_EQ(AgentWeights().get(AgentId::contextual), 1.0);
  const AgentWeights w({{AgentId::lexical, 0.25}, {AgentId::logic, 0.5}});
  EXPECT_EQ(AgentWeights::from_json(w.to_json()), w);
  EXPECT_THROW(AgentWeights::from_json(R"({"oracle": 1})"), Error);
}

// Exhaustive: every verdict set over <= 3 agents and 3 labels with confidences
// on the 0.1 grid, under several integer weight vectors.
TEST(Consensus, MatchesExactOracleOnTheFullGrid) {
  const std::vector<std::array<std::int64_t, 3>> weight_sets{{1, 1, 1}, {1, 2, 3}, {0, 2, 1}, {3, 0, 0}};
  std::size_t cases = 0;
  for (const auto& ws : weight_sets) {
    const AgentWeights weights({{AgentId::lexical, double(ws[0])},
                                {AgentId::contextual, double(ws[1])},
                                {AgentId::logic, double(ws[2])}});
    // option 0 = abstain, otherwise label * 11 + tenths + 1
    constexpr int kOptions = 1 + 3 * 11;
    for (int a = 0; a < kOptions; ++a)
      for (int b = 0; b < kOptions; ++b)
        for (int c = 0; c < kOptions; ++c) {
          std::vector<AgentVerdict> verdicts;
          std::vector<OracleVerdict> oracle;
          const int choice[3] = {a, b, c};
          for (int j = 0; j < 3; ++j) {
            const AgentId id = kAllAgents[j];
            if (choice[j] == 0) {
              verdicts.push_back(AgentVerdict::abstain(id));
              oracle.push_back({true, 0, 0, ws[j]});
            } else {
              const std::size_t label = (choice[j] - 1) / 11;
              const std::int64_t tenths = (choice[j] - 1) % 11;
              verdicts.push_back(suggest(id, kLabels.by_id(label), tenths / 10.0));
              oracle.push_back({false, label, tenths, ws[j]});
            }
          }
          const auto got = aggregate(verdicts, weights, kPrimary, kLabels);
          const auto want = testing::oracle_consensus(oracle, kLabels.size());
          ASSERT_EQ(got.fallback_used, want.fallback) << a << "," << b << "," << c;
          if (!want.fallback) {
            ASSERT_EQ(got.final.label().id, want.label) << a << "," << b << "," << c;
            ASSERT_NEAR(got.final.confidence(), want.confidence, 1e-12);
          }
          ++cases;
        }
  }
  EXPECT_EQ(cases, 4u * 34 * 34 * 34);
}

TEST(Consensus, ScalingAllWeightsChangesNothing) {
  std::mt19937 gen(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<AgentVerdict> verdicts;
    for (AgentId id : kAllAgents) {
      if (gen() % 4 == 0) verdicts.push_back(AgentVerdict::abstain(id));
      else verdicts.push_back(suggest(id, kLabels.by_id(gen() % 3), u(gen)));
    }
    const AgentWeights w({{AgentId::lexical, 0.1 + u(gen)}, {AgentId::contextual, 0.1 + u(gen)},
                          {AgentId::logic, 0.1 + u(gen)}});
    const auto r1 = aggregate(verdicts, w, kPrimary, kLabels);
    const auto r2 = aggregate(verdicts, w.scaled(7.5), kPrimary, kLabels);
    EXPECT_EQ(r1.final.label(), r2.final.label());
    EXPECT_NEAR(r1.final.confidence(), r2.final.confidence(), 1e-12);
  }
}

// Unanimous suggestions: the label is the shared one and the confidence is
// the weighted mean, so it lies between the smallest and largest input.
TEST(Consensus, UnanimityGivesWeightedMean) {
  std::mt19937 gen(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const Label y = kLabels.by_id(gen() % 3);
    const double c[3] = {u(gen), u(gen), u(gen)};
    const double w[3] = {0.1 + u(gen), 0.1 + u(gen), 0.1 + u(gen)};
    std::vector<AgentVerdict> verdicts;
    for (int j = 0; j < 3; ++j) verdicts.push_back(suggest(kAllAgents[j], y, c[j]));
    const AgentWeights weights({{AgentId::lexical, w[0]}, {AgentId::contextual, w[1]}, {AgentId::logic, w[2]}});
    const auto r = aggregate(verdicts, weights, kPrimary, kLabels);
    EXPECT_EQ(r.final.label(), y);
    const double mean = (w[0] * c[0] + w[1] * c[1] + w[2] * c[2]) / (w[0] + w[1] + w[2]);
    EXPECT_NEAR(r.final.confidence(), mean, 1e-12);
    EXPECT_GE(r.final.confidence(), std::min({c[0], c[1], c[2]}) - 1e-12);
    EXPECT_LE(r.final.confidence(), std::max({c[0], c[1], c[2]}) + 1e-12);
  }
}

}  // namespace
}  // namespace cascade
