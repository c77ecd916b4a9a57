#include <gtest/gtest.h>

#include <cascade/error.hpp>
#include <cascade/pipeline.hpp>
#include <cascade/suite.hpp>

#include "helpers.hpp"

namespace cascade {
namespace {

using testing::doc;
using testing::FixedClassifier;

const LabelSpace kLabels({"A", "B"});

AgentSuite logic_only_suite() {
  RuleSet rules;
  rules.add({"x", "\\bx\\b", kLabels.by_name("A"), 0.9});
  return make_suite(KeywordMap(), rules, AgentWeights());
}

TEST(AgentSuite, RosterOrderAndRestriction) {
  const AgentSuite suite = logic_only_suite();
  ASSERT_EQ(suite.agents().size(), 3u);
  EXPECT_EQ(suite.agents()[0]->id(), AgentId::lexical);
  EXPECT_EQ(suite.agents()[2]->id(), AgentId::logic);
  const auto without = suite.without(AgentId::contextual);
  EXPECT_FALSE(without.has(AgentId::contextual));
  EXPECT_TRUE(without.has(AgentId::logic));
  EXPECT_TRUE(suite.restricted_to({}).empty());
}

TEST(EstimateWeights, AccuracyOnNonAbstainedDocuments) {
  // logic fires on 10 documents and is right on 8; it abstains on the rest
  std::vector<Document> validation;
  for (int i = 0; i < 10; ++i) validation.push_back(doc(std::to_string(i), "x marks", i < 8 ? "A" : "B"));
  for (int i = 10; i < 15; ++i) validation.push_back(doc(std::to_string(i), "nothing here", "B"));
  FixedClassifier primary(kLabels, Classification(kLabels.by_id(0), 0.5));
  const AgentWeights w = estimate_weights(logic_only_suite(), validation, primary);
  EXPECT_DOUBLE_EQ(*w.get(AgentId::logic), 0.8);
  EXPECT_DOUBLE_EQ(*w.get(AgentId::lexical), 0.0);     // empty keyword map: always abstains
  EXPECT_DOUBLE_EQ(*w.get(AgentId::contextual), 0.0);  // no users: always abstains
}

TEST(EstimateWeights, AllAbstainingResetsToOne) {
  std::vector<Document> validation{doc("1", "nothing", "A"), doc("2", "here", "B")};
  FixedClassifier primary(kLabels, Classification(kLabels.by_id(0), 0.5));
  const AgentWeights w = estimate_weights(logic_only_suite(), validation, primary);
  for (AgentId id : kAllAgents) EXPECT_DOUBLE_EQ(*w.get(id), 1.0);
}

TEST(EstimateWeights, HistoryIsFedGoldLabels) {
  // u's documents alternate A, A, B; the contextual agent sees gold history
  std::vector<Document> validation{doc("1", "a", "A", "u", 1), doc("2", "b", "A", "u", 2),
                                   doc("3", "c", "A", "u", 3)};
  FixedClassifier primary(kLabels, Classification(kLabels.by_id(1), 0.5));  // always wrong
  const AgentWeights w = estimate_weights(logic_only_suite(), validation, primary);
  EXPECT_DOUBLE_EQ(*w.get(AgentId::contextual), 1.0);  // 2 of 2 scored documents
}

TEST(EstimateWeights, EmptyValidationFails) {
  FixedClassifier primary(kLabels, Classification(kLabels.by_id(0), 0.5));
  EXPECT_THROW(estimate_weights(logic_only_suite(), {}, primary), Error);
}

}  // namespace
}  // namespace cascade
