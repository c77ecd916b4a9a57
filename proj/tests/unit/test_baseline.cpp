#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include <cascade/baseline.hpp>
#include <cascade/error.hpp>

#include "helpers.hpp"

namespace cascade {
namespace {

using testing::doc;

std::vector<Document> two_doc_corpus() {
  return {doc("1", "cheap pills now", "spam"), doc("2", "see you at lunch", "ham")};
}

// Hand-derived posterior for the two-document corpus. Every token has df = 1,
// so idf = ln(3/2) + 1 = k for all 7 vocabulary entries. Spam holds 3 tokens of
// mass k each, ham 4. With smoothing 1:
//   P(cheap | spam) = (k + 1) / (3k + 7),  P(cheap | ham) = 1 / (4k + 7)
// and "cheap pills" contributes 2 * k * ln P(t | class) to each class score.
double oracle_spam_posterior(double temperature) {
  const double k = std::log(3.0 / 2.0) + 1.0;
  const double spam = std::log(0.5) + 2.0 * k * std::log((k + 1.0) / (3.0 * k + 7.0));
  const double ham = std::log(0.5) + 2.0 * k * std::log(1.0 / (4.0 * k + 7.0));
  return 1.0 / (1.0 + std::exp((ham - spam) / temperature));
}

TEST(Baseline, TwoDocCorpusMatchesHandComputedPosterior) {
  const auto docs = two_doc_corpus();
  const auto model = BaselineModel::train(docs);
  const auto c = model.classify("cheap pills");
  EXPECT_EQ(c.label().name, "spam");
  EXPECT_GT(c.confidence(), 0.5);
  EXPECT_NEAR(c.confidence(), oracle_spam_posterior(1.0), 1e-12);
}

TEST(Baseline, TemperatureSoftensThePosterior) {
  const auto docs = two_doc_corpus();
  const auto model = BaselineModel::train(docs, {.smoothing = 1.0, .temperature = 3.0});
  EXPECT_NEAR(model.classify("cheap pills").confidence(), oracle_spam_posterior(3.0), 1e-12);
  EXPECT_LT(oracle_spam_posterior(3.0), oracle_spam_posterior(1.0));
  // argmax does not move
  EXPECT_EQ(model.with_temperature(50.0).classify("cheap pills").label().name, "spam");
}

TEST(Baseline, DisjointVocabulariesAreSeparatedConfidently) {
  const std::vector<Document> docs{doc("1", "alpha beta gamma", "a"), doc("2", "delta epsilon zeta", "b"),
                                   doc("3", "eta theta iota", "c")};
  const auto model = BaselineModel::train(docs);
  for (const auto& d : docs) {
    const auto c = model.classify(d.text);
    EXPECT_EQ(c.label().name, *d.gold);
    EXPECT_GT(c.confidence(), 0.9);
  }
}

TEST(Baseline, SmoothingMustBePositive) {
  const auto docs = two_doc_corpus();
  EXPECT_THROW(BaselineModel::train(docs, {.smoothing = 0.0}), Error);
  EXPECT_THROW(BaselineModel::train(docs, {.smoothing = 1.0, .temperature = 0.0}), Error);
}

TEST(Baseline, TrainingErrors) {
  EXPECT_THROW(BaselineModel::train({}), Error);
  const std::vector<Document> unlabeled{doc("1", "x", "a"), doc("2", "y")};
  EXPECT_THROW(BaselineModel::train(unlabeled), Error);
}

TEST(Baseline, EmptyTextFallsBackToPriors) {
  const std::vector<Document> docs{doc("1", "a b", "x"), doc("2", "c d", "y"), doc("3", "e f", "y")};
  const auto model = BaselineModel::train(docs);
  const auto c = model.classify("");
  EXPECT_EQ(c.label().name, "y");
  EXPECT_NEAR(c.confidence(), 2.0 / 3.0, 1e-12);
}

TEST(Baseline, BalancedPriorsAndUnknownTokensGiveOneHalf) {
  const auto docs = two_doc_corpus();
  const auto model = BaselineModel::train(docs);
  // brute force: with no known token every class score is its log prior
  std::vector<double> prior{0.5, 0.5};
  const double z = std::accumulate(prior.begin(), prior.end(), 0.0);
  const auto c = model.classify("zzz qqq");
  EXPECT_DOUBLE_EQ(c.confidence(), prior[0] / z);
  EXPECT_EQ(c.label().id, 0u);  // tie goes to the lowest id
}

TEST(Baseline, VerbatimTrainingTextIsRecognised) {
  const std::vector<Document> docs{doc("1", "please reset my password", "action"),
                                   doc("2", "what time is it", "question")};
  const auto model = BaselineModel::train(docs);
  EXPECT_EQ(model.classify("please reset my password").label().name, "action");
}

TEST(Baseline, PosteriorSumsToOneOnRandomTexts) {
  const std::vector<Document> docs{doc("1", "red green blue", "a"), doc("2", "green yellow", "b"),
                                   doc("3", "blue blue cyan", "c"), doc("4", "magenta red", "a")};
  const auto model = BaselineModel::train(docs);
  const std::vector<std::string> words{"red", "green", "blue", "yellow", "cyan", "magenta", "black"};
  std::mt19937 gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::string text;
    const int n = static_cast<int>(gen() % 12);
    for (int i = 0; i < n; ++i) text += words[gen() % words.size()] + " ";
    const auto post = model.posterior(text);
    EXPECT_NEAR(std::accumulate(post.begin(), post.end(), 0.0), 1.0, 1e-9);
  }
}

TEST(Baseline, VocabularyIsDenseAndSorted) {
  const auto docs = two_doc_corpus();
  const auto model = BaselineModel::train(docs);
  EXPECT_EQ(model.vocabulary_size(), 7u);
  EXPECT_EQ(model.feature_index("at"), 0u);
  EXPECT_EQ(model.feature_index("you"), 6u);
  EXPECT_FALSE(model.feature_index("absent"));
}

TEST(Baseline, JsonRoundTripPreservesClassifications) {
  const auto docs = two_doc_corpus();
  const auto model = BaselineModel::train(docs, {.smoothing = 0.5, .temperature = 2.0});
  const auto restored = BaselineModel::from_json(model.to_json());
  EXPECT_EQ(restored.to_json(), model.to_json());
  for (const char* text : {"cheap pills", "lunch now", "", "unknown"}) {
    EXPECT_EQ(restored.classify(text), model.classify(text));
  }
  EXPECT_THROW(BaselineModel::from_json("{\"kind\": \"other\"}"), Error);
  EXPECT_THROW(BaselineModel::from_json("not json"), Error);
}

TEST(Baseline, TrainingIsDeterministic) {
  const auto docs = two_doc_corpus();
  EXPECT_EQ(BaselineModel::train(docs).to_json(), BaselineModel::train(docs).to_json());
}

TEST(Baseline, ClassifyBatchPreservesOrder) {
  const auto docs = two_doc_corpus();
  const auto model = BaselineModel::train(docs);
  const std::vector<std::string> texts{"cheap", "lunch", "pills"};
  const auto out = model.classify_batch(texts);
  ASSERT_EQ(out.size(), 3u);
  for (std::size_t i = 0; i < texts.size(); ++i) EXPECT_EQ(out[i], model.classify(texts[i]));
}

TEST(ArgmaxLowest, TiesGoToLowestIndex) {
  const std::vector<double> v{0.2, 0.4, 0.4};
  EXPECT_EQ(argmax_lowest(v), 1u);
}

// Scaling every score by a positive constant leaves the argmax alone.
TEST(ArgmaxLowest, InvariantUnderPositiveScaling) {
  std::mt19937 gen(3);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> v(5);
    for (auto& x : v) x = u(gen);
    auto scaled = v;
    for (auto& x : scaled) x *= 3.7;
    EXPECT_EQ(argmax_lowest(v), argmax_lowest(scaled));
  }
}

// The fitted temperature minimises validation NLL: nearby temperatures do no better.
TEST(FitTemperature, FindsTheNllMinimum) {
  const std::vector<Document> train{doc("1", "cheap pills now", "spam"), doc("2", "cheap offer now", "spam"),
                                    doc("3", "see you at lunch", "ham"), doc("4", "lunch offer today", "ham")};
  const std::vector<Document> valid{doc("5", "cheap lunch", "ham"), doc("6", "pills now", "spam"),
                                    doc("7", "offer today", "spam"), doc("8", "see you", "ham")};
  const auto model = BaselineModel::train(train);
  auto nll = [&](double t) {
    const auto m = model.with_temperature(t);
    double total = 0.0;
    for (const auto& d : valid) total -= std::log(m.posterior(d.text)[m.label_space().by_name(*d.gold).id]);
    return total;
  };
  const double t = fit_temperature(model, valid);
  EXPECT_GE(t, 0.05);
  EXPECT_LE(t, 100.0);
  EXPECT_LE(nll(t), nll(t * 1.05) + 1e-9);
  EXPECT_LE(nll(t), nll(t / 1.05) + 1e-9);
  EXPECT_THROW(fit_temperature(model, {}), Error);
}

}  // namespace
}  // namespace cascade
