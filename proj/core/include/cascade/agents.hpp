#pragma once

#include <cstddef>
#include <deque>
#include <map>
#include <regex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cascade/domain.hpp"

namespace cascade {

struct ConsensusResult;

// ---------------------------------------------------------------------------
// Agent configuration

struct KeywordEntry {
  Label label;
  double weight = 1.0;  // in (0, 1]
};

/// Keyword token -> (label, weight). Keys must already be normalized tokens,
/// i.e. tokenize(key) == {key}.
class KeywordMap {
 public:
  explicit KeywordMap(double precision_threshold = 0.7);

  void add(std::string token, Label label, double weight);
  const KeywordEntry* find(std::string_view token) const;

  double precision_threshold() const noexcept { return precision_threshold_; }
  const std::map<std::string, KeywordEntry, std::less<>>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  /// {"precision_threshold": number, "entries": {token: {"label": string, "weight": number}}}
  static KeywordMap from_json(std::string_view json, const LabelSpace& labels);
  std::string to_json() const;

 private:
  double precision_threshold_;
  std::map<std::string, KeywordEntry, std::less<>> entries_;
};

/// Per-user ring buffer of the most recent final labels.
class UserHistory {
 public:
  explicit UserHistory(std::size_t capacity = 5);

  void record(const std::string& user_id, const Label& label);
  /// Oldest first. Empty for unknown users.
  std::vector<Label> recent(std::string_view user_id) const;
  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t users() const noexcept { return buffers_.size(); }

 private:
  std::size_t capacity_;
  std::unordered_map<std::string, std::deque<Label>> buffers_;
};

struct Rule {
  std::string id;
  std::string pattern;  // ECMAScript regex, matched case-insensitively anywhere in the text
  Label label;
  double confidence = 1.0;  // in (0, 1]
};

class RuleSet {
 public:
  /// Capacity guideline; exceeding it is allowed and only logged.
  static constexpr std::size_t kRecommendedSize = 50;

  void add(Rule rule);  // compiles the pattern; rejects duplicate ids
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  std::size_t size() const noexcept { return rules_.size(); }
  /// Indices of the rules whose pattern occurs in text, in list order.
  std::vector<std::size_t> matches(std::string_view text) const;

  /// {"rules": [{"id": string, "pattern": string, "label": string, "confidence": number}]}
  static RuleSet from_json(std::string_view json, const LabelSpace& labels);
  std::string to_json() const;

 private:
  std::vector<Rule> rules_;
  std::vector<std::regex> compiled_;
};

enum class RecencyWeighting {
  linear,       // oldest..newest weighted 1..n
  exponential,  // newest 1, each older entry multiplied by decay
};

struct ContextualOptions {
  RecencyWeighting weighting = RecencyWeighting::linear;
  double decay = 0.5;  // exponential only, in (0, 1]
};

/// Read-only state an agent sees during one round.
struct AgentContext {
  const LabelSpace& labels;
  const UserHistory& history;
};

// ---------------------------------------------------------------------------
// Verdict agents

AgentVerdict lexical_evaluate(const Document& doc, const KeywordMap& map);
AgentVerdict contextual_evaluate(const Document& doc, const UserHistory& history,
                                 const ContextualOptions& options = {});
AgentVerdict logic_evaluate(const Document& doc, const RuleSet& rules);

/// Common agent seat. Implementations are pure functions of their
/// configuration and the arguments.
class Agent {
 public:
  virtual ~Agent() = default;
  virtual AgentId id() const noexcept = 0;
  virtual AgentVerdict evaluate(const Document& doc, const Classification& primary,
                                const AgentContext& context) const = 0;
};

class LexicalAgent final : public Agent {
 public:
  explicit LexicalAgent(KeywordMap map) : map_(std::move(map)) {}
  AgentId id() const noexcept override { return AgentId::lexical; }
  AgentVerdict evaluate(const Document& doc, const Classification&, const AgentContext&) const override {
    return lexical_evaluate(doc, map_);
  }
  const KeywordMap& keyword_map() const noexcept { return map_; }

 private:
  KeywordMap map_;
};

class ContextualAgent final : public Agent {
 public:
  explicit ContextualAgent(ContextualOptions options = {});
  AgentId id() const noexcept override { return AgentId::contextual; }
  AgentVerdict evaluate(const Document& doc, const Classification&,
                        const AgentContext& context) const override {
    return contextual_evaluate(doc, context.history, options_);
  }

 private:
  ContextualOptions options_;
};

class LogicAgent final : public Agent {
 public:
  explicit LogicAgent(RuleSet rules) : rules_(std::move(rules)) {}
  AgentId id() const noexcept override { return AgentId::logic; }
  AgentVerdict evaluate(const Document& doc, const Classification&, const AgentContext&) const override {
    return logic_evaluate(doc, rules_);
  }
  const RuleSet& rule_set() const noexcept { return rules_; }

 private:
  RuleSet rules_;
};

// ---------------------------------------------------------------------------
// Explainability and keyword induction

/// Template explanation of a consensus decision. Byte-identical for identical
/// inputs.
std::string explain(const Document& doc, std::span<const AgentVerdict> verdicts,
                    const ConsensusResult& result);

struct KeywordInduction {
  double min_precision = 0.7;
  std::size_t min_count = 3;
  double precision_threshold = 0.7;  // copied into the induced map
};

/// Admits token -> label when the token occurs in at least min_count
/// documents and P(label | token present) >= min_precision; the weight is
/// that precision.
KeywordMap induce_lexical_map(std::span<const Document> docs, const LabelSpace& labels,
                              const KeywordInduction& options = {});
KeywordMap induce_lexical_map(std::span<const Document> docs, const KeywordInduction& options = {});

}  // namespace cascade
