#include "cascade/agents.hpp"

#include <cmath>
#include <set>

#include <fmt/format.h>
#include <fmt/ranges.h>
#include <nlohmann/json.hpp>

#include "cascade/consensus.hpp"
#include "cascade/error.hpp"
#include "cascade/log.hpp"
#include "cascade/text.hpp"

namespace cascade {

using nlohmann::json;

namespace {

bool in_unit_interval_open_low(double v) { return v > 0.0 && v <= 1.0; }

json parse_config(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Malformed, std::string(what) + ": " + e.what());
  }
}

// Label id -> (label, accumulated mass). Ordered by id so ties resolve to the
// lowest id.
using Tally = std::map<std::size_t, std::pair<Label, double>>;

std::pair<Label, double> top_of(const Tally& tally) {
  const std::pair<Label, double>* best = nullptr;
  for (const auto& [_, entry] : tally) {
    if (!best || entry.second > best->second) best = &entry;
  }
  return *best;
}

}  // namespace

// ---------------------------------------------------------------------------
// KeywordMap

KeywordMap::KeywordMap(double precision_threshold) : precision_threshold_(precision_threshold) {
  if (!(precision_threshold >= 0.0 && precision_threshold <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "precision_threshold must lie in [0, 1]");
  }
}

void KeywordMap::add(std::string token, Label label, double weight) {
  const auto normalized = tokenize(token);
  if (normalized.size() != 1 || normalized.front() != token) {
    throw Error(ErrorCode::InvalidArgument, "keyword '" + token + "' is not a normalized token");
  }
  if (!in_unit_interval_open_low(weight)) {
    throw Error(ErrorCode::InvalidArgument, "keyword weight must lie in (0, 1], got " + std::to_string(weight));
  }
  entries_.insert_or_assign(std::move(token), KeywordEntry{std::move(label), weight});
}

const KeywordEntry* KeywordMap::find(std::string_view token) const {
  auto it = entries_.find(token);
  return it == entries_.end() ? nullptr : &it->second;
}

KeywordMap KeywordMap::from_json(std::string_view text, const LabelSpace& labels) {
  const json j = parse_config(text, "keyword map JSON");
  try {
    KeywordMap map(j.value("precision_threshold", 0.7));
    for (const auto& [token, entry] : j.at("entries").items()) {
      map.add(token, labels.by_name(entry.at("label").get<std::string>()), entry.at("weight").get<double>());
    }
    return map;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Malformed, std::string("keyword map JSON: ") + e.what());
  }
}

std::string KeywordMap::to_json() const {
  json j;
  j["precision_threshold"] = precision_threshold_;
  j["entries"] = json::object();
  for (const auto& [token, entry] : entries_) {
    j["entries"][token] = {{"label", entry.label.name}, {"weight", entry.weight}};
  }
  return j.dump(2);
}

// ---------------------------------------------------------------------------
// UserHistory

UserHistory::UserHistory(std::size_t capacity) : capacity_(capacity) {
  if (capacity == 0) throw Error(ErrorCode::InvalidArgument, "history capacity must be >= 1");
}

void UserHistory::record(const std::string& user_id, const Label& label) {
  auto& buffer = buffers_[user_id];
  buffer.push_back(label);
  while (buffer.size() > capacity_) buffer.pop_front();
}

std::vector<Label> UserHistory::recent(std::string_view user_id) const {
  auto it = buffers_.find(std::string(user_id));
  if (it == buffers_.end()) return {};
  return {it->second.begin(), it->second.end()};
}

// ---------------------------------------------------------------------------
// RuleSet

void RuleSet::add(Rule rule) {
  if (rule.id.empty()) throw Error(ErrorCode::InvalidArgument, "rule id must not be empty");
  for (const auto& r : rules_) {
    if (r.id == rule.id) throw Error(ErrorCode::InvalidArgument, "duplicate rule id '" + rule.id + "'");
  }
  if (!in_unit_interval_open_low(rule.confidence)) {
    throw Error(ErrorCode::InvalidArgument, "rule '" + rule.id + "' confidence must lie in (0, 1]");
  }
  std::regex compiled;
  try {
    compiled = std::regex(rule.pattern, std::regex::ECMAScript | std::regex::icase | std::regex::optimize);
  } catch (const std::regex_error& e) {
    throw Error(ErrorCode::InvalidArgument, "rule '" + rule.id + "' pattern does not compile: " + e.what());
  }
  rules_.push_back(std::move(rule));
  compiled_.push_back(std::move(compiled));
  if (rules_.size() == kRecommendedSize + 1) {
    log().info("rule set exceeds the recommended {} rules", kRecommendedSize);
  }
}

std::vector<std::size_t> RuleSet::matches(std::string_view text) const {
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < compiled_.size(); ++i) {
    if (std::regex_search(text.begin(), text.end(), compiled_[i])) hits.push_back(i);
  }
  return hits;
}

RuleSet RuleSet::from_json(std::string_view text, const LabelSpace& labels) {
  const json j = parse_config(text, "rule set JSON");
  try {
    RuleSet set;
    for (const auto& r : j.at("rules")) {
      set.add(Rule{r.at("id").get<std::string>(), r.at("pattern").get<std::string>(),
                   labels.by_name(r.at("label").get<std::string>()), r.at("confidence").get<double>()});
    }
    return set;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Malformed, std::string("rule set JSON: ") + e.what());
  }
}

std::string RuleSet::to_json() const {
  json rules = json::array();
  for (const auto& r : rules_) {
    rules.push_back({{"id", r.id}, {"pattern", r.pattern}, {"label", r.label.name}, {"confidence", r.confidence}});
  }
  return json{{"rules", rules}}.dump(2);
}

// ---------------------------------------------------------------------------
// Verdict agents

AgentVerdict lexical_evaluate(const Document& doc, const KeywordMap& map) {
  Tally tally;
  double total = 0.0;
  std::vector<std::string> hits;
  for (const auto& token : tokenize(doc.text)) {
    const KeywordEntry* entry = map.find(token);
    if (!entry) continue;
    auto [it, _] = tally.try_emplace(entry->label.id, entry->label, 0.0);
    it->second.second += entry->weight;
    total += entry->weight;
    hits.push_back(fmt::format("'{}'->{} ({:.2f})", token, entry->label.name, entry->weight));
  }
  if (tally.empty()) return AgentVerdict::abstain(AgentId::lexical, "no keyword matches");

  const auto [label, mass] = top_of(tally);
  const double confidence = std::min(1.0, mass / total);
  const std::string evidence = fmt::format("keywords {}", fmt::join(hits, ", "));
  if (confidence < map.precision_threshold()) {
    return AgentVerdict::abstain(
        AgentId::lexical, fmt::format("{}; keyword precision {:.2f} below threshold {:.2f}", evidence,
                                      confidence, map.precision_threshold()));
  }
  return AgentVerdict::suggest(AgentId::lexical, Classification(label, confidence),
                               fmt::format("{} point to {}", evidence, label.name));
}

AgentVerdict contextual_evaluate(const Document& doc, const UserHistory& history,
                                 const ContextualOptions& options) {
  if (!doc.user_id) return AgentVerdict::abstain(AgentId::contextual, "document has no user");
  const std::vector<Label> recent = history.recent(*doc.user_id);
  if (recent.empty()) return AgentVerdict::abstain(AgentId::contextual, "no history for user " + *doc.user_id);

  Tally tally;
  double total = 0.0;
  const std::size_t n = recent.size();
  for (std::size_t i = 0; i < n; ++i) {
    // i = 0 is the oldest entry.
    const double w = options.weighting == RecencyWeighting::linear
                         ? static_cast<double>(i + 1)
                         : std::pow(options.decay, static_cast<double>(n - 1 - i));
    auto [it, _] = tally.try_emplace(recent[i].id, recent[i], 0.0);
    it->second.second += w;
    total += w;
  }
  const auto [label, mass] = top_of(tally);
  std::vector<std::string> names;
  for (const auto& l : recent) names.push_back(l.name);
  return AgentVerdict::suggest(
      AgentId::contextual, Classification(label, std::min(1.0, mass / total)),
      fmt::format("last {} labels for user {} (oldest first): {}; recency-weighted share of {} is {:.2f}", n,
                  *doc.user_id, fmt::join(names, ", "), label.name, mass / total));
}

AgentVerdict logic_evaluate(const Document& doc, const RuleSet& rules) {
  const auto hits = rules.matches(doc.text);
  if (hits.empty()) return AgentVerdict::abstain(AgentId::logic, "no rule matches");
  std::size_t winner = hits.front();
  for (std::size_t i : hits) {
    if (rules.rules()[i].confidence > rules.rules()[winner].confidence) winner = i;
  }
  const Rule& rule = rules.rules()[winner];
  return AgentVerdict::suggest(AgentId::logic, Classification(rule.label, rule.confidence),
                               fmt::format("rule {} matched /{}/ and maps to {} ({} of {} rules matched)", rule.id,
                                           rule.pattern, rule.label.name, hits.size(), rules.size()));
}

ContextualAgent::ContextualAgent(ContextualOptions options) : options_(options) {
  if (options.weighting == RecencyWeighting::exponential && !(options.decay > 0.0 && options.decay <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "exponential decay must lie in (0, 1]");
  }
}

// ---------------------------------------------------------------------------
// Explainability

std::string explain(const Document& doc, std::span<const AgentVerdict> verdicts, const ConsensusResult& result) {
  std::string out = fmt::format("Document {} was escalated for multi-agent review.\n", doc.id);
  for (const auto& v : verdicts) {
    if (v.abstained()) {
      out += fmt::format("- {} agent abstained: {}.\n", to_string(v.agent()),
                         v.rationale().empty() ? "no evidence" : v.rationale());
    } else {
      out += fmt::format("- {} agent suggests \"{}\" with confidence {:.2f}: {}.\n", to_string(v.agent()),
                         v.suggestion()->label().name, v.suggestion()->confidence(), v.rationale());
    }
  }
  if (result.fallback_used) {
    out += fmt::format("No agent offered a usable suggestion, so the primary label \"{}\" (confidence {:.2f}) is kept.",
                       result.final.label().name, result.final.confidence());
    return out;
  }
  std::vector<std::string_view> agreed;
  for (auto id : result.agreed_agents) agreed.push_back(to_string(id));
  out += fmt::format("Final label \"{}\" with confidence {:.2f}, supported by {} of {} participating agents ({}).",
                     result.final.label().name, result.final.confidence(), result.agreed_agents.size(),
                     result.participants, fmt::join(agreed, ", "));
  return out;
}

// ---------------------------------------------------------------------------
// Keyword induction

KeywordMap induce_lexical_map(std::span<const Document> docs, const LabelSpace& labels,
                              const KeywordInduction& options) {
  if (docs.empty()) throw Error(ErrorCode::EmptyCorpus, "cannot induce keywords from an empty corpus");
  if (options.min_count == 0) throw Error(ErrorCode::InvalidArgument, "min_count must be >= 1");

  // token -> per-label document counts
  std::map<std::string, std::vector<std::size_t>> counts;
  for (const auto& doc : docs) {
    if (!doc.gold) throw Error(ErrorCode::MissingGold, "document '" + doc.id + "' has no gold label");
    const std::size_t y = labels.by_name(*doc.gold).id;
    const auto tokens = tokenize(doc.text);
    for (const auto& token : std::set<std::string>(tokens.begin(), tokens.end())) {
      auto& row = counts[token];
      if (row.empty()) row.assign(labels.size(), 0);
      ++row[y];
    }
  }

  KeywordMap map(options.precision_threshold);
  for (const auto& [token, row] : counts) {
    std::size_t df = 0;
    std::size_t best = 0;
    for (std::size_t y = 0; y < row.size(); ++y) {
      df += row[y];
      if (row[y] > row[best]) best = y;
    }
    if (df < options.min_count) continue;
    const double precision = static_cast<double>(row[best]) / static_cast<double>(df);
    if (precision >= options.min_precision) map.add(token, labels.by_id(best), precision);
  }
  return map;
}

KeywordMap induce_lexical_map(std::span<const Document> docs, const KeywordInduction& options) {
  if (docs.empty()) throw Error(ErrorCode::EmptyCorpus, "cannot induce keywords from an empty corpus");
  return induce_lexical_map(docs, label_space_from_corpus(docs), options);
}

}  // namespace cascade
