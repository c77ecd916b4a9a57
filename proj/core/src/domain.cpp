#include "cascade/domain.hpp"

#include <cmath>
#include <utility>

#include "cascade/error.hpp"

namespace cascade {

LabelSpace::LabelSpace(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() < 2) {
    throw Error(ErrorCode::InvalidArgument,
                "a label space needs at least 2 labels, got " + std::to_string(names_.size()));
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw Error(ErrorCode::InvalidArgument, "empty label name");
    if (!index_.emplace(names_[i], i).second) {
      throw Error(ErrorCode::InvalidArgument, "duplicate label '" + names_[i] + "'");
    }
  }
}

Label LabelSpace::by_id(std::size_t id) const {
  if (id >= names_.size()) {
    throw Error(ErrorCode::UnknownLabel, "label id " + std::to_string(id) + " out of range");
  }
  return Label{names_[id], id};
}

Label LabelSpace::by_name(std::string_view name) const {
  if (auto label = find(name)) return *label;
  throw Error(ErrorCode::UnknownLabel, "label '" + std::string(name) + "' not in label space");
}

std::optional<Label> LabelSpace::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return Label{it->first, it->second};
}

LabelSpace label_space_from_corpus(std::span<const Document> docs) {
  if (docs.empty()) throw Error(ErrorCode::EmptyCorpus, "no documents");
  std::vector<std::string> names;
  std::unordered_map<std::string, bool> seen;
  for (const auto& doc : docs) {
    if (!doc.gold) throw Error(ErrorCode::MissingGold, "document '" + doc.id + "' has no gold label");
    if (seen.emplace(*doc.gold, true).second) names.push_back(*doc.gold);
  }
  return LabelSpace(std::move(names));
}

Classification::Classification(Label label, double confidence)
    : label_(std::move(label)), confidence_(confidence) {
  if (!(confidence >= 0.0 && confidence <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "confidence must lie in [0, 1], got " + std::to_string(confidence));
  }
}

std::string_view to_string(AgentId id) noexcept {
  switch (id) {
    case AgentId::lexical: return "lexical";
    case AgentId::contextual: return "contextual";
    case AgentId::logic: return "logic";
  }
  return "unknown";
}

std::optional<AgentId> agent_from_string(std::string_view name) noexcept {
  for (auto id : kAllAgents) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

AgentVerdict AgentVerdict::suggest(AgentId agent, Classification suggestion, std::string rationale) {
  if (rationale.empty()) {
    throw Error(ErrorCode::InvalidArgument, "a suggesting verdict needs a rationale");
  }
  return AgentVerdict(agent, std::move(suggestion), std::move(rationale));
}

AgentVerdict AgentVerdict::abstain(AgentId agent, std::string rationale) {
  return AgentVerdict(agent, std::nullopt, std::move(rationale));
}

}  // namespace cascade
