#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cascade {

/// A class label. The id is the label's insertion index in its LabelSpace.
struct Label {
  std::string name;
  std::size_t id = 0;

  friend bool operator==(const Label&, const Label&) = default;
};

/// Ordered, case-sensitive set of at least two labels.
class LabelSpace {
 public:
  explicit LabelSpace(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  Label by_id(std::size_t id) const;
  Label by_name(std::string_view name) const;  // throws UnknownLabel
  std::optional<Label> find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  friend bool operator==(const LabelSpace& a, const LabelSpace& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct Document {
  std::string id;
  std::string text;
  std::optional<std::string> user_id;
  std::int64_t seq = 0;
  std::optional<std::string> gold;  // label name; evaluation corpora only

  friend bool operator==(const Document&, const Document&) = default;
};

/// Distinct gold labels in order of first appearance.
LabelSpace label_space_from_corpus(std::span<const Document> docs);

/// A label with a confidence in [0, 1].
class Classification {
 public:
  Classification(Label label, double confidence);

  const Label& label() const noexcept { return label_; }
  double confidence() const noexcept { return confidence_; }

  friend bool operator==(const Classification&, const Classification&) = default;

 private:
  Label label_;
  double confidence_;
};

enum class AgentId : std::uint8_t { lexical, contextual, logic };

inline constexpr std::array<AgentId, 3> kAllAgents = {AgentId::lexical, AgentId::contextual,
                                                      AgentId::logic};

std::string_view to_string(AgentId id) noexcept;
std::optional<AgentId> agent_from_string(std::string_view name) noexcept;

/// One agent's answer for one document. An empty suggestion is an abstention.
class AgentVerdict {
 public:
  static AgentVerdict suggest(AgentId agent, Classification suggestion, std::string rationale);
  static AgentVerdict abstain(AgentId agent, std::string rationale = {});

  AgentId agent() const noexcept { return agent_; }
  bool abstained() const noexcept { return !suggestion_.has_value(); }
  const std::optional<Classification>& suggestion() const noexcept { return suggestion_; }
  const std::string& rationale() const noexcept { return rationale_; }

  friend bool operator==(const AgentVerdict&, const AgentVerdict&) = default;

 private:
  AgentVerdict(AgentId agent, std::optional<Classification> suggestion, std::string rationale)
      : agent_(agent), suggestion_(std::move(suggestion)), rationale_(std::move(rationale)) {}

  AgentId agent_;
  std::optional<Classification> suggestion_;
  std::string rationale_;
};

}  // namespace cascade
