#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <cascade/classifier.hpp>
#include <cascade/domain.hpp>

namespace cascade::testing {

/// Returns a canned classification per text, or a default for unknown texts.
class FixedClassifier final : public Classifier {
 public:
  FixedClassifier(LabelSpace labels, Classification fallback) : labels_(std::move(labels)), fallback_(fallback) {}

  void set(std::string text, Classification c) { table_.insert_or_assign(std::move(text), c); }

  const LabelSpace& label_space() const override { return labels_; }
  Classification classify(std::string_view text) const override {
    auto it = table_.find(std::string(text));
    return it == table_.end() ? fallback_ : it->second;
  }

 private:
  LabelSpace labels_;
  Classification fallback_;
  std::map<std::string, Classification> table_;
};

inline Document doc(std::string id, std::string text, std::optional<std::string> gold = std::nullopt,
                    std::optional<std::string> user = std::nullopt, std::int64_t seq = 0) {
  return Document{std::move(id), std::move(text), std::move(user), seq, std::move(gold)};
}

}  // namespace cascade::testing
