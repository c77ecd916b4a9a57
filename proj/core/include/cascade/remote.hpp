#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cascade/classifier.hpp"
#include "cascade/domain.hpp"

namespace cascade {

struct RemoteClassifierConfig {
  std::string endpoint_url;  // e.g. http://127.0.0.1:8080 or http://host/prefix
  int timeout_ms = 10000;
  std::size_t batch_size = 32;
};

// Classify wire protocol. POST <endpoint>/classify
//   request:  {"texts": [string, ...]}
//   response: {"labels": [string, ...], "confidences": [number, ...]}
// GET <endpoint>/health -> 200 {"status": "ok", "labels": [...]}
std::string encode_classify_request(std::span<const std::string> texts);

/// Validates arity, label membership and confidence range.
/// Throws Protocol or UnknownLabel.
std::vector<Classification> decode_classify_response(std::string_view body,
                                                     std::size_t expected_count,
                                                     const LabelSpace& labels);

/// Label names advertised by a /health body. Throws Protocol.
std::vector<std::string> decode_health_response(std::string_view body);

/// Client for a classifier served over the wire protocol. Batches are sent
/// in order and their results concatenated, so output position i always
/// answers input text i.
class RemoteClassifier final : public Classifier {
 public:
  RemoteClassifier(RemoteClassifierConfig config, LabelSpace labels);

  /// Builds a client whose label space is taken from the service's /health.
  static RemoteClassifier connect(RemoteClassifierConfig config);

  const LabelSpace& label_space() const override { return labels_; }
  Classification classify(std::string_view text) const override;
  std::vector<Classification> classify_batch(std::span<const std::string> texts) const override;

  std::vector<std::string> health() const;
  const RemoteClassifierConfig& config() const noexcept { return config_; }

 private:
  RemoteClassifierConfig config_;
  LabelSpace labels_;
};

std::vector<Classification> remote_classify_batch(const RemoteClassifierConfig& config,
                                                  const LabelSpace& labels,
                                                  std::span<const std::string> texts);

}  // namespace cascade
