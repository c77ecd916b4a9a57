#include "cascade/remote.hpp"

#include <httplib.h>

#include <nlohmann/json.hpp>

#include "cascade/error.hpp"

namespace cascade {

using nlohmann::json;

namespace {

struct Endpoint {
  std::string origin;  // scheme://host[:port]
  std::string base;    // path prefix without trailing slash
};

Endpoint parse_endpoint(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos || url.compare(0, scheme_end, "http") != 0) {
    throw Error(ErrorCode::InvalidArgument, "endpoint must be an http:// URL, got '" + url + "'");
  }
  const auto path_start = url.find('/', scheme_end + 3);
  Endpoint ep;
  ep.origin = url.substr(0, path_start);
  if (path_start != std::string::npos) ep.base = url.substr(path_start);
  while (!ep.base.empty() && ep.base.back() == '/') ep.base.pop_back();
  if (ep.origin.size() <= scheme_end + 3) {
    throw Error(ErrorCode::InvalidArgument, "endpoint has no host: '" + url + "'");
  }
  return ep;
}

httplib::Client make_client(const RemoteClassifierConfig& config, const Endpoint& ep) {
  httplib::Client client(ep.origin);
  const auto sec = config.timeout_ms / 1000;
  const auto usec = (config.timeout_ms % 1000) * 1000;
  client.set_connection_timeout(sec, usec);
  client.set_read_timeout(sec, usec);
  client.set_write_timeout(sec, usec);
  return client;
}

void validate(const RemoteClassifierConfig& config) {
  if (config.timeout_ms <= 0) throw Error(ErrorCode::InvalidArgument, "timeout_ms must be positive");
  if (config.batch_size == 0) throw Error(ErrorCode::InvalidArgument, "batch_size must be >= 1");
  parse_endpoint(config.endpoint_url);
}

std::string transport_message(const httplib::Result& res, const std::string& what) {
  if (!res) return what + " failed: " + httplib::to_string(res.error());
  return what + " returned HTTP " + std::to_string(res->status);
}

}  // namespace

std::string encode_classify_request(std::span<const std::string> texts) {
  json j;
  j["texts"] = json::array();
  for (const auto& t : texts) j["texts"].push_back(t);
  return j.dump();
}

std::vector<Classification> decode_classify_response(std::string_view body,
                                                     std::size_t expected_count,
                                                     const LabelSpace& labels) {
  json j;
  try {
    j = json::parse(body);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Protocol, std::string("response is not JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("labels") || !j.contains("confidences") ||
      !j["labels"].is_array() || !j["confidences"].is_array()) {
    throw Error(ErrorCode::Protocol, "response needs 'labels' and 'confidences' arrays");
  }
  const auto& names = j["labels"];
  const auto& confs = j["confidences"];
  if (names.size() != confs.size() || names.size() != expected_count) {
    throw Error(ErrorCode::Protocol, "expected " + std::to_string(expected_count) +
                                         " results, got labels=" + std::to_string(names.size()) +
                                         " confidences=" + std::to_string(confs.size()));
  }
  std::vector<Classification> out;
  out.reserve(expected_count);
  for (std::size_t i = 0; i < expected_count; ++i) {
    if (!names[i].is_string()) throw Error(ErrorCode::Protocol, "label " + std::to_string(i) + " is not a string");
    if (!confs[i].is_number()) {
      throw Error(ErrorCode::Protocol, "confidence " + std::to_string(i) + " is not a number");
    }
    const auto name = names[i].get<std::string>();
    const double c = confs[i].get<double>();
    if (!(c >= 0.0 && c <= 1.0)) {
      throw Error(ErrorCode::Protocol, "confidence " + std::to_string(c) + " outside [0, 1]");
    }
    auto label = labels.find(name);
    if (!label) throw Error(ErrorCode::UnknownLabel, "service returned unknown label '" + name + "'");
    out.emplace_back(*label, c);
  }
  return out;
}

std::vector<std::string> decode_health_response(std::string_view body) {
  try {
    const json j = json::parse(body);
    if (j.at("status") != "ok") throw Error(ErrorCode::Protocol, "service status is not ok");
    return j.at("labels").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Protocol, std::string("malformed /health body: ") + e.what());
  }
}

RemoteClassifier::RemoteClassifier(RemoteClassifierConfig config, LabelSpace labels)
    : config_(std::move(config)), labels_(std::move(labels)) {
  validate(config_);
}

RemoteClassifier RemoteClassifier::connect(RemoteClassifierConfig config) {
  validate(config);
  const Endpoint ep = parse_endpoint(config.endpoint_url);
  auto client = make_client(config, ep);
  auto res = client.Get(ep.base + "/health");
  if (!res || res->status != 200) throw Error(ErrorCode::Transport, transport_message(res, "GET /health"));
  return RemoteClassifier(std::move(config), LabelSpace(decode_health_response(res->body)));
}

std::vector<std::string> RemoteClassifier::health() const {
  const Endpoint ep = parse_endpoint(config_.endpoint_url);
  auto client = make_client(config_, ep);
  auto res = client.Get(ep.base + "/health");
  if (!res || res->status != 200) throw Error(ErrorCode::Transport, transport_message(res, "GET /health"));
  return decode_health_response(res->body);
}

Classification RemoteClassifier::classify(std::string_view text) const {
  const std::string one(text);
  return classify_batch(std::span<const std::string>(&one, 1)).front();
}

std::vector<Classification> RemoteClassifier::classify_batch(std::span<const std::string> texts) const {
  return remote_classify_batch(config_, labels_, texts);
}

std::vector<Classification> remote_classify_batch(const RemoteClassifierConfig& config,
                                                  const LabelSpace& labels,
                                                  std::span<const std::string> texts) {
  validate(config);
  if (texts.empty()) throw Error(ErrorCode::InvalidArgument, "no texts to classify");
  const Endpoint ep = parse_endpoint(config.endpoint_url);
  auto client = make_client(config, ep);

  std::vector<Classification> out;
  out.reserve(texts.size());
  for (std::size_t start = 0; start < texts.size(); start += config.batch_size) {
    const auto batch = texts.subspan(start, std::min(config.batch_size, texts.size() - start));
    auto res = client.Post(ep.base + "/classify", encode_classify_request(batch), "application/json");
    if (!res) throw Error(ErrorCode::Transport, transport_message(res, "POST /classify"));
    if (res->status != 200) {
      throw Error(ErrorCode::Transport, transport_message(res, "POST /classify") + ": " + res->body);
    }
    for (auto& c : decode_classify_response(res->body, batch.size(), labels)) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace cascade
