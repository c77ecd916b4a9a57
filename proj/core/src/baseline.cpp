#include "cascade/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "cascade/error.hpp"
#include "cascade/text.hpp"

namespace cascade {

using nlohmann::json;

std::vector<Classification> Classifier::classify_batch(std::span<const std::string> texts) const {
  std::vector<Classification> out;
  out.reserve(texts.size());
  for (const auto& text : texts) out.push_back(classify(text));
  return out;
}

std::size_t argmax_lowest(std::span<const double> values) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

namespace {

void check_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + " must be a positive finite number, got " + std::to_string(value));
  }
}

}  // namespace

BaselineModel BaselineModel::train(std::span<const Document> docs, BaselineOptions options) {
  check_positive(options.smoothing, "smoothing");
  check_positive(options.temperature, "temperature");
  LabelSpace labels = label_space_from_corpus(docs);

  std::vector<std::map<std::string, double>> term_counts;
  term_counts.reserve(docs.size());
  std::map<std::string, std::size_t> doc_freq;
  for (const auto& doc : docs) {
    std::map<std::string, double> counts;
    for (auto& token : tokenize(doc.text)) counts[std::move(token)] += 1.0;
    for (const auto& [token, _] : counts) ++doc_freq[token];
    term_counts.push_back(std::move(counts));
  }

  BaselineModel model(labels, options.smoothing, options.temperature);
  const auto n_docs = static_cast<double>(docs.size());
  for (const auto& [token, df] : doc_freq) {
    model.vocabulary_.emplace(token, model.tokens_.size());
    model.tokens_.push_back(token);
    model.idf_.push_back(std::log((1.0 + n_docs) / (1.0 + static_cast<double>(df))) + 1.0);
  }

  const std::size_t n_labels = labels.size();
  const std::size_t n_features = model.tokens_.size();
  std::vector<std::vector<double>> mass(n_labels, std::vector<double>(n_features, 0.0));
  std::vector<double> class_docs(n_labels, 0.0);
  for (std::size_t d = 0; d < docs.size(); ++d) {
    const std::size_t c = labels.by_name(*docs[d].gold).id;
    class_docs[c] += 1.0;
    for (const auto& [token, count] : term_counts[d]) {
      const std::size_t f = model.vocabulary_.at(token);
      mass[c][f] += count * model.idf_[f];
    }
  }

  model.log_prior_.resize(n_labels);
  model.log_likelihood_.assign(n_labels, std::vector<double>(n_features, 0.0));
  for (std::size_t c = 0; c < n_labels; ++c) {
    model.log_prior_[c] = std::log(class_docs[c] / n_docs);
    double total = 0.0;
    for (double m : mass[c]) total += m;
    const double denom = total + options.smoothing * static_cast<double>(n_features);
    for (std::size_t f = 0; f < n_features; ++f) {
      model.log_likelihood_[c][f] = std::log((mass[c][f] + options.smoothing) / denom);
    }
  }
  return model;
}

std::optional<std::size_t> BaselineModel::feature_index(std::string_view token) const {
  auto it = vocabulary_.find(std::string(token));
  if (it == vocabulary_.end()) return std::nullopt;
  return it->second;
}

std::vector<double> BaselineModel::log_scores(std::string_view text) const {
  std::map<std::size_t, double> query;
  for (const auto& token : tokenize(text)) {
    if (auto f = feature_index(token)) query[*f] += 1.0;
  }
  std::vector<double> scores = log_prior_;
  for (std::size_t c = 0; c < scores.size(); ++c) {
    for (const auto& [f, count] : query) scores[c] += count * idf_[f] * log_likelihood_[c][f];
  }
  return scores;
}

std::vector<double> BaselineModel::posterior(std::string_view text) const {
  std::vector<double> scores = log_scores(text);
  const double top = *std::max_element(scores.begin(), scores.end());
  double total = 0.0;
  for (double& s : scores) {
    s = std::exp((s - top) / temperature_);
    total += s;
  }
  for (double& s : scores) s /= total;
  return scores;
}

Classification BaselineModel::classify(std::string_view text) const {
  const std::vector<double> post = posterior(text);
  const std::size_t best = argmax_lowest(post);
  return Classification(labels_.by_id(best), std::clamp(post[best], 0.0, 1.0));
}

BaselineModel BaselineModel::with_temperature(double temperature) const {
  check_positive(temperature, "temperature");
  BaselineModel copy = *this;
  copy.temperature_ = temperature;
  return copy;
}

std::string BaselineModel::to_json() const {
  json j;
  j["kind"] = "tfidf_multinomial_nb";
  j["labels"] = labels_.names();
  j["smoothing"] = smoothing_;
  j["temperature"] = temperature_;
  j["tokens"] = tokens_;
  j["idf"] = idf_;
  j["log_prior"] = log_prior_;
  j["log_likelihood"] = log_likelihood_;
  return j.dump();
}

BaselineModel BaselineModel::from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    if (j.at("kind") != "tfidf_multinomial_nb") {
      throw Error(ErrorCode::Malformed, "unsupported model kind");
    }
    BaselineModel model(LabelSpace(j.at("labels").get<std::vector<std::string>>()),
                        j.at("smoothing").get<double>(), j.at("temperature").get<double>());
    check_positive(model.smoothing_, "smoothing");
    check_positive(model.temperature_, "temperature");
    model.tokens_ = j.at("tokens").get<std::vector<std::string>>();
    model.idf_ = j.at("idf").get<std::vector<double>>();
    model.log_prior_ = j.at("log_prior").get<std::vector<double>>();
    model.log_likelihood_ = j.at("log_likelihood").get<std::vector<std::vector<double>>>();
    const std::size_t n_features = model.tokens_.size();
    bool shapes_ok = model.idf_.size() == n_features &&
                     model.log_prior_.size() == model.labels_.size() &&
                     model.log_likelihood_.size() == model.labels_.size();
    for (const auto& row : model.log_likelihood_) shapes_ok = shapes_ok && row.size() == n_features;
    if (!shapes_ok) throw Error(ErrorCode::Malformed, "model arrays have inconsistent shapes");
    for (std::size_t f = 0; f < n_features; ++f) {
      if (!model.vocabulary_.emplace(model.tokens_[f], f).second) {
        throw Error(ErrorCode::Malformed, "duplicate vocabulary token '" + model.tokens_[f] + "'");
      }
    }
    return model;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Malformed, std::string("model JSON: ") + e.what());
  }
}

double fit_temperature(const BaselineModel& model, std::span<const Document> docs, double min_t, double max_t) {
  check_positive(min_t, "min_t");
  check_positive(max_t, "max_t");
  if (min_t > max_t) throw Error(ErrorCode::InvalidArgument, "min_t must not exceed max_t");
  if (docs.empty()) throw Error(ErrorCode::EmptyCorpus, "cannot fit a temperature on an empty corpus");

  const LabelSpace& labels = model.label_space();
  std::vector<std::vector<double>> scores;
  std::vector<std::size_t> gold;
  for (const auto& doc : docs) {
    if (!doc.gold) throw Error(ErrorCode::MissingGold, "document '" + doc.id + "' has no gold label");
    gold.push_back(labels.by_name(*doc.gold).id);
    scores.push_back(model.log_scores(doc.text));
  }
  // mean NLL at inverse temperature beta
  auto loss = [&](double beta) {
    double total = 0.0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
      const double top = *std::max_element(scores[i].begin(), scores[i].end());
      double z = 0.0;
      for (double s : scores[i]) z += std::exp(beta * (s - top));
      total += std::log(z) - beta * (scores[i][gold[i]] - top);
    }
    return total / static_cast<double>(scores.size());
  };

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 1.0 / max_t, hi = 1.0 / min_t;
  double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
  double f1 = loss(x1), f2 = loss(x2);
  for (int iter = 0; iter < 200 && hi - lo > 1e-9 * hi; ++iter) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = loss(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = loss(x2);
    }
  }
  const double beta = (lo + hi) / 2.0;
  return std::clamp(1.0 / beta, min_t, max_t);
}

}  // namespace cascade
