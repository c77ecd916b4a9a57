#include "config.hpp"

#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

#include <cascade/error.hpp>

namespace cascade::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::Config, "config: " + what); }

void only_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) bad(where + " must be an object");
  for (const auto& [key, _] : j.items()) {
    if (!allowed.count(key)) bad("unknown key '" + key + "' in " + where);
  }
}

fs::path resolve(const json& j, const fs::path& base) {
  if (!j.is_string()) bad("paths must be strings");
  fs::path p = j.get<std::string>();
  return p.is_relative() ? (base / p).lexically_normal() : p;
}

CorpusSpec parse_corpus(const json& j, const fs::path& base, const std::string& where) {
  CorpusSpec spec;
  if (j.is_string()) {
    spec.path = resolve(j, base);
    return spec;
  }
  only_keys(j, {"format", "path", "id_field", "text_field", "label_field", "user_field"}, where);
  if (!j.contains("path")) bad(where + ".path is required");
  spec.path = resolve(j.at("path"), base);
  if (j.contains("format")) {
    auto format = corpus_format_from_string(j.at("format").get<std::string>());
    if (!format) bad("unknown corpus format '" + j.at("format").get<std::string>() + "'");
    spec.format = *format;
  }
  if (j.contains("id_field")) spec.id_field = j.at("id_field").get<std::string>();
  if (j.contains("text_field")) spec.text_field = j.at("text_field").get<std::string>();
  if (j.contains("label_field")) spec.label_field = j.at("label_field").get<std::string>();
  if (j.contains("user_field")) spec.user_field = j.at("user_field").get<std::string>();
  return spec;
}

template <typename T>
void maybe(const json& j, const char* key, T& target) {
  if (j.contains(key)) target = j.at(key).get<T>();
}

}  // namespace

std::vector<double> default_sweep_taus() {
  std::vector<double> taus;
  for (int i = 0; i <= 10; ++i) taus.push_back(i / 10.0);
  return taus;
}

void RunConfig::validate() const {
  if (!(tau >= 0.0 && tau <= 1.0)) bad("tau must be in [0, 1]");
  if (primary == PrimaryKind::remote && endpoint.empty()) bad("primary 'remote' needs an endpoint");
  if (batch_size == 0) bad("batch_size must be positive");
  if (timeout_ms <= 0) bad("timeout_ms must be positive");
  for (std::size_t i = 0; i < sweep_taus.size(); ++i) {
    if (!(sweep_taus[i] >= 0.0 && sweep_taus[i] <= 1.0)) bad("sweep taus must be in [0, 1]");
    if (i > 0 && sweep_taus[i] < sweep_taus[i - 1]) bad("sweep taus must be ascending");
  }
  if (!std::isfinite(required_improvement)) bad("required_improvement must be finite");
}

RunConfig parse_config(std::string_view text, const fs::path& base) {
  RunConfig cfg;
  try {
    const json j = json::parse(text);
    only_keys(j,
              {"corpus", "eval_corpus", "rules", "artifacts", "out", "tau", "seed", "primary", "endpoint",
               "timeout_ms", "batch_size", "split", "baseline", "keywords", "contextual", "history_capacity",
               "sweep_taus", "ablations", "required_improvement"},
              "config");
    if (j.contains("corpus")) cfg.corpus = parse_corpus(j.at("corpus"), base, "corpus");
    if (j.contains("eval_corpus")) cfg.eval_corpus = parse_corpus(j.at("eval_corpus"), base, "eval_corpus");
    if (j.contains("rules")) cfg.rules = resolve(j.at("rules"), base);
    if (j.contains("artifacts")) cfg.artifacts = resolve(j.at("artifacts"), base);
    if (j.contains("out")) cfg.out = resolve(j.at("out"), base);
    maybe(j, "tau", cfg.tau);
    maybe(j, "seed", cfg.seed);
    if (j.contains("primary")) {
      const auto name = j.at("primary").get<std::string>();
      if (name == "baseline") cfg.primary = PrimaryKind::baseline;
      else if (name == "remote") cfg.primary = PrimaryKind::remote;
      else bad("primary must be 'baseline' or 'remote'");
    }
    maybe(j, "endpoint", cfg.endpoint);
    maybe(j, "timeout_ms", cfg.timeout_ms);
    maybe(j, "batch_size", cfg.batch_size);
    maybe(j, "history_capacity", cfg.pipeline.history_capacity);
    maybe(j, "required_improvement", cfg.required_improvement);

    if (j.contains("split")) {
      const auto& s = j.at("split");
      only_keys(s, {"train", "validation", "test", "stratify"}, "split");
      maybe(s, "train", cfg.pipeline.fractions.train);
      maybe(s, "validation", cfg.pipeline.fractions.validation);
      maybe(s, "test", cfg.pipeline.fractions.test);
      maybe(s, "stratify", cfg.pipeline.stratify);
    }
    if (j.contains("baseline")) {
      const auto& b = j.at("baseline");
      only_keys(b, {"smoothing", "temperature", "calibrate_temperature"}, "baseline");
      maybe(b, "smoothing", cfg.pipeline.baseline.smoothing);
      maybe(b, "temperature", cfg.pipeline.baseline.temperature);
      maybe(b, "calibrate_temperature", cfg.pipeline.calibrate_temperature);
    }
    if (j.contains("keywords")) {
      const auto& k = j.at("keywords");
      only_keys(k, {"min_precision", "min_count", "precision_threshold"}, "keywords");
      maybe(k, "min_precision", cfg.pipeline.keywords.min_precision);
      maybe(k, "min_count", cfg.pipeline.keywords.min_count);
      maybe(k, "precision_threshold", cfg.pipeline.keywords.precision_threshold);
    }
    if (j.contains("contextual")) {
      const auto& c = j.at("contextual");
      only_keys(c, {"weighting", "decay"}, "contextual");
      if (c.contains("weighting")) {
        const auto w = c.at("weighting").get<std::string>();
        if (w == "linear") cfg.pipeline.contextual.weighting = RecencyWeighting::linear;
        else if (w == "exponential") cfg.pipeline.contextual.weighting = RecencyWeighting::exponential;
        else bad("contextual.weighting must be 'linear' or 'exponential'");
      }
      maybe(c, "decay", cfg.pipeline.contextual.decay);
    }
    if (j.contains("sweep_taus")) cfg.sweep_taus = j.at("sweep_taus").get<std::vector<double>>();
    if (j.contains("ablations")) {
      for (const auto& a : j.at("ablations")) {
        only_keys(a, {"name", "agents", "escalation"}, "ablations[]");
        AblationSpec spec;
        spec.name = a.at("name").get<std::string>();
        for (const auto& name : a.value("agents", std::vector<std::string>{})) {
          auto id = agent_from_string(name);
          if (!id) bad("unknown agent '" + name + "'");
          spec.agents.insert(*id);
        }
        spec.escalation_enabled = a.value("escalation", true);
        cfg.ablations.push_back(std::move(spec));
      }
    }
  } catch (const json::exception& e) {
    bad(e.what());
  }
  cfg.pipeline.seed = cfg.seed;
  return cfg;
}

RunConfig load_config(const fs::path& path) {
  return parse_config(read_file(path), path.parent_path());
}

}  // namespace cascade::cli
