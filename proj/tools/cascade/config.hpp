#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <cascade/data.hpp>
#include <cascade/evaluation.hpp>
#include <cascade/pipeline.hpp>

namespace cascade::cli {

enum class PrimaryKind { baseline, remote };

/// Everything a command needs. Relative paths in a config file are resolved
/// against the directory holding that file.
struct RunConfig {
  std::optional<CorpusSpec> corpus;       // labeled corpus: train/validation/test split
  std::optional<CorpusSpec> eval_corpus;  // optional separate evaluation corpus
  std::optional<std::filesystem::path> rules;
  std::optional<std::filesystem::path> artifacts;  // directory written by `train`
  std::optional<std::filesystem::path> out;

  double tau = 0.7;
  std::uint64_t seed = 42;
  PrimaryKind primary = PrimaryKind::baseline;
  std::string endpoint;
  int timeout_ms = 10000;
  std::size_t batch_size = 32;

  PipelineOptions pipeline;
  std::vector<double> sweep_taus;  // empty: 0.0, 0.1, ..., 1.0
  std::vector<AblationSpec> ablations;  // empty: the default five
  double required_improvement = 0.02;   // accuracy margin for --require-improvement

  void validate() const;
};

/// Parses a config file. Throws cascade::Error (Config / Io).
RunConfig load_config(const std::filesystem::path& path);
RunConfig parse_config(std::string_view json, const std::filesystem::path& base_dir);

std::vector<double> default_sweep_taus();

}  // namespace cascade::cli
