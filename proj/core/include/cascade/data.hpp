#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cascade/domain.hpp"

namespace cascade {

enum class CorpusFormat {
  jsonl,     // {"id"?, "text", "label"?, "user_id"?} per line
  sms_tsv,   // label<TAB>text
  ag_csv,    // class_index,title,description (index 1..4)
  imdb_dir,  // pos/*.txt and neg/*.txt
};

std::string_view to_string(CorpusFormat format) noexcept;
std::optional<CorpusFormat> corpus_format_from_string(std::string_view name) noexcept;

struct CorpusSpec {
  CorpusFormat format = CorpusFormat::jsonl;
  std::filesystem::path path;
  // JSONL field names.
  std::string id_field = "id";
  std::string text_field = "text";
  std::string label_field = "label";
  std::string user_field = "user_id";
};

/// AG News class names for class indices 1..4.
const std::vector<std::string>& ag_news_labels();

/// Loads a corpus. Text is NFC-normalized, control characters are stripped
/// and surrounding whitespace trimmed; seq follows record order and records
/// without an id get their 1-based record number. Throws Io, Malformed (with
/// line number) or EmptyCorpus.
std::vector<Document> load_corpus(const CorpusSpec& spec);

/// Same, reading JSONL from a string (line numbers are 1-based).
std::vector<Document> parse_jsonl(std::string_view content, const CorpusSpec& fields = {});

/// Canonical JSONL: one object per document, optional fields omitted.
void write_jsonl(std::ostream& out, std::span<const Document> docs);
std::string to_jsonl(std::span<const Document> docs);

std::string read_file(const std::filesystem::path& path);  // throws Io
void write_file(const std::filesystem::path& path, std::string_view content);

struct SplitFractions {
  double train = 0.8;
  double validation = 0.1;
  double test = 0.1;
};

struct CorpusSplit {
  std::vector<Document> train;
  std::vector<Document> validation;
  std::vector<Document> test;
};

/// Seeded shuffle, then contiguous slicing (per label when stratified).
/// Slice sizes are floor(n * fraction) for train and validation; test takes
/// the remainder when the fractions sum to 1, floor(n * test) otherwise.
/// Each slice is returned in seq order.
CorpusSplit split(std::span<const Document> docs, SplitFractions fractions, std::uint64_t seed,
                  bool stratify = false);

}  // namespace cascade
