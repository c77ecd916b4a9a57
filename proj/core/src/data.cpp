#include "cascade/data.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cascade/error.hpp"
#include "cascade/rng.hpp"
#include "cascade/text.hpp"

namespace cascade {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSplitStream = 0x5B117ULL;

std::string clean_text(std::string_view raw) { return trim(normalize_nfc(strip_controls(raw))); }

std::vector<std::string_view> lines_of(std::string_view content) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= content.size()) {
    auto end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    auto line = content.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

bool blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t'; });
}

void make_doc(std::string id, std::string_view raw_text, std::optional<std::string> label,
              std::optional<std::string> user, std::size_t line, std::vector<Document>& sink) {
  Document doc;
  doc.id = std::move(id);
  doc.text = clean_text(raw_text);
  if (doc.text.empty()) throw Error(ErrorCode::Malformed, line, "text is empty");
  if (label) {
    *label = clean_text(*label);
    if (label->empty()) throw Error(ErrorCode::Malformed, line, "label is empty");
  }
  doc.gold = std::move(label);
  doc.user_id = std::move(user);
  doc.seq = static_cast<std::int64_t>(sink.size());
  sink.push_back(std::move(doc));
}

// RFC 4180 fields of one line ("" escapes a quote inside a quoted field).
std::vector<std::string> parse_csv_line(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"' && field.empty() && !was_quoted) {
      quoted = was_quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
      was_quoted = false;
    } else {
      field.push_back(c);
    }
  }
  if (quoted) throw Error(ErrorCode::Malformed, line_no, "unterminated quoted field");
  fields.push_back(std::move(field));
  return fields;
}

std::optional<std::string> optional_string(const json& j, const std::string& key, std::size_t line) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  if (!j[key].is_string()) throw Error(ErrorCode::Malformed, line, "field '" + key + "' is not a string");
  return j[key].get<std::string>();
}

std::vector<Document> load_sms(std::string_view content) {
  std::vector<Document> docs;
  const auto lines = lines_of(content);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (blank(lines[i])) continue;
    const auto tab = lines[i].find('\t');
    if (tab == std::string_view::npos) throw Error(ErrorCode::Malformed, i + 1, "expected label<TAB>text");
    make_doc(std::to_string(docs.size() + 1), lines[i].substr(tab + 1), std::string(lines[i].substr(0, tab)),
             std::nullopt, i + 1, docs);
  }
  return docs;
}

std::vector<Document> load_ag(std::string_view content) {
  std::vector<Document> docs;
  const auto& names = ag_news_labels();
  const auto lines = lines_of(content);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (blank(lines[i])) continue;
    const auto fields = parse_csv_line(lines[i], i + 1);
    if (fields.size() != 3) {
      throw Error(ErrorCode::Malformed, i + 1, "expected 3 fields, got " + std::to_string(fields.size()));
    }
    const std::string index = trim(fields[0]);
    const bool numeric = !index.empty() && std::all_of(index.begin(), index.end(), ::isdigit);
    if (!numeric) {
      if (docs.empty() && i == 0) continue;  // header row
      throw Error(ErrorCode::Malformed, i + 1, "class index '" + index + "' is not a number");
    }
    const auto k = std::stoul(index);
    if (k < 1 || k > names.size()) {
      throw Error(ErrorCode::Malformed, i + 1, "class index " + index + " outside 1.." + std::to_string(names.size()));
    }
    make_doc(std::to_string(docs.size() + 1), fields[1] + " " + fields[2], names[k - 1], std::nullopt, i + 1, docs);
  }
  return docs;
}

std::vector<Document> load_imdb(const fs::path& root) {
  std::vector<Document> docs;
  std::size_t record = 0;
  for (const char* label : {"pos", "neg"}) {
    const fs::path dir = root / label;
    if (!fs::is_directory(dir)) throw Error(ErrorCode::Io, "missing directory " + dir.string());
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
      ++record;
      make_doc(std::string(label) + "/" + file.filename().string(), read_file(file), std::string(label),
               std::nullopt, record, docs);
    }
  }
  return docs;
}

}  // namespace

std::string_view to_string(CorpusFormat format) noexcept {
  switch (format) {
    case CorpusFormat::jsonl: return "jsonl";
    case CorpusFormat::sms_tsv: return "sms_tsv";
    case CorpusFormat::ag_csv: return "ag_csv";
    case CorpusFormat::imdb_dir: return "imdb_dir";
  }
  return "unknown";
}

std::optional<CorpusFormat> corpus_format_from_string(std::string_view name) noexcept {
  for (auto f : {CorpusFormat::jsonl, CorpusFormat::sms_tsv, CorpusFormat::ag_csv, CorpusFormat::imdb_dir}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

const std::vector<std::string>& ag_news_labels() {
  static const std::vector<std::string> names = {"World", "Sports", "Business", "Sci/Tech"};
  return names;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

std::vector<Document> parse_jsonl(std::string_view content, const CorpusSpec& fields) {
  std::vector<Document> docs;
  const auto lines = lines_of(content);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    if (blank(lines[i])) continue;
    json j;
    try {
      j = json::parse(lines[i]);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::Malformed, line_no, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw Error(ErrorCode::Malformed, line_no, "expected a JSON object");
    auto text = optional_string(j, fields.text_field, line_no);
    if (!text) throw Error(ErrorCode::Malformed, line_no, "missing \"" + fields.text_field + "\"");
    auto id = optional_string(j, fields.id_field, line_no);
    make_doc(id ? *id : std::to_string(docs.size() + 1), *text, optional_string(j, fields.label_field, line_no),
             optional_string(j, fields.user_field, line_no), line_no, docs);
  }
  return docs;
}

std::vector<Document> load_corpus(const CorpusSpec& spec) {
  if (!fs::exists(spec.path)) throw Error(ErrorCode::Io, "corpus path does not exist: " + spec.path.string());
  std::vector<Document> docs;
  switch (spec.format) {
    case CorpusFormat::jsonl: docs = parse_jsonl(read_file(spec.path), spec); break;
    case CorpusFormat::sms_tsv: docs = load_sms(read_file(spec.path)); break;
    case CorpusFormat::ag_csv: docs = load_ag(read_file(spec.path)); break;
    case CorpusFormat::imdb_dir: docs = load_imdb(spec.path); break;
  }
  if (docs.empty()) throw Error(ErrorCode::EmptyCorpus, "no documents in " + spec.path.string());
  return docs;
}

void write_jsonl(std::ostream& out, std::span<const Document> docs) {
  for (const auto& doc : docs) {
    json j{{"id", doc.id}, {"text", doc.text}};
    if (doc.gold) j["label"] = *doc.gold;
    if (doc.user_id) j["user_id"] = *doc.user_id;
    out << j.dump() << '\n';
  }
}

std::string to_jsonl(std::span<const Document> docs) {
  std::ostringstream ss;
  write_jsonl(ss, docs);
  return ss.str();
}

CorpusSplit split(std::span<const Document> docs, SplitFractions f, std::uint64_t seed, bool stratify) {
  if (docs.empty()) throw Error(ErrorCode::EmptyCorpus, "nothing to split");
  const bool valid = f.train > 0.0 && f.validation >= 0.0 && f.test >= 0.0 &&
                     f.train + f.validation + f.test <= 1.0 + 1e-9;
  if (!valid) throw Error(ErrorCode::InvalidArgument, "split fractions must be positive and sum to at most 1");
  const bool exhaustive = std::fabs(f.train + f.validation + f.test - 1.0) < 1e-9;

  // Groups of document indices: one group, or one per label in first-appearance order.
  std::vector<std::vector<std::size_t>> groups;
  if (stratify) {
    std::map<std::string, std::size_t> group_of;
    for (std::size_t i = 0; i < docs.size(); ++i) {
      if (!docs[i].gold) throw Error(ErrorCode::MissingGold, "stratified split needs gold labels");
      auto [it, inserted] = group_of.emplace(*docs[i].gold, groups.size());
      if (inserted) groups.emplace_back();
      groups[it->second].push_back(i);
    }
  } else {
    groups.emplace_back(docs.size());
    for (std::size_t i = 0; i < docs.size(); ++i) groups[0][i] = i;
  }

  CorpusSplit out;
  Rng rng(derive_seed(seed, kSplitStream));
  for (auto& group : groups) {
    for (std::size_t i = group.size(); i > 1; --i) std::swap(group[i - 1], group[rng.uniform_index(i)]);
    const auto n = static_cast<double>(group.size());
    const auto n_train = static_cast<std::size_t>(std::floor(n * f.train + 1e-9));
    const auto n_val = static_cast<std::size_t>(std::floor(n * f.validation + 1e-9));
    const std::size_t n_test =
        exhaustive ? group.size() - n_train - n_val : static_cast<std::size_t>(std::floor(n * f.test + 1e-9));
    std::size_t pos = 0;
    for (std::size_t k = 0; k < n_train; ++k) out.train.push_back(docs[group[pos++]]);
    for (std::size_t k = 0; k < n_val; ++k) out.validation.push_back(docs[group[pos++]]);
    for (std::size_t k = 0; k < n_test; ++k) out.test.push_back(docs[group[pos++]]);
  }
  auto by_seq = [](const Document& a, const Document& b) { return a.seq < b.seq; };
  std::stable_sort(out.train.begin(), out.train.end(), by_seq);
  std::stable_sort(out.validation.begin(), out.validation.end(), by_seq);
  std::stable_sort(out.test.begin(), out.test.end(), by_seq);
  return out;
}

}  // namespace cascade
