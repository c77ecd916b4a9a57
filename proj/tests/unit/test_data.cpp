#include <gtest/gtest.h>

#include <filesystem>
#include <map>
#include <random>

#include <cascade/data.hpp>
#include <cascade/error.hpp>

namespace cascade {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("cascade-data-" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

TEST(Data, SmsTsvRecord) {
  TempDir dir;
  write_file(dir.path() / "sms.tsv", "ham\tOk lar... Joking wif u oni\nspam\tFree entry now\n");
  const auto docs = load_corpus({CorpusFormat::sms_tsv, dir.path() / "sms.tsv"});
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[0].text, "Ok lar... Joking wif u oni");
  EXPECT_EQ(docs[0].gold, "ham");
  EXPECT_EQ(docs[0].id, "1");
  EXPECT_EQ(docs[1].seq, 1);
}

TEST(Data, AgNewsIndexMapsToName) {
  TempDir dir;
  write_file(dir.path() / "ag.csv",
             "Class Index,Title,Description\n"
             "3,\"Wall St. Bears Claw Back\",\"Short-sellers, Wall Street's dwindling band\"\n"
             "1,Title,\"He said \"\"hi\"\"\"\n");
  const auto docs = load_corpus({CorpusFormat::ag_csv, dir.path() / "ag.csv"});
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[0].gold, "Business");
  EXPECT_EQ(docs[0].text, "Wall St. Bears Claw Back Short-sellers, Wall Street's dwindling band");
  EXPECT_EQ(docs[1].gold, "World");
  EXPECT_EQ(docs[1].text, "Title He said \"hi\"");
}

TEST(Data, AgNewsBadIndex) {
  TempDir dir;
  write_file(dir.path() / "ag.csv", "1,a,b\n5,a,b\n");
  try {
    load_corpus({CorpusFormat::ag_csv, dir.path() / "ag.csv"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Malformed);
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Data, ImdbDirectory) {
  TempDir dir;
  fs::create_directories(dir.path() / "pos");
  fs::create_directories(dir.path() / "neg");
  write_file(dir.path() / "pos" / "1_9.txt", "Loved it.");
  write_file(dir.path() / "pos" / "0_8.txt", "Great film.");
  write_file(dir.path() / "neg" / "2_1.txt", "Dull.");
  const auto docs = load_corpus({CorpusFormat::imdb_dir, dir.path()});
  ASSERT_EQ(docs.size(), 3u);
  EXPECT_EQ(docs[0].id, "pos/0_8.txt");
  EXPECT_EQ(docs[1].id, "pos/1_9.txt");
  EXPECT_EQ(docs[2].gold, "neg");
}

TEST(Data, JsonlMissingTextNamesTheLine) {
  try {
    parse_jsonl("{\"text\": \"fine\"}\n\n{\"label\": \"x\"}\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Malformed);
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_EQ(code_of([] { parse_jsonl("{not json}\n"); }), ErrorCode::Malformed);
  EXPECT_EQ(code_of([] { parse_jsonl("{\"text\": 3}\n"); }), ErrorCode::Malformed);
  EXPECT_EQ(code_of([] { parse_jsonl("{\"text\": \"\\u0001 \"}\n"); }), ErrorCode::Malformed);
}

TEST(Data, JsonlOptionalFieldsAndCustomNames) {
  const auto docs = parse_jsonl("{\"body\": \"hello\", \"cls\": \"a\"}\n{\"body\": \"x\", \"uid\": \"u1\"}\n",
                                CorpusSpec{CorpusFormat::jsonl, {}, "key", "body", "cls", "uid"});
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[0].id, "1");
  EXPECT_EQ(docs[0].gold, "a");
  EXPECT_FALSE(docs[0].user_id);
  EXPECT_EQ(docs[1].user_id, "u1");
  EXPECT_FALSE(docs[1].gold);
}

TEST(Data, TextIsCleaned) {
  // decomposed e + combining acute composes to U+00E9, controls vanish
  const auto docs = parse_jsonl("{\"text\": \"  cafe\\u0301\\u0007 \"}\n");
  EXPECT_EQ(docs[0].text, "caf\xC3\xA9");
}

TEST(Data, MissingPathAndEmptyCorpus) {
  TempDir dir;
  EXPECT_EQ(code_of([&] { load_corpus({CorpusFormat::jsonl, dir.path() / "nope.jsonl"}); }), ErrorCode::Io);
  write_file(dir.path() / "empty.jsonl", "\n\n");
  EXPECT_EQ(code_of([&] { load_corpus({CorpusFormat::jsonl, dir.path() / "empty.jsonl"}); }),
            ErrorCode::EmptyCorpus);
}

TEST(Data, RoundTripAndRepeatableLoads) {
  const auto path = fs::path(CASCADE_DATA_DIR) / "fixtures" / "intent.jsonl";
  const auto a = load_corpus({CorpusFormat::jsonl, path});
  const auto b = load_corpus({CorpusFormat::jsonl, path});
  EXPECT_EQ(a, b);
  EXPECT_EQ(parse_jsonl(to_jsonl(a)), a);
}

std::vector<Document> labeled(std::size_t n, std::size_t classes) {
  std::vector<Document> docs;
  for (std::size_t i = 0; i < n; ++i) {
    docs.push_back({"d" + std::to_string(i), "text " + std::to_string(i), std::nullopt, static_cast<std::int64_t>(i),
                    "c" + std::to_string(i % classes)});
  }
  return docs;
}

TEST(Split, SizesAndDisjointness) {
  const auto docs = labeled(10, 2);
  const auto s = split(docs, {}, 42);
  EXPECT_EQ(s.train.size(), 8u);
  EXPECT_EQ(s.validation.size(), 1u);
  EXPECT_EQ(s.test.size(), 1u);
  std::map<std::string, int> seen;
  for (const auto* part : {&s.train, &s.validation, &s.test}) {
    for (std::size_t i = 0; i < part->size(); ++i) {
      ++seen[(*part)[i].id];
      if (i > 0) {
        EXPECT_LT((*part)[i - 1].seq, (*part)[i].seq);
      }
    }
  }
  EXPECT_EQ(seen.size(), 10u);
}

TEST(Split, SeedDeterminism) {
  const auto docs = labeled(50, 3);
  const auto a = split(docs, {0.6, 0.2, 0.2}, 7);
  const auto b = split(docs, {0.6, 0.2, 0.2}, 7);
  EXPECT_EQ(a.train, b.train);
  EXPECT_EQ(a.test, b.test);
  const auto c = split(docs, {0.6, 0.2, 0.2}, 8);
  EXPECT_NE(a.train, c.train);
}

TEST(Split, StratifiedKeepsProportions) {
  const auto docs = labeled(90, 3);
  const auto s = split(docs, {0.6, 0.2, 0.2}, 1, true);
  for (const auto* part : {&s.train, &s.validation, &s.test}) {
    std::map<std::string, long> count;
    for (const auto& d : *part) ++count[*d.gold];
    const long expect = static_cast<long>(part->size()) / 3;
    for (const auto& [_, n] : count) EXPECT_LE(std::abs(n - expect), 1);
  }
}

TEST(Split, Errors) {
  const auto docs = labeled(10, 2);
  EXPECT_EQ(code_of([&] { split(docs, {0.8, 0.3, 0.1}, 1); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([&] { split({}, {}, 1); }), ErrorCode::EmptyCorpus);
  auto unlabeled = docs;
  unlabeled[3].gold.reset();
  EXPECT_EQ(code_of([&] { split(unlabeled, {}, 1, true); }), ErrorCode::MissingGold);
}

}  // namespace
}  // namespace cascade
