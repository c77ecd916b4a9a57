#include <gtest/gtest.h>

#include <cascade/text.hpp>

namespace cascade {
namespace {

using Tokens = std::vector<std::string>;

TEST(Tokenize, LowercasesAndSplitsOnPunctuation) {
  EXPECT_EQ(tokenize("I need more information!"), (Tokens{"i", "need", "more", "information"}));
  EXPECT_EQ(tokenize(""), Tokens{});
  EXPECT_EQ(tokenize("order-process v2"), (Tokens{"order", "process", "v2"}));
}

TEST(Tokenize, HandlesNonAscii) {
  EXPECT_EQ(tokenize("Ärger über Straße"), (Tokens{"ärger", "über", "straße"}));
  EXPECT_EQ(tokenize("\xff\xfe ok"), Tokens{"ok"});  // invalid bytes separate
}

TEST(Text, NfcComposesCombiningMarks) {
  EXPECT_EQ(normalize_nfc("e\xcc\x81"), "\xc3\xa9");  // e + U+0301 -> é
  EXPECT_EQ(normalize_nfc("plain"), "plain");
}

TEST(Text, StripControlsKeepsWordsApart) {
  EXPECT_EQ(strip_controls("a\tb\nc\x01" "d"), "a b cd");
  EXPECT_EQ(trim("  x y \n"), "x y");
}

TEST(Text, SplitWordsKeepsPunctuation) {
  EXPECT_EQ(split_words(" Ok lar...  Joking "), (Tokens{"Ok", "lar...", "Joking"}));
}

TEST(Text, Utf32RoundTrip) {
  const std::string s = "naïve ☃";
  EXPECT_EQ(utf32_to_utf8(utf8_to_utf32(s)), s);
  EXPECT_EQ(utf8_to_utf32(s).size(), 7u);
}

}  // namespace
}  // namespace cascade
