#include "cascade/text.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

namespace cascade {
namespace {

void append_utf8(std::string& out, UChar32 cp) {
  char buf[U8_MAX_LENGTH];
  int32_t len = 0;
  UBool error = false;
  U8_APPEND(buf, len, U8_MAX_LENGTH, cp, error);
  if (!error) out.append(buf, static_cast<std::size_t>(len));
}

template <typename Fn>
void for_each_code_point(std::string_view text, Fn&& fn) {
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 cp;
    U8_NEXT(s, i, length, cp);
    fn(cp);
  }
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for_each_code_point(text, [&](UChar32 cp) {
    if (cp >= 0 && u_isalnum(cp)) {
      append_utf8(current, u_tolower(cp));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  });
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::string normalize_nfc(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) return std::string(text);
  icu::UnicodeString source = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  icu::UnicodeString normalized = nfc->normalize(source, status);
  if (U_FAILURE(status)) return std::string(text);
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

std::string strip_controls(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for_each_code_point(text, [&](UChar32 cp) {
    if (cp < 0) {
      append_utf8(out, 0xFFFD);
      return;
    }
    if (u_charType(cp) == U_CONTROL_CHAR) {
      if (u_isUWhiteSpace(cp)) pending_space = true;
      return;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    append_utf8(out, cp);
  });
  if (pending_space) out.push_back(' ');
  return out;
}

std::string trim(std::string_view text) {
  std::u32string cps = utf8_to_utf32(text);
  std::size_t begin = 0;
  std::size_t end = cps.size();
  while (begin < end && u_isUWhiteSpace(static_cast<UChar32>(cps[begin]))) ++begin;
  while (end > begin && u_isUWhiteSpace(static_cast<UChar32>(cps[end - 1]))) --end;
  return utf32_to_utf8(std::u32string_view(cps).substr(begin, end - begin));
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::string current;
  for_each_code_point(text, [&](UChar32 cp) {
    if (cp >= 0 && u_isUWhiteSpace(cp)) {
      if (!current.empty()) {
        words.push_back(std::move(current));
        current.clear();
      }
      return;
    }
    append_utf8(current, cp < 0 ? 0xFFFD : cp);
  });
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

std::u32string utf8_to_utf32(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for_each_code_point(text, [&](UChar32 cp) {
    out.push_back(static_cast<char32_t>(cp < 0 ? 0xFFFD : cp));
  });
  return out;
}

std::string utf32_to_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) append_utf8(out, static_cast<UChar32>(cp));
  return out;
}

}  // namespace cascade
