#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cascade {

/// Lowercased runs of Unicode letters and digits; everything else separates.
/// Invalid UTF-8 bytes act as separators.
std::vector<std::string> tokenize(std::string_view text);

/// NFC-normalizes UTF-8 text. Invalid input is returned unchanged.
std::string normalize_nfc(std::string_view text);

/// Drops control characters; tab, newline and the other whitespace controls
/// become a single space so adjacent words stay apart.
std::string strip_controls(std::string_view text);

std::string trim(std::string_view text);

/// Splits on ASCII/Unicode whitespace, keeping words verbatim.
std::vector<std::string> split_words(std::string_view text);

/// Decodes UTF-8 into code points and back. Invalid bytes map to U+FFFD.
std::u32string utf8_to_utf32(std::string_view text);
std::string utf32_to_utf8(std::u32string_view text);

}  // namespace cascade
