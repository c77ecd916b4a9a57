#include "cascade/augment.hpp"

#include <unicode/uchar.h>

#include <string>

#include "cascade/rng.hpp"
#include "cascade/text.hpp"

namespace cascade {
namespace {

constexpr std::uint64_t kAugmentStream = 0xA46E0000ULL;

std::string join_words(const std::vector<std::string>& words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out.push_back(' ');
    out += words[i];
  }
  return out;
}

std::string swap_adjacent(std::vector<std::string> words, Rng& rng) {
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (utf8_to_utf32(words[i]).size() >= 4) eligible.push_back(i);
  }
  if (eligible.empty()) return join_words(words);
  const std::size_t w = eligible[rng.uniform_index(eligible.size())];
  std::u32string cps = utf8_to_utf32(words[w]);
  const std::size_t pos = rng.uniform_index(cps.size() - 1);
  std::swap(cps[pos], cps[pos + 1]);
  words[w] = utf32_to_utf8(cps);
  return join_words(words);
}

std::string delete_words(const std::vector<std::string>& words, Rng& rng) {
  std::vector<std::string> kept;
  for (const auto& word : words) {
    if (rng.uniform01() >= kWordDeletionRate) kept.push_back(word);
  }
  if (kept.empty() && !words.empty()) kept.push_back(words[rng.uniform_index(words.size())]);
  return join_words(kept);
}

std::string duplicate_word(std::vector<std::string> words, Rng& rng) {
  if (words.empty()) return {};
  const std::size_t w = rng.uniform_index(words.size());
  words.insert(words.begin() + static_cast<std::ptrdiff_t>(w), words[w]);
  return join_words(words);
}

std::string flip_case(std::vector<std::string> words, Rng& rng) {
  if (words.empty()) return {};
  const std::size_t w = rng.uniform_index(words.size());
  std::u32string cps = utf8_to_utf32(words[w]);
  for (auto& cp : cps) {
    const auto c = static_cast<UChar32>(cp);
    if (u_isupper(c)) {
      cp = static_cast<char32_t>(u_tolower(c));
    } else if (u_islower(c)) {
      cp = static_cast<char32_t>(u_toupper(c));
    }
  }
  words[w] = utf32_to_utf8(cps);
  return join_words(words);
}

}  // namespace

std::string_view to_string(Perturbation kind) noexcept {
  switch (kind) {
    case Perturbation::char_swap: return "char_swap";
    case Perturbation::word_deletion: return "word_deletion";
    case Perturbation::word_duplication: return "word_duplication";
    case Perturbation::case_flip: return "case_flip";
    case Perturbation::identity: return "identity";
  }
  return "unknown";
}

std::optional<Perturbation> perturbation_from_string(std::string_view name) noexcept {
  for (auto kind : {Perturbation::char_swap, Perturbation::word_deletion, Perturbation::word_duplication,
                    Perturbation::case_flip, Perturbation::identity}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

std::set<Perturbation> default_perturbations() {
  return {Perturbation::char_swap, Perturbation::word_deletion, Perturbation::word_duplication,
          Perturbation::case_flip};
}

std::vector<Document> augment(const Document& doc, std::uint64_t seed, const std::set<Perturbation>& kinds) {
  std::vector<Document> out;
  const std::vector<std::string> words = split_words(doc.text);
  for (Perturbation kind : kinds) {
    Rng rng(derive_seed(seed, kAugmentStream + static_cast<std::uint64_t>(kind), hash_string(doc.id)));
    Document variant = doc;
    variant.id = doc.id + "~" + std::string(to_string(kind));
    switch (kind) {
      case Perturbation::char_swap: variant.text = swap_adjacent(words, rng); break;
      case Perturbation::word_deletion: variant.text = delete_words(words, rng); break;
      case Perturbation::word_duplication: variant.text = duplicate_word(words, rng); break;
      case Perturbation::case_flip: variant.text = flip_case(words, rng); break;
      case Perturbation::identity: break;
    }
    if (variant.text.empty()) variant.text = doc.text;
    out.push_back(std::move(variant));
  }
  return out;
}

}  // namespace cascade
