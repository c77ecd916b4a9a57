#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "cascade/domain.hpp"

namespace cascade {

enum class Perturbation : std::uint8_t {
  char_swap,         // swap two adjacent characters inside one word of length >= 4
  word_deletion,     // drop each word with probability 0.1, keeping at least one
  word_duplication,  // repeat one random word in place
  case_flip,         // invert the case of every letter in one random word
  identity,          // unchanged copy; not part of the default set
};

inline constexpr double kWordDeletionRate = 0.1;

std::string_view to_string(Perturbation kind) noexcept;
std::optional<Perturbation> perturbation_from_string(std::string_view name) noexcept;

/// char_swap, word_deletion, word_duplication, case_flip.
std::set<Perturbation> default_perturbations();

/// One variant per requested kind, in enum order. Each variant keeps the
/// gold label, user and seq of the source and gets the id "<id>~<kind>".
/// The output is a pure function of (doc, seed, kinds): every kind draws
/// from its own stream derived from the seed, the kind and the document id.
/// A kind with nothing to act on (e.g. no word of length >= 4) yields an
/// unchanged copy.
std::vector<Document> augment(const Document& doc, std::uint64_t seed, const std::set<Perturbation>& kinds);

}  // namespace cascade
