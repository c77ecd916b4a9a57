#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace cascade {

/// SplitMix64 finalizer. Used to fan one top-level seed out into independent
/// per-purpose streams: derive_seed(seed, stream, index).
std::uint64_t mix64(std::uint64_t x) noexcept;
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index = 0) noexcept;
std::uint64_t hash_string(std::string_view s) noexcept;  // FNV-1a, 64-bit

/// Platform-stable random source. std::mt19937_64's output sequence is fixed
/// by the standard, but the std distributions are not, so bounded draws are
/// done here by rejection.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t uniform_index(std::uint64_t n);
  /// Uniform real in [0, 1) with 53 random bits.
  double uniform01();

 private:
  std::mt19937_64 engine_;
};

}  // namespace cascade
