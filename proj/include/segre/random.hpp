#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>
#include <vector>

namespace segre {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;  // 2^31 - 1
inline constexpr std::uint64_t kSecondPrime = 2147483629ULL;

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// FNV-1a; stable across platforms, unlike std::hash.
inline std::uint64_t stable_hash(std::string_view text) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t value) {
  return detail::splitmix64(seed ^ detail::splitmix64(value + 0x632BE59BD9B4E019ULL));
}

/// Seed for one randomized task: hash(master, purpose, index, attempt, prime).
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view purpose,
                                 const std::vector<int>& index, int attempt,
                                 std::uint64_t prime) {
  std::uint64_t s = mix_seed(master, stable_hash(purpose));
  s = mix_seed(s, index.size());
  for (int v : index) s = mix_seed(s, static_cast<std::uint64_t>(static_cast<std::int64_t>(v)));
  s = mix_seed(s, static_cast<std::uint64_t>(attempt));
  return mix_seed(s, prime);
}

/// Uniform draw from the sampling set {1, ..., bound - 1}.
inline std::uint64_t sample_nonzero(Rng& rng, std::uint64_t bound) {
  std::uniform_int_distribution<std::uint64_t> dist(1, bound - 1);
  return dist(rng);
}

}  // namespace segre
