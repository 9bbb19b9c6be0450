#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mphf {

/// Keys are arbitrary non-empty byte strings; all keys of one build must be
/// pairwise distinct.
using Key = std::string;

using HashFamilySeed = std::uint64_t;

/// Domain tags keep the hash sub-families used by different stages of a
/// build decorrelated while sharing a single seed.
namespace tag {
inline constexpr std::uint64_t kLiteral = 0x9e3779b97f4a7c15ULL;
inline constexpr std::uint64_t kMatching = 0xc2b2ae3d27d4eb4fULL;
inline constexpr std::uint64_t kFilter = 0x165667b19e3779f9ULL;
inline constexpr std::uint64_t kShard = 0x27d4eb2f165667c5ULL;
inline constexpr std::uint64_t kFilterBlock = 0x85ebca77c2b2ae63ULL;
}  // namespace tag

/// FNV-1a over the key bytes.
std::uint64_t fingerprint(std::string_view key);

/// Standard 64-bit avalanche finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

/// High 64 bits of the 128-bit product.
constexpr std::uint64_t mulhi64(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) >> 64);
}

/// Full mixed state for hash function i of the family selected by `tweak`.
inline std::uint64_t mixed_value(std::string_view key, std::uint64_t i,
                                 HashFamilySeed seed, std::uint64_t tweak) {
  return mix64(seed ^ mix64(i ^ tweak) ^ fingerprint(key));
}

/// Value in [1..range]. Throws std::invalid_argument for range = 0.
std::uint64_t hash_index(std::string_view key, std::uint64_t i, std::uint64_t range,
                         HashFamilySeed seed, std::uint64_t tweak);

/// ceil(log2 n) for n >= 2.
std::uint32_t index_bits(std::size_t n);

/// The evaluated signed-literal hash family of one build: n rows of k
/// literals over variables 1..m, each row over pairwise-distinct variables.
struct LiteralTable {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  std::vector<std::int32_t> entries;  // row-major, n*k, values in {-m..m}\{0}

  std::int32_t literal(std::size_t row, std::size_t pos) const {
    return entries[row * k + pos];
  }

  bool rows_valid() const;
};

/// Literals for a single key. Position i retries with attempt counters
/// folded into the tweak until its variable differs from positions before it.
std::vector<std::int32_t> derive_literal_row(std::string_view key, std::size_t k,
                                             std::size_t m, HashFamilySeed seed);

/// Preconditions: keys distinct, n >= 2, m >= ceil(log2 n).
LiteralTable derive_literal_table(const std::vector<Key>& keys, std::size_t m,
                                  HashFamilySeed seed);

}  // namespace mphf
