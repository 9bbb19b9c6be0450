#include "mphf/hashing.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace mphf {

namespace {
constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

// Attempt counters stride the tweak by the golden-ratio constant so retries
// of one position never collide with other positions or other families.
constexpr std::uint64_t kAttemptStride = 0x9e3779b97f4a7c15ULL;
}  // namespace

std::uint64_t fingerprint(std::string_view key) {
  std::uint64_t h = kFnvOffset;
  for (unsigned char c : key) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

std::uint64_t hash_index(std::string_view key, std::uint64_t i, std::uint64_t range,
                         HashFamilySeed seed, std::uint64_t tweak) {
  if (range == 0) throw std::invalid_argument("hash_index: range must be >= 1");
  return 1 + mulhi64(mixed_value(key, i, seed, tweak), range);
}

std::uint32_t index_bits(std::size_t n) {
  if (n < 2) throw std::invalid_argument("index_bits: n must be >= 2");
  return static_cast<std::uint32_t>(std::bit_width(n - 1));
}

bool LiteralTable::rows_valid() const {
  if (entries.size() != n * k) return false;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t p = 0; p < k; ++p) {
      const std::int32_t lit = literal(r, p);
      const std::int32_t var = lit < 0 ? -lit : lit;
      if (lit == 0 || var > static_cast<std::int32_t>(m)) return false;
      for (std::size_t q = 0; q < p; ++q) {
        const std::int32_t prev = literal(r, q);
        if ((prev < 0 ? -prev : prev) == var) return false;
      }
    }
  }
  return true;
}

std::vector<std::int32_t> derive_literal_row(std::string_view key, std::size_t k,
                                             std::size_t m, HashFamilySeed seed) {
  std::vector<std::int32_t> row;
  row.reserve(k);
  for (std::size_t pos = 1; pos <= k; ++pos) {
    for (std::uint64_t attempt = 0;; ++attempt) {
      const std::uint64_t mixed =
          mixed_value(key, pos, seed, tag::kLiteral + attempt * kAttemptStride);
      // One dedicated bit picks the sign, the remainder picks the variable.
      const bool negative = mixed & 1;
      const auto var =
          static_cast<std::int32_t>(1 + mulhi64(mixed & ~std::uint64_t{1}, m));
      bool clash = false;
      for (std::int32_t prev : row) {
        if ((prev < 0 ? -prev : prev) == var) {
          clash = true;
          break;
        }
      }
      if (!clash) {
        row.push_back(negative ? -var : var);
        break;
      }
    }
  }
  return row;
}

LiteralTable derive_literal_table(const std::vector<Key>& keys, std::size_t m,
                                  HashFamilySeed seed) {
  const std::size_t n = keys.size();
  if (n < 2) throw std::invalid_argument("derive_literal_table: need n >= 2");
  const std::size_t k = index_bits(n);
  if (m < k) throw std::invalid_argument("derive_literal_table: need m >= ceil(log2 n)");

  LiteralTable t;
  t.n = n;
  t.k = k;
  t.m = m;
  t.entries.reserve(n * k);
  for (const Key& key : keys) {
    const auto row = derive_literal_row(key, k, m, seed);
    t.entries.insert(t.entries.end(), row.begin(), row.end());
  }
  return t;
}

}  // namespace mphf
