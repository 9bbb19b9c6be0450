#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mphf/hashing.hpp"

namespace mphf {

/// Dense bipartite cost matrix: left nodes are keys, right nodes are the
/// indices [1..n]. The stored value at (y, r) is the smallest hash index i
/// with H_i(y) = r, or 0 when no hash hits r; absent edges weigh the
/// sentinel n*k + 1, which exceeds the weight of any real perfect matching.
struct WeightedBipartiteGraph {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::uint8_t> min_index;  // n*n row-major, 0 = no edge

  std::int64_t sentinel() const {
    return static_cast<std::int64_t>(n) * static_cast<std::int64_t>(k) + 1;
  }

  std::int64_t weight(std::size_t y, std::size_t r) const {
    const std::uint8_t i = min_index[y * n + r];
    return i ? i : sentinel();
  }
};

struct MatchedEdge {
  std::size_t right;       // 0-based right node
  std::uint32_t hash_idx;  // 1-based hash function index used
};

struct Matching {
  std::vector<MatchedEdge> assignment;  // indexed by left node
  std::int64_t total_weight = 0;
};

/// max(3, ceil(ln n + ln(ln n))); clamps to 3 for n <= 2.
std::uint32_t optimal_k(std::uint64_t n);

/// Builds the cost matrix from pre-evaluated hash values; rows[y][i-1] is
/// H_i(y) as a 1-based index. Colliding hashes keep the smallest index.
WeightedBipartiteGraph graph_from_hash_rows(
    std::size_t n, std::size_t k, const std::vector<std::vector<std::uint32_t>>& rows);

WeightedBipartiteGraph build_graph(const std::vector<Key>& keys, std::uint32_t k,
                                   HashFamilySeed seed);

/// O(n^3) Hungarian algorithm on the full matrix. Returns nullopt when every
/// minimum-weight assignment needs a sentinel edge, i.e. the hash graph has
/// no perfect matching and the caller should reseed.
std::optional<Matching> min_weight_perfect_matching(const WeightedBipartiteGraph& g);

}  // namespace mphf
