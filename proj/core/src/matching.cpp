#include "mphf/matching.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mphf {

std::uint32_t optimal_k(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("optimal_k: n must be >= 2");
  if (n == 2) return 3;  // ln(ln n) term is far below the clamp here
  const double v = std::log(static_cast<double>(n)) +
                   std::log(std::log(static_cast<double>(n)));
  const auto ceiled = static_cast<std::int64_t>(std::ceil(v));
  return ceiled < 3 ? 3u : static_cast<std::uint32_t>(ceiled);
}

WeightedBipartiteGraph graph_from_hash_rows(
    std::size_t n, std::size_t k, const std::vector<std::vector<std::uint32_t>>& rows) {
  if (k == 0 || k > 255) throw std::invalid_argument("graph_from_hash_rows: k out of range");
  WeightedBipartiteGraph g;
  g.n = n;
  g.k = k;
  g.min_index.assign(n * n, 0);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t r = rows[y][i] - 1;
      std::uint8_t& cell = g.min_index[y * n + r];
      if (cell == 0) cell = static_cast<std::uint8_t>(i + 1);  // min index wins
    }
  }
  return g;
}

WeightedBipartiteGraph build_graph(const std::vector<Key>& keys, std::uint32_t k,
                                   HashFamilySeed seed) {
  const std::size_t n = keys.size();
  std::vector<std::vector<std::uint32_t>> rows(n, std::vector<std::uint32_t>(k));
  for (std::size_t y = 0; y < n; ++y) {
    for (std::uint32_t i = 1; i <= k; ++i) {
      rows[y][i - 1] =
          static_cast<std::uint32_t>(hash_index(keys[y], i, n, seed, tag::kMatching));
    }
  }
  return graph_from_hash_rows(n, k, rows);
}

std::optional<Matching> min_weight_perfect_matching(const WeightedBipartiteGraph& g) {
  const std::size_t n = g.n;
  if (n == 0) return Matching{};
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

  // Potential-based shortest augmenting paths; arrays are 1-based with
  // column 0 as the virtual start of each phase.
  std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0), minv(n + 1);
  std::vector<std::size_t> match_row(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);

  for (std::size_t i = 1; i <= n; ++i) {
    match_row[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = match_row[j0];
      std::int64_t delta = kInf;
      std::size_t j1 = 0;
      const std::uint8_t* row = &g.min_index[(i0 - 1) * n];
      const std::int64_t sentinel = g.sentinel();
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const std::uint8_t raw = row[j - 1];
        const std::int64_t cost = (raw ? raw : sentinel) - u[i0] - v[j];
        if (cost < minv[j]) {
          minv[j] = cost;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match_row[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match_row[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match_row[j0] = match_row[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Matching m;
  m.assignment.resize(n);
  for (std::size_t j = 1; j <= n; ++j) {
    const std::size_t y = match_row[j] - 1;
    const std::uint8_t raw = g.min_index[y * n + (j - 1)];
    if (raw == 0) return std::nullopt;  // optimum needs a sentinel edge
    m.assignment[y] = {j - 1, raw};
    m.total_weight += raw;
  }
  return m;
}

}  // namespace mphf
