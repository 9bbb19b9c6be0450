#include "mphf/sat_mphf.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mphf/errors.hpp"

namespace mphf {

double alpha_n(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("alpha_n: n must be >= 1");
  const double nd = static_cast<double>(n);
  const double log2_factorial = std::lgamma(nd + 1.0) / std::numbers::ln2;
  return std::log2(nd) - log2_factorial / nd;
}

std::uint64_t decode_index(const std::vector<std::int32_t>& row, const BitVec& bits,
                           std::uint64_t n) {
  const std::size_t k = row.size();
  std::uint64_t value = 0;
  for (std::int32_t lit : row) {
    const auto var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
    bool bit = bits.get(var - 1);
    if (lit < 0) bit = !bit;
    value = (value << 1) | (bit ? 1u : 0u);
  }
  value += 1;
  // Values whose most significant bit was dropped from the encoding fold
  // onto their in-range twin.
  if (value > n) value -= std::uint64_t{1} << (k - 1);
  return value;
}

std::optional<BitVec> try_build_storage(const LiteralTable& t, EncodingKind encoding,
                                        const SolverConfig& solver) {
  const CnfFormula f = encode(t, encoding);
  const SolveResult result = solve(f, solver);
  if (result.status == SolveStatus::kTimeout)
    throw BuildError("sat mphf build: solver timeout");
  if (result.status == SolveStatus::kUnsat) return std::nullopt;
  BitVec bits(t.m);
  for (std::size_t v = 0; v < t.m; ++v) bits.set(v, result.assignment[v]);
  return bits;
}

SatMphf build_sat_mphf(const std::vector<Key>& keys, std::uint64_t m,
                       HashFamilySeed seed, EncodingKind encoding,
                       const SolverConfig& solver, std::uint32_t max_reseeds) {
  const std::size_t n = keys.size();
  if (n < 2) throw std::invalid_argument("build_sat_mphf: need n >= 2");

  for (std::uint32_t attempt = 0; attempt <= max_reseeds; ++attempt) {
    const HashFamilySeed s = seed + attempt;
    const LiteralTable t = derive_literal_table(keys, m, s);
    auto bits = try_build_storage(t, encoding, solver);
    if (!bits) continue;
    SatMphf h{s, n, m, static_cast<std::uint32_t>(t.k), encoding, std::move(*bits)};
    if (!verify_bijection(h, keys))
      throw Error("build_sat_mphf: internal error, storage does not decode to a bijection");
    return h;
  }
  throw BuildError("build_sat_mphf: unsatisfiable for all " +
                   std::to_string(max_reseeds + 1) +
                   " seeds; consider raising the bit budget m");
}

std::uint64_t query(const SatMphf& h, std::string_view key) {
  const auto row = derive_literal_row(key, h.k, h.m, h.seed);
  return decode_index(row, h.bits, h.n);
}

bool verify_bijection(const SatMphf& h, const std::vector<Key>& keys) {
  if (keys.size() != h.n) return false;
  std::vector<bool> seen(h.n, false);
  for (const Key& key : keys) {
    const std::uint64_t idx = query(h, key);
    if (idx < 1 || idx > h.n || seen[idx - 1]) return false;
    seen[idx - 1] = true;
  }
  return true;
}

}  // namespace mphf
