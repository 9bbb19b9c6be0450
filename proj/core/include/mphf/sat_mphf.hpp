#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mphf/bitvec.hpp"
#include "mphf/cnf.hpp"
#include "mphf/hashing.hpp"
#include "mphf/solver.hpp"

namespace mphf {

/// Near-optimal MPHF backed by a solved constraint system: m stored bits,
/// index read back as k bit look-ups per key.
struct SatMphf {
  HashFamilySeed seed = 0;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint32_t k = 0;
  EncodingKind encoding = EncodingKind::kCubic;
  BitVec bits;  // values of x_1..x_m
};

/// Information-theoretic storage limit in bits per key: log2(n^n/n!)/n.
double alpha_n(std::uint64_t n);

/// Index of the key whose literal row is `row`, read from `bits`: MSB-first
/// bit-vector value plus one, with values above n folded down by 2^(k-1).
std::uint64_t decode_index(const std::vector<std::int32_t>& row, const BitVec& bits,
                           std::uint64_t n);

/// Encodes and solves one table; on SAT returns the packed x_1..x_m storage
/// (auxiliary variables discarded), on UNSAT nullopt. Timeouts throw
/// BuildError.
std::optional<BitVec> try_build_storage(const LiteralTable& t, EncodingKind encoding,
                                        const SolverConfig& solver);

/// Derives the table for `keys`, encodes, solves, and packs the storage;
/// retries with seed+1 up to max_reseeds on UNSAT. The result is verified
/// bijective before return. Throws BuildError when all reseeds are UNSAT.
SatMphf build_sat_mphf(const std::vector<Key>& keys, std::uint64_t m,
                       HashFamilySeed seed, EncodingKind encoding,
                       const SolverConfig& solver, std::uint32_t max_reseeds);

/// Index in [1..n]. Keys outside the build set yield an arbitrary index.
std::uint64_t query(const SatMphf& h, std::string_view key);

/// True iff the queries of `keys` hit every index in [1..n] exactly once.
bool verify_bijection(const SatMphf& h, const std::vector<Key>& keys);

}  // namespace mphf
