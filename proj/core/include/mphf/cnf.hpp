#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mphf/hashing.hpp"

namespace mphf {

/// CNF over integer literals. Clauses never contain duplicate literals or a
/// literal together with its complement; an empty clause marks trivial
/// unsatisfiability.
struct CnfFormula {
  std::int32_t num_vars = 0;
  std::vector<std::vector<std::int32_t>> clauses;

  friend bool operator==(const CnfFormula& a, const CnfFormula& b) {
    return a.num_vars == b.num_vars && a.clauses == b.clauses;
  }
};

/// Auxiliary equality variables e_{a,b} for unordered literal pairs,
/// numbered m+1, m+2, ... in first-use order. The identities e_{a,a} = 1 and
/// e_{a,-a} = 0 are folded by the encoder and never registered here.
class EqVarRegistry {
 public:
  explicit EqVarRegistry(std::int32_t first_id) : next_id_(first_id) {}

  std::int32_t id_for(std::int32_t a, std::int32_t b);

  std::size_t size() const { return order_.size(); }

  /// Registered pairs with their ids, in first-use order.
  const std::vector<std::pair<std::pair<std::int32_t, std::int32_t>, std::int32_t>>&
  order() const {
    return order_;
  }

 private:
  std::map<std::pair<std::int32_t, std::int32_t>, std::int32_t> ids_;
  std::vector<std::pair<std::pair<std::int32_t, std::int32_t>, std::int32_t>> order_;
  std::int32_t next_id_;
};

enum class EncodingKind : std::uint8_t { kCompact = 1, kCubic = 2 };

/// Pairwise-difference encoding with auxiliary equality variables: one
/// pair clause per key pair, two ternary definition clauses per registered
/// e variable, and one k-literal blocking clause per (row, value) for values
/// above n when n is not a power of two.
CnfFormula encode_compact(const LiteralTable& t);

/// Per-value forbidden-pair encoding without auxiliaries; for values whose
/// high twin falls outside [1..n] the most significant literals of both rows
/// are dropped. Tautologies are discarded and duplicate literals removed.
CnfFormula encode_cubic(const LiteralTable& t);

CnfFormula encode(const LiteralTable& t, EncodingKind kind);

std::string emit_dimacs(const CnfFormula& f);
void emit_dimacs(const CnfFormula& f, std::ostream& out);

/// Inverse of emit_dimacs. Skips comment lines; normalizes clauses the same
/// way the encoders do. Throws ParseError on malformed input.
CnfFormula parse_dimacs(std::string_view text);

}  // namespace mphf
