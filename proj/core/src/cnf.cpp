#include "mphf/cnf.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <ostream>
#include <sstream>

#include "mphf/errors.hpp"

namespace mphf {

namespace {

constexpr std::int32_t complement(std::int32_t lit) { return -lit; }

// Appends `lit` to `clause` unless already present; returns false if the
// clause becomes tautological.
bool push_literal(std::vector<std::int32_t>& clause, std::int32_t lit) {
  for (std::int32_t existing : clause) {
    if (existing == lit) return true;
    if (existing == -lit) return false;
  }
  clause.push_back(lit);
  return true;
}

// Bit p (0-based from the most significant) of the k-bit pattern for value
// l in [1..2^k]; pattern <00..0> encodes 1.
bool pattern_bit(std::size_t l, std::size_t k, std::size_t p) {
  return ((l - 1) >> (k - 1 - p)) & 1u;
}

}  // namespace

std::int32_t EqVarRegistry::id_for(std::int32_t a, std::int32_t b) {
  auto key = std::minmax(a, b);
  auto it = ids_.find(key);
  if (it != ids_.end()) return it->second;
  const std::int32_t id = next_id_++;
  ids_.emplace(key, id);
  order_.push_back({key, id});
  return id;
}

CnfFormula encode_compact(const LiteralTable& t) {
  const std::size_t n = t.n, k = t.k;
  const auto m = static_cast<std::int32_t>(t.m);
  EqVarRegistry reg(m + 1);
  CnfFormula f;

  // Pair clauses: keys i and j must differ in at least one position.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<std::int32_t> clause;
      bool satisfied = false;
      for (std::size_t p = 0; p < k; ++p) {
        const std::int32_t a = t.literal(i, p);
        const std::int32_t b = t.literal(j, p);
        if (a == b) continue;  // e_{a,a} = 1, disjunct constant-false
        if (a == complement(b)) {
          satisfied = true;  // e_{a,-a} = 0, clause constant-true
          break;
        }
        push_literal(clause, -reg.id_for(a, b));
      }
      if (!satisfied) f.clauses.push_back(std::move(clause));
    }
  }

  // Definitions: the two clauses with positive e suffice.
  for (const auto& [pair, id] : reg.order()) {
    const auto [a, b] = pair;
    f.clauses.push_back({id, a, b});
    f.clauses.push_back({id, -a, -b});
  }

  // Values above n must be unreachable when n is not a power of two.
  if (!std::has_single_bit(n)) {
    const std::size_t top = std::size_t{1} << k;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = n + 1; l <= top; ++l) {
        std::vector<std::int32_t> clause;
        clause.reserve(k);
        for (std::size_t p = 0; p < k; ++p) {
          const std::int32_t lit = t.literal(i, p);
          clause.push_back(pattern_bit(l, k, p) ? -lit : lit);
        }
        f.clauses.push_back(std::move(clause));
      }
    }
  }

  f.num_vars = m + static_cast<std::int32_t>(reg.size());
  return f;
}

CnfFormula encode_cubic(const LiteralTable& t) {
  const std::size_t n = t.n, k = t.k;
  CnfFormula f;
  f.num_vars = static_cast<std::int32_t>(t.m);

  const bool power_of_two = std::has_single_bit(n);
  const std::size_t half = std::size_t{1} << (k - 1);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t l = 1; l <= n; ++l) {
        const bool drop_msb = !power_of_two && l <= half && l + half > n;
        std::vector<std::int32_t> clause;
        clause.reserve(2 * k);
        bool tautology = false;
        for (std::size_t row : {i, j}) {
          for (std::size_t p = drop_msb ? 1 : 0; p < k; ++p) {
            const std::int32_t lit = t.literal(row, p);
            if (!push_literal(clause, pattern_bit(l, k, p) ? -lit : lit)) {
              tautology = true;
              break;
            }
          }
          if (tautology) break;
        }
        if (!tautology) f.clauses.push_back(std::move(clause));
      }
    }
  }
  return f;
}

CnfFormula encode(const LiteralTable& t, EncodingKind kind) {
  return kind == EncodingKind::kCompact ? encode_compact(t) : encode_cubic(t);
}

void emit_dimacs(const CnfFormula& f, std::ostream& out) {
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& clause : f.clauses) {
    for (std::int32_t lit : clause) out << lit << ' ';
    out << "0\n";
  }
}

std::string emit_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  emit_dimacs(f, out);
  return out.str();
}

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  std::size_t declared_clauses = 0;
  std::size_t terminated_clauses = 0;
  std::vector<std::int32_t> current;
  bool current_tautology = false;

  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      if (have_header) throw ParseError("parse_dimacs: duplicate header");
      std::istringstream hs(line);
      std::string p, cnf;
      long long vars = -1, clauses = -1;
      hs >> p >> cnf >> vars >> clauses;
      if (p != "p" || cnf != "cnf" || vars < 0 || clauses < 0 || hs.fail())
        throw ParseError("parse_dimacs: malformed header: " + line);
      f.num_vars = static_cast<std::int32_t>(vars);
      declared_clauses = static_cast<std::size_t>(clauses);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("parse_dimacs: clause before header");
    std::istringstream ls(line);
    long long lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (!current_tautology) f.clauses.push_back(std::move(current));
        ++terminated_clauses;
        current.clear();
        current_tautology = false;
        continue;
      }
      if (lit > f.num_vars || -lit > f.num_vars)
        throw ParseError("parse_dimacs: literal out of range: " + std::to_string(lit));
      if (!current_tautology &&
          !push_literal(current, static_cast<std::int32_t>(lit)))
        current_tautology = true;
    }
    if (!ls.eof()) throw ParseError("parse_dimacs: bad token in line: " + line);
  }
  if (!have_header) throw ParseError("parse_dimacs: missing header");
  if (!current.empty() || current_tautology)
    throw ParseError("parse_dimacs: unterminated clause");
  if (terminated_clauses != declared_clauses)
    throw ParseError("parse_dimacs: clause count mismatch");
  return f;
}

}  // namespace mphf
