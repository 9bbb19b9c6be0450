#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mphf/cnf.hpp"

namespace mphf {

enum class SolveStatus : std::uint8_t { kSat, kUnsat, kTimeout };

struct SolveResult {
  SolveStatus status = SolveStatus::kUnsat;
  std::vector<bool> assignment;  // index var-1; present iff status == kSat
};

enum class SolverEngine : std::uint8_t { kOracle, kBuiltin, kExternal };

struct SolverConfig {
  SolverEngine engine = SolverEngine::kBuiltin;
  std::string external_command;  // "{}" is replaced by the CNF path,
                                 // otherwise the path is appended
  double time_limit_seconds = 0.0;  // 0 = unlimited
  std::uint64_t decision_seed = 0;  // 0 = lowest-variable-first decisions
};

/// True iff the assignment satisfies every clause of f.
bool assignment_satisfies(const CnfFormula& f, const std::vector<bool>& assignment);

/// Enumerates all assignments in ascending counter order (variable v is bit
/// v-1) and returns the first satisfying one. Requires num_vars <= 26.
SolveResult solve_oracle(const CnfFormula& f);

/// Complete DPLL: unit propagation with two watched literals per clause and
/// chronological backtracking. Decisions pick the lowest unassigned variable
/// with phase false unless decision_seed selects a shuffled order.
SolveResult solve_builtin(const CnfFormula& f, const SolverConfig& cfg = {});

/// Writes DIMACS to a temporary file, runs the configured command, parses
/// SAT-competition output and re-verifies any model before reporting SAT.
SolveResult solve_external(const CnfFormula& f, const SolverConfig& cfg);

/// Dispatch on cfg.engine.
SolveResult solve(const CnfFormula& f, const SolverConfig& cfg);

}  // namespace mphf
