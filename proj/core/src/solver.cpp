#include "mphf/solver.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <numeric>
#include <random>
#include <stdexcept>

#include "mphf/errors.hpp"

namespace mphf {

bool assignment_satisfies(const CnfFormula& f, const std::vector<bool>& assignment) {
  if (assignment.size() < static_cast<std::size_t>(f.num_vars)) return false;
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (std::int32_t lit : clause) {
      const std::size_t v = static_cast<std::size_t>(lit < 0 ? -lit : lit) - 1;
      if (assignment[v] == (lit > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

SolveResult solve_oracle(const CnfFormula& f) {
  if (f.num_vars > 26)
    throw std::invalid_argument("solve_oracle: more than 26 variables");
  const std::size_t nvars = static_cast<std::size_t>(f.num_vars);
  const std::uint64_t total = std::uint64_t{1} << nvars;
  std::vector<bool> assignment(nvars);
  for (std::uint64_t counter = 0; counter < total; ++counter) {
    for (std::size_t v = 0; v < nvars; ++v) assignment[v] = (counter >> v) & 1u;
    if (assignment_satisfies(f, assignment))
      return {SolveStatus::kSat, assignment};
  }
  return {SolveStatus::kUnsat, {}};
}

namespace {

// DPLL with two watched literals and chronological backtracking.
class DpllSolver {
 public:
  DpllSolver(const CnfFormula& f, const SolverConfig& cfg) : f_(f), cfg_(cfg) {
    nvars_ = static_cast<std::size_t>(f.num_vars);
    value_.assign(nvars_ + 1, kUnassigned);
    watches_.assign(2 * (nvars_ + 1), {});
    order_.resize(nvars_);
    std::iota(order_.begin(), order_.end(), 1);
    if (cfg.decision_seed != 0) {
      std::mt19937_64 rng(cfg.decision_seed);
      std::shuffle(order_.begin(), order_.end(), rng);
    }
  }

  SolveResult run() {
    const auto deadline = cfg_.time_limit_seconds > 0
                              ? Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                                   std::chrono::duration<double>(
                                                       cfg_.time_limit_seconds))
                              : Clock::time_point::max();

    if (!load_clauses()) return {SolveStatus::kUnsat, {}};
    if (!propagate()) return {SolveStatus::kUnsat, {}};  // root-level conflict

    for (;;) {
      if (++steps_ % 1024 == 0 && Clock::now() > deadline)
        return {SolveStatus::kTimeout, {}};

      const std::int32_t var = pick_variable();
      if (var == 0) return finish_sat();

      decide(-var);  // phase false first
      while (!propagate()) {
        // Backtrack to the most recent decision with an untried phase.
        std::int32_t flip = 0;
        while (!decisions_.empty()) {
          Decision d = decisions_.back();
          decisions_.pop_back();
          unwind(d.trail_mark);
          if (!d.flipped) {
            flip = -d.lit;
            break;
          }
        }
        if (flip == 0) return {SolveStatus::kUnsat, {}};
        decisions_.push_back({flip, trail_.size(), true});
        enqueue(flip);
      }
    }
  }

 private:
  using Clock = std::chrono::steady_clock;
  static constexpr std::int8_t kUnassigned = -1;

  struct Decision {
    std::int32_t lit;
    std::size_t trail_mark;
    bool flipped;
  };

  static std::size_t lit_index(std::int32_t lit) {
    const std::size_t v = static_cast<std::size_t>(lit < 0 ? -lit : lit);
    return 2 * v + (lit < 0 ? 1 : 0);
  }

  std::int8_t lit_value(std::int32_t lit) const {
    const std::int8_t v = value_[static_cast<std::size_t>(lit < 0 ? -lit : lit)];
    if (v == kUnassigned) return kUnassigned;
    return (lit > 0) == (v == 1) ? 1 : 0;
  }

  bool load_clauses() {
    for (const auto& clause : f_.clauses) {
      if (clause.empty()) return false;
      if (clause.size() == 1) {
        units_.push_back(clause[0]);
        continue;
      }
      clauses_.push_back(clause);
      const std::size_t idx = clauses_.size() - 1;
      watches_[lit_index(clause[0])].push_back(idx);
      watches_[lit_index(clause[1])].push_back(idx);
    }
    for (std::int32_t lit : units_) {
      if (lit_value(lit) == 0) return false;
      if (lit_value(lit) == kUnassigned) enqueue(lit);
    }
    return true;
  }

  void enqueue(std::int32_t lit) {
    value_[static_cast<std::size_t>(lit < 0 ? -lit : lit)] = lit > 0 ? 1 : 0;
    trail_.push_back(lit);
  }

  void decide(std::int32_t lit) {
    decisions_.push_back({lit, trail_.size(), false});
    enqueue(lit);
  }

  void unwind(std::size_t trail_mark) {
    while (trail_.size() > trail_mark) {
      const std::int32_t lit = trail_.back();
      trail_.pop_back();
      value_[static_cast<std::size_t>(lit < 0 ? -lit : lit)] = kUnassigned;
    }
    propagate_head_ = std::min(propagate_head_, trail_.size());
  }

  // Returns false on conflict.
  bool propagate() {
    while (propagate_head_ < trail_.size()) {
      const std::int32_t falsified = -trail_[propagate_head_++];
      auto& watch_list = watches_[lit_index(falsified)];
      std::size_t keep = 0;
      for (std::size_t w = 0; w < watch_list.size(); ++w) {
        const std::size_t ci = watch_list[w];
        auto& clause = clauses_[ci];
        if (clause[0] == falsified) std::swap(clause[0], clause[1]);
        // clause[1] is the falsified watch now.
        if (lit_value(clause[0]) == 1) {
          watch_list[keep++] = ci;
          continue;
        }
        bool moved = false;
        for (std::size_t p = 2; p < clause.size(); ++p) {
          if (lit_value(clause[p]) != 0) {
            std::swap(clause[1], clause[p]);
            watches_[lit_index(clause[1])].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        watch_list[keep++] = ci;
        if (lit_value(clause[0]) == 0) {  // conflict
          for (std::size_t r = w + 1; r < watch_list.size(); ++r)
            watch_list[keep++] = watch_list[r];
          watch_list.resize(keep);
          propagate_head_ = trail_.size();
          return false;
        }
        enqueue(clause[0]);  // unit
      }
      watch_list.resize(keep);
    }
    return true;
  }

  std::int32_t pick_variable() const {
    for (std::int32_t v : order_) {
      if (value_[static_cast<std::size_t>(v)] == kUnassigned) return v;
    }
    return 0;
  }

  SolveResult finish_sat() {
    std::vector<bool> assignment(nvars_);
    for (std::size_t v = 1; v <= nvars_; ++v) assignment[v - 1] = value_[v] == 1;
    // Model soundness invariant: never report SAT with a bad assignment.
    if (!assignment_satisfies(f_, assignment))
      throw Error("solve_builtin: internal error, model does not verify");
    return {SolveStatus::kSat, std::move(assignment)};
  }

  const CnfFormula& f_;
  SolverConfig cfg_;
  std::size_t nvars_ = 0;
  std::vector<std::vector<std::int32_t>> clauses_;
  std::vector<std::int32_t> units_;
  std::vector<std::int8_t> value_;
  std::vector<std::vector<std::size_t>> watches_;
  std::vector<std::int32_t> trail_;
  std::size_t propagate_head_ = 0;
  std::vector<Decision> decisions_;
  std::vector<std::int32_t> order_;
  std::uint64_t steps_ = 0;
};

}  // namespace

SolveResult solve_builtin(const CnfFormula& f, const SolverConfig& cfg) {
  return DpllSolver(f, cfg).run();
}

SolveResult solve(const CnfFormula& f, const SolverConfig& cfg) {
  switch (cfg.engine) {
    case SolverEngine::kOracle:
      return solve_oracle(f);
    case SolverEngine::kBuiltin:
      return solve_builtin(f, cfg);
    case SolverEngine::kExternal:
      return solve_external(f, cfg);
  }
  throw std::invalid_argument("solve: unknown engine");
}

}  // namespace mphf
