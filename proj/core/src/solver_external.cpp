#include <sys/wait.h>

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "mphf/errors.hpp"
#include "mphf/solver.hpp"

namespace mphf {

namespace {

namespace fs = std::filesystem;

struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& contents) {
    static std::atomic<std::uint64_t> counter{0};
    std::random_device rd;
    std::ostringstream name;
    name << "mphf-" << rd() << '-' << counter.fetch_add(1) << ".cnf";
    path = fs::temp_directory_path() / name.str();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot create temporary CNF file: " + path.string());
    out << contents;
  }
  ~TempFile() {
    std::error_code ec;
    fs::remove(path, ec);
  }
};

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'')
      out += "'\\''";
    else
      out += c;
  }
  out += "'";
  return out;
}

std::string substitute_path(const std::string& tmpl, const std::string& path) {
  const auto pos = tmpl.find("{}");
  if (pos == std::string::npos) return tmpl + " " + path;
  std::string out = tmpl;
  out.replace(pos, 2, path);
  return out;
}

}  // namespace

SolveResult solve_external(const CnfFormula& f, const SolverConfig& cfg) {
  if (cfg.external_command.empty())
    throw std::invalid_argument("solve_external: no command template configured");

  TempFile cnf(emit_dimacs(f));
  std::string command = substitute_path(cfg.external_command, cnf.path.string());
  if (cfg.time_limit_seconds > 0) {
    std::ostringstream wrapped;
    wrapped << "timeout " << cfg.time_limit_seconds << "s sh -c "
            << shell_quote(command);
    command = wrapped.str();
  }
  command += " 2>/dev/null";

  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw IoError("solve_external: failed to launch: " + command);
  std::string output;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
  const int wait_status = pclose(pipe);
  const int exit_code = WIFEXITED(wait_status) ? WEXITSTATUS(wait_status) : -1;

  bool sat = false, unsat = false, unknown = false;
  std::vector<std::int32_t> model_lits;
  std::istringstream lines(output);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind("s ", 0) == 0) {
      if (line.find("UNSATISFIABLE") != std::string::npos)
        unsat = true;
      else if (line.find("SATISFIABLE") != std::string::npos)
        sat = true;
      else
        unknown = true;
    } else if (line.rfind("v", 0) == 0 && (line.size() == 1 || line[1] == ' ')) {
      std::istringstream vs(line.substr(1));
      long long lit;
      while (vs >> lit) {
        if (lit != 0) model_lits.push_back(static_cast<std::int32_t>(lit));
      }
    }
  }

  if (unsat) return {SolveStatus::kUnsat, {}};
  if (sat) {
    std::vector<bool> assignment(static_cast<std::size_t>(f.num_vars), false);
    for (std::int32_t lit : model_lits) {
      const auto v = static_cast<std::size_t>(lit < 0 ? -lit : lit);
      if (v == 0 || v > assignment.size())
        throw SolverError("solve_external: model literal out of range");
      assignment[v - 1] = lit > 0;
    }
    // External solvers are untrusted; never forward an unchecked model.
    if (!assignment_satisfies(f, assignment))
      throw SolverError("solve_external: returned model does not satisfy the formula");
    return {SolveStatus::kSat, std::move(assignment)};
  }
  if (unknown) return {SolveStatus::kTimeout, {}};
  if (cfg.time_limit_seconds > 0 && exit_code == 124)  // killed by timeout(1)
    return {SolveStatus::kTimeout, {}};
  throw SolverError("solve_external: no status line from solver (exit code " +
                    std::to_string(exit_code) + ")");
}

}  // namespace mphf
