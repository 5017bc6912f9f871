#include <sys/wait.h>

#include <array>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "hypervis/sat.hpp"

namespace hypervis {

SatResult parse_solver_output(const std::string& output, const CnfFormula& formula) {
  SatResult result;
  std::optional<std::string> status;
  Assignment assignment(static_cast<std::size_t>(formula.num_vars()) + 1, false);
  std::istringstream in(output);
  std::string line;
  while (std::getline(in, line)) {
    if (line.size() < 2 || line[1] != ' ') continue;
    if (line[0] == 's') {
      status = line.substr(2);
      while (!status->empty() && std::isspace(static_cast<unsigned char>(status->back()))) {
        status->pop_back();
      }
    } else if (line[0] == 'v') {
      std::istringstream lits(line.substr(2));
      long long lit = 0;
      while (lits >> lit) {
        if (lit == 0) continue;
        const auto var = static_cast<std::size_t>(std::llabs(lit));
        if (var > static_cast<std::size_t>(formula.num_vars())) {
          throw SolverOutputError("solver assigned unknown variable " + std::to_string(var));
        }
        assignment[var] = lit > 0;
      }
    }
  }
  if (!status) throw SolverOutputError("solver output has no status line");
  if (*status == "SATISFIABLE") {
    if (auto bad = formula.first_falsified(assignment)) {
      throw SolverOutputError("solver model falsifies clause " + std::to_string(*bad + 1));
    }
    result.status = SatStatus::kSat;
    result.assignment = std::move(assignment);
  } else if (*status == "UNSATISFIABLE") {
    result.status = SatStatus::kUnsat;
  } else if (*status == "UNKNOWN" || *status == "INDETERMINATE") {
    result.status = SatStatus::kUnknown;
    result.detail = "solver reported " + *status;
  } else {
    throw SolverOutputError("unrecognised status line 's " + *status + "'");
  }
  return result;
}

namespace {

class TempFile {
 public:
  TempFile() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("hypervis-" + std::to_string(rd()) + "-" + std::to_string(rd()) + ".cnf");
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;

  [[nodiscard]] std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "'\\''";
    else out += c;
  }
  return out + "'";
}

}  // namespace

SatResult external_solve(const CnfFormula& formula, const std::string& command_template,
                         std::optional<double> max_seconds) {
  if (command_template.empty()) throw DomainError("empty solver command");
  TempFile cnf;
  {
    std::ofstream out(cnf.path());
    if (!out) throw Error("cannot write " + cnf.path());
    write_dimacs(out, formula);
  }

  std::string command = command_template;
  const std::string placeholder = "{cnf}";
  if (const auto pos = command.find(placeholder); pos != std::string::npos) {
    command.replace(pos, placeholder.size(), shell_quote(cnf.path()));
  } else {
    command += " " + shell_quote(cnf.path());
  }
  if (max_seconds) {
    const long secs = std::max(1L, static_cast<long>(std::ceil(*max_seconds)));
    command = "timeout -s KILL " + std::to_string(secs) + " sh -c " + shell_quote(command);
  }
  command += " 2>/dev/null";

  const auto start = std::chrono::steady_clock::now();
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) throw Error("cannot start solver: " + command_template);
  std::string output;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), n);
  const int status = ::pclose(pipe);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  SatResult unknown;
  unknown.stats.seconds = seconds;
  if (status == -1 || !WIFEXITED(status)) {
    unknown.detail = "solver terminated abnormally";
    return unknown;
  }
  const int code = WEXITSTATUS(status);
  if (code != 0 && code != 10 && code != 20) {
    unknown.detail = code == 124 || code == 137 ? "solver timed out"
                                                : "solver exited with status " + std::to_string(code);
    return unknown;
  }
  SatResult result = parse_solver_output(output, formula);
  result.stats.seconds = seconds;
  return result;
}

}  // namespace hypervis
