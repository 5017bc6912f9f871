#pragma once

// Internal CDCL solver and a bridge to external DIMACS solvers.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypervis/encode.hpp"

namespace hypervis {

enum class SatStatus { kSat, kUnsat, kUnknown };

[[nodiscard]] std::string_view to_string(SatStatus s);

enum class Branching {
  // Lowest-index unassigned variable, false first.  Fully deterministic and
  // the default.
  kLowestIndex,
  // Activity-ordered (VSIDS) with saved phases and Luby restarts.  Also
  // deterministic; better on large heuristic instances.
  kActivity,
};

struct SolverOptions {
  std::optional<std::uint64_t> max_conflicts;
  std::optional<double> max_seconds;
  Branching branching = Branching::kLowestIndex;
  // Extra unit literals (DIMACS form) conjoined with the formula.
  std::vector<int> assumptions;
};

struct SolverStats {
  std::uint64_t decisions = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t propagations = 0;
  double seconds = 0;
};

struct SatResult {
  SatStatus status = SatStatus::kUnknown;
  // Filled for kSat, indexed by variable (entry 0 unused).
  Assignment assignment;
  SolverStats stats;
  std::string detail;
};

// Complete for every formula it finishes; a budget overrun returns kUnknown.
[[nodiscard]] SatResult dpll_solve(const CnfFormula& formula, const SolverOptions& options = {});

// The solver printed something that is not a valid answer for the formula.
class SolverOutputError : public Error {
 public:
  using Error::Error;
};

// Runs `command_template` with "{cnf}" replaced by a temporary DIMACS file
// (appended when the placeholder is absent).  Exit codes 0, 10 and 20 are
// normal; any other exit or a timeout yields kUnknown.  A claimed model is
// checked against the formula before it is returned.
[[nodiscard]] SatResult external_solve(const CnfFormula& formula, const std::string& command_template,
                                       std::optional<double> max_seconds = {});

// Parses SAT-competition output ("s ..." and "v ..." lines).
[[nodiscard]] SatResult parse_solver_output(const std::string& output, const CnfFormula& formula);

// Environment variable naming the default external solver command.
inline constexpr const char* kSolverEnvVar = "HYPERVIS_SOLVER";

}  // namespace hypervis
