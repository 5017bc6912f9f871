#pragma once

// ILP and CNF models of the visibility problems.
//
// Polarity differs between the two models:
//   ILP  x_v = 1  iff  v is in M
//   CNF  x_v = 0  iff  v is in M  (x_v true means "v is not chosen")

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypervis/cube.hpp"
#include "hypervis/visibility.hpp"

namespace hypervis {

// Structures a search may forbid inside M.
enum class Pattern {
  kAdjacentPair,  // two adjacent members
  kK12Star,       // a member with two member neighbors (induced K_{1,2})
};

[[nodiscard]] std::string_view to_string(Pattern p);
[[nodiscard]] std::optional<Pattern> parse_pattern(std::string_view name);

struct EncodeConfig {
  int h = 0;
  VariantKind variant = VariantKind::kMutual;
  // Required size l of M (CNF only); unset means no cardinality constraint.
  std::optional<std::uint64_t> target;
  // Longest pair distance that gets path constraints; 0 means h.
  int path_cap = 0;
  std::vector<Vertex> presets;
  std::vector<Pattern> forbidden;
  // |M n N[u]| <= cap for every u in M.
  std::optional<int> neighborhood_cap;
  // u_1..u_{h-1}0 in M  iff  its antipode is in M.
  bool antipode_closure = false;
  // Emit (y_P or not x_z1 or ... ) besides the forward implications.
  bool reverse_implications = true;

  [[nodiscard]] int effective_path_cap() const { return path_cap == 0 ? h : path_cap; }
  // Throws DomainError on an inconsistent configuration.
  void validate() const;
};

// Which (u, v, path) an auxiliary path variable stands for.
struct PathVariable {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  std::uint32_t path_index = 0;
};

// Truth values indexed by DIMACS variable number; entry 0 unused.
using Assignment = std::vector<bool>;

class CnfFormula {
 public:
  CnfFormula() = default;
  explicit CnfFormula(int num_vars) : num_vars_(num_vars) {}

  [[nodiscard]] int num_vars() const { return num_vars_; }
  [[nodiscard]] std::size_t num_clauses() const { return starts_.size(); }
  [[nodiscard]] std::span<const int> clause(std::size_t i) const;

  int new_var() { return ++num_vars_; }
  int new_vars(int count);
  void add_clause(std::span<const int> literals);
  void add_clause(std::initializer_list<int> literals) {
    add_clause(std::span<const int>(literals.begin(), literals.size()));
  }

  [[nodiscard]] bool satisfied_by(const Assignment& assignment) const;
  // Index of the first clause the assignment falsifies.
  [[nodiscard]] std::optional<std::size_t> first_falsified(const Assignment& assignment) const;

  // Encoding metadata.  dim == 0 for formulas read without a variable map.
  int dim = 0;
  VariantKind variant = VariantKind::kMutual;
  std::uint64_t target = 0;
  int path_cap = 0;
  [[nodiscard]] int vertex_var(std::uint32_t v) const { return static_cast<int>(v) + 1; }
  int first_path_var = 0;
  std::vector<PathVariable> path_vars;
  int first_counter_var = 0;
  int counter_var_count = 0;

 private:
  int num_vars_ = 0;
  std::vector<int> literals_;
  std::vector<std::size_t> starts_;
};

struct CounterEncoding {
  std::vector<std::vector<int>> clauses;
  int aux_count = 0;
};

// Sequential counter for "at most k of the literals are true".  Registers
// s_{i,j} (i < n, j <= k) take variables first_aux, first_aux + 1, ... in
// row-major order.  A guard literal, when given, is appended to every clause
// that rejects an overflow, turning the constraint into guard -> at-most-k.
[[nodiscard]] CounterEncoding sequential_counter_at_most_k(std::span<const int> literals, int k,
                                                           int first_aux,
                                                           std::optional<int> guard = {});

[[nodiscard]] CnfFormula emit_cnf(const EncodeConfig& config);

// Copy of a formula emitted without a target, with the cardinality
// constraint |M| >= ell appended.  emit_cnf(c) with c.target = ell produces
// the same formula as with_target(emit_cnf(c without target), ell).
[[nodiscard]] CnfFormula with_target(const CnfFormula& base, std::uint64_t ell);

// M = {v : x_v false}.  Throws DomainError when the assignment falsifies a
// clause or yields fewer than target vertices.
[[nodiscard]] VertexSet decode_model(const CnfFormula& formula, const Assignment& assignment);

void write_dimacs(std::ostream& out, const CnfFormula& formula);
// Reads clauses and, when present, the variable map comments.
[[nodiscard]] CnfFormula read_dimacs(std::istream& in);

enum class RowSense { kLessEqual, kEqual };

struct LinearTerm {
  std::uint32_t var = 0;
  std::int64_t coef = 0;
};

struct LinearRow {
  std::string name;
  std::vector<LinearTerm> terms;
  RowSense sense = RowSense::kLessEqual;
  std::int64_t rhs = 0;

  [[nodiscard]] bool satisfied(std::span<const std::uint8_t> values) const;
};

// maximize sum x_v over binary x and z.  Variables 0 .. 2^h - 1 are the
// vertex variables x_v; z variables follow.
struct IlpModel {
  int dim = 0;
  VariantKind variant = VariantKind::kMutual;
  int path_cap = 0;
  std::vector<std::string> var_names;
  std::vector<PathVariable> z_vars;
  std::vector<LinearRow> rows;

  [[nodiscard]] std::uint32_t num_vertex_vars() const { return std::uint32_t{1} << dim; }
  [[nodiscard]] std::size_t num_vars() const { return var_names.size(); }
  [[nodiscard]] bool feasible(std::span<const std::uint8_t> values) const;
  [[nodiscard]] std::int64_t objective(std::span<const std::uint8_t> values) const;
};

[[nodiscard]] IlpModel emit_ilp(const EncodeConfig& config);
void write_lp(std::ostream& out, const IlpModel& model);

}  // namespace hypervis
