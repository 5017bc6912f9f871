// hypervis: command-line front end for verifying, constructing, encoding and
// searching visibility sets of hypercubes.
//
// Exit codes: 0 ok, 1 verification failure or unsat, 2 usage error,
// 3 resource limit or unknown.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hypervis/constructions.hpp"
#include "hypervis/encode.hpp"
#include "hypervis/sat.hpp"
#include "hypervis/search.hpp"
#include "json.hpp"

namespace {

using namespace hypervis;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnknown = 3;

// Thrown for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, VariantKind> kVariantNames{
    {"mutual", VariantKind::kMutual},
    {"total", VariantKind::kTotal},
    {"outer", VariantKind::kOuter},
    {"dual", VariantKind::kDual},
};

const std::map<std::string, Pattern> kPatternNames{
    {"adjacent-pair", Pattern::kAdjacentPair},
    {"k12-star", Pattern::kK12Star},
};

const std::map<std::string, Branching> kBranchingNames{
    {"lowest-index", Branching::kLowestIndex},
    {"activity", Branching::kActivity},
};

template <class T>
std::vector<std::string> keys(const std::map<std::string, T>& m) {
  std::vector<std::string> out;
  for (const auto& [k, v] : m) out.push_back(k);
  return out;
}

// Writes to the file, or to stdout for an empty path or "-".
template <class F>
void with_output(const std::string& path, F&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write(out);
  if (!out) throw Error("write failed: " + path);
}

std::vector<Vertex> read_presets(const std::string& path, int h) {
  if (path.empty()) return {};
  return read_vertex_set_file(path, h).vertices();
}

// An explicit --solver wins; "internal" forces the built-in solver.
std::optional<std::string> solver_command(const std::string& flag) {
  if (flag == "internal") return std::nullopt;
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv(kSolverEnvVar); env != nullptr && *env != '\0') return std::string(env);
  return std::nullopt;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  int h = -1;
  std::string variant;
  std::string set_path;
  std::optional<int> max_distance;
  bool all_witnesses = false;
  unsigned threads = 1;
  bool json = false;
};

int run_verify(const VerifyArgs& a) {
  const VariantKind kind = kVariantNames.at(a.variant);
  const VertexSet m = read_vertex_set_file(a.set_path, a.h);
  VerifyOptions vo;
  vo.all_witnesses = a.all_witnesses;
  vo.threads = a.threads;
  const Verdict v = verify(m, Variant(kind, a.max_distance), vo);
  if (a.json) {
    json j{{"h", m.dim()}, {"variant", a.variant}, {"size", m.size()},
           {"status", v.ok ? "ok" : "fail"}, {"certified", v.certified}};
    if (v.witness) j["witness"] = {v.witness->u.to_string(), v.witness->v.to_string()};
    if (a.all_witnesses) {
      json all = json::array();
      for (const Witness& w : v.all_witnesses) all.push_back({w.u.to_string(), w.v.to_string()});
      j["witnesses"] = all;
    }
    std::cout << j.dump() << '\n';
  } else if (v.ok) {
    std::cout << "ok: " << m.size() << " vertices form a " << a.variant << " set of Q_" << m.dim();
    if (!v.certified) std::cout << " up to distance " << *a.max_distance << " (not certified)";
    std::cout << '\n';
  } else {
    std::cout << "fail: " << v.witness->describe() << '\n';
    for (std::size_t i = 1; i < v.all_witnesses.size(); ++i) {
      std::cout << "fail: " << v.all_witnesses[i].describe() << '\n';
    }
  }
  return v.ok ? kExitOk : kExitFail;
}

// --------------------------------------------------------------- construct

struct ConstructArgs {
  std::string kind;
  int h = 0;
  std::optional<int> i;
  int gap = 3;
  std::string variant;
  std::string out;
};

int run_construct(const ConstructArgs& a) {
  VertexSet m;
  if (a.kind == "layer-pair" || a.kind == "layer") {
    if (!a.i) throw UsageError("--i is required for --kind " + a.kind);
    m = layer_pair_set(a.h, *a.i, a.kind == "layer" ? 0 : a.gap);
  } else if (a.kind == "total") {
    // Parity extension of a distance-3 code of length h - 1.
    if (a.h < 2) throw UsageError("--kind total needs --h >= 2");
    if (a.h == 2) {
      m = VertexSet::parse_list({"00", "01"});
    } else {
      const auto [even, odd] = parity_extend(distance3_code(a.h - 1));
      m = even | odd;
    }
  } else if (a.kind == "floor") {
    if (a.variant.empty()) throw UsageError("--variant is required for --kind floor");
    m = constructive_floor(a.h, kVariantNames.at(a.variant));
  } else {
    throw UsageError("unknown --kind " + a.kind);
  }
  with_output(a.out, [&](std::ostream& os) { write_vertex_set(os, m); });
  if (!a.out.empty() && a.out != "-") std::cerr << "wrote " << m.size() << " vertices to " << a.out << '\n';
  return kExitOk;
}

// ------------------------------------------------------------------ bounds

struct BoundsArgs {
  int h = 0;
  std::string variant;
  bool json = false;
};

int run_bounds(const BoundsArgs& a) {
  const Bound b = bounds(a.h, kVariantNames.at(a.variant));
  if (a.json) {
    json j{{"h", a.h}, {"variant", a.variant}, {"lower", b.lower}, {"lower_source", b.lower_source},
           {"exact", b.exact()}};
    j["upper"] = b.upper ? json(*b.upper) : json(nullptr);
    j["upper_source"] = b.upper ? json(b.upper_source) : json(nullptr);
    std::cout << j.dump() << '\n';
    return kExitOk;
  }
  std::cout << "h=" << a.h << " variant=" << a.variant << '\n';
  std::cout << "lower=" << b.lower << " (" << b.lower_source << ")\n";
  if (b.upper) {
    std::cout << "upper=" << *b.upper << " (" << b.upper_source << ")\n";
  } else {
    std::cout << "upper=none\n";
  }
  std::cout << "exact=" << (b.exact() ? "yes" : "no") << '\n';
  return kExitOk;
}

// ------------------------------------------------------------------ encode

struct EncodeArgs {
  int h = 0;
  std::string variant;
  std::optional<std::uint64_t> ell;
  int path_cap = 0;
  std::string format = "dimacs";
  std::string preset_file;
  std::vector<std::string> forbid;
  std::optional<int> neighborhood_cap;
  bool antipode_closure = false;
  bool minimal = false;
  std::string out;
};

int run_encode(const EncodeArgs& a) {
  if (a.format == "lp" && a.ell) throw UsageError("--ell applies to --format dimacs only; the LP model maximizes |M|");
  EncodeConfig c;
  c.h = a.h;
  c.variant = kVariantNames.at(a.variant);
  c.target = a.ell;
  c.path_cap = a.path_cap;
  for (const std::string& p : a.forbid) c.forbidden.push_back(kPatternNames.at(p));
  c.neighborhood_cap = a.neighborhood_cap;
  c.antipode_closure = a.antipode_closure;
  c.reverse_implications = !a.minimal;
  c.validate();
  c.presets = read_presets(a.preset_file, a.h);
  if (a.format == "dimacs") {
    const CnfFormula f = emit_cnf(c);
    with_output(a.out, [&](std::ostream& os) { write_dimacs(os, f); });
    std::cerr << "cnf: " << f.num_vars() << " variables, " << f.num_clauses() << " clauses\n";
  } else {
    const IlpModel m = emit_ilp(c);
    with_output(a.out, [&](std::ostream& os) { write_lp(os, m); });
    std::cerr << "lp: " << m.num_vars() << " variables, " << m.rows.size() << " rows\n";
  }
  return kExitOk;
}

// ------------------------------------------------------------------- solve

struct SolveArgs {
  std::string cnf_path;
  std::string solver;
  std::optional<double> budget_seconds;
  std::optional<std::uint64_t> max_conflicts;
  std::string branching = "lowest-index";
  std::string set_out;
  bool competition_exit_codes = false;
};

int run_solve(const SolveArgs& a) {
  std::ifstream in(a.cnf_path);
  if (!in) throw Error("cannot read " + a.cnf_path);
  const CnfFormula f = read_dimacs(in);
  if (!a.set_out.empty() && f.dim == 0) throw UsageError("--set-out needs a formula written by 'encode'");

  SatResult r;
  if (const auto cmd = solver_command(a.solver)) {
    r = external_solve(f, *cmd, a.budget_seconds);
  } else {
    SolverOptions o;
    o.branching = kBranchingNames.at(a.branching);
    o.max_seconds = a.budget_seconds;
    o.max_conflicts = a.max_conflicts;
    r = dpll_solve(f, o);
  }

  std::cout << "c conflicts " << r.stats.conflicts << " decisions " << r.stats.decisions << '\n';
  if (!r.detail.empty()) std::cout << "c " << r.detail << '\n';
  std::cout << "s " << to_string(r.status) << '\n';
  if (r.status == SatStatus::kSat) {
    std::ostringstream line;
    int on_line = 0;
    for (int v = 1; v <= f.num_vars(); ++v) {
      if (on_line == 0) line << 'v';
      line << ' ' << (r.assignment[static_cast<std::size_t>(v)] ? v : -v);
      if (++on_line == 16) {
        line << '\n';
        on_line = 0;
      }
    }
    if (on_line == 0) line << 'v';
    line << " 0\n";
    std::cout << line.str();
    if (!a.set_out.empty()) {
      const VertexSet m = decode_model(f, r.assignment);
      const bool full = verify(m, Variant(f.variant)).ok;
      with_output(a.set_out, [&](std::ostream& os) { write_vertex_set(os, m); });
      std::cerr << "decoded " << m.size() << " vertices; full verification " << (full ? "passes" : "FAILS") << '\n';
    }
  }
  switch (r.status) {
    case SatStatus::kSat: return a.competition_exit_codes ? 10 : kExitOk;
    case SatStatus::kUnsat: return a.competition_exit_codes ? 20 : kExitFail;
    case SatStatus::kUnknown: return a.competition_exit_codes ? 0 : kExitUnknown;
  }
  return kExitUnknown;
}

// ------------------------------------------------------------------ search

struct SearchArgs {
  int h = 0;
  std::string variant;
  std::string mode = "exact";
  std::string pattern;
  std::string seeds;
  std::optional<int> path_cap;
  std::string preset_file;
  std::string solver;
  std::optional<double> budget_seconds;
  std::optional<std::uint64_t> target;
  std::string branching = "activity";
  unsigned threads = 1;
  std::string out;
  std::string metadata;
  bool json = false;
};

json metadata_json(const SearchResult& r) {
  json j{{"h", r.h},
         {"variant", to_string(r.variant)},
         {"size", r.size()},
         {"status", to_string(r.status)},
         {"elapsed_ms", static_cast<std::uint64_t>(r.elapsed_seconds * 1000.0 + 0.5)},
         {"mode", r.mode},
         {"certificate", to_string(r.certificate)},
         {"source", r.source},
         {"path_cap", r.path_cap},
         {"nodes", r.nodes},
         {"conflicts", r.conflicts},
         {"solver_calls", r.solver_calls}};
  if (r.phase1_size) j["phase1_size"] = *r.phase1_size;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

int run_search(const SearchArgs& a) {
  if (a.mode == "two-phase" && a.pattern.empty()) throw UsageError("--mode two-phase needs --pattern");
  if (a.mode != "two-phase" && !a.pattern.empty()) throw UsageError("--pattern applies to --mode two-phase only");
  if (a.mode != "two-phase" && a.target) throw UsageError("--target applies to --mode two-phase only");
  if (a.mode == "two-phase" && !a.preset_file.empty()) {
    throw UsageError("--preset-file cannot be combined with --mode two-phase");
  }
  if (a.mode != "heuristic" && !a.seeds.empty()) throw UsageError("--seeds applies to --mode heuristic only");
  if (a.mode == "heuristic" && !a.preset_file.empty()) {
    throw UsageError("--preset-file cannot be combined with --mode heuristic");
  }
  if (a.mode == "exact" && (a.h < 1 || a.h > kMaxExactDim)) {
    throw UsageError("--mode exact needs 1 <= --h <= " + std::to_string(kMaxExactDim));
  }

  SearchOptions o;
  o.budget_seconds = a.budget_seconds;
  o.solver_command = solver_command(a.solver);
  o.branching = kBranchingNames.at(a.branching);
  o.path_cap = a.path_cap;
  o.target = a.target;
  o.threads = a.threads;
  o.presets = read_presets(a.preset_file, a.h);

  const VariantKind kind = kVariantNames.at(a.variant);
  SearchResult r;
  if (a.mode == "exact") {
    r = exact_number(a.h, kind, o);
  } else if (a.mode == "two-phase") {
    r = two_phase_search(a.h, kind, kPatternNames.at(a.pattern), o);
  } else {
    const auto seeds = parse_heuristic_seeds(a.seeds.empty() ? "preset-layers" : a.seeds);
    r = heuristic_search(a.h, kind, *seeds, o);
  }

  if (!a.out.empty()) {
    with_output(a.out, [&](std::ostream& os) { write_vertex_set(os, r.best_set); });
    const std::string meta = a.metadata.empty() ? a.out + ".meta" : a.metadata;
    with_output(meta, [&](std::ostream& os) { write_search_metadata(os, r); });
  } else if (!a.metadata.empty()) {
    with_output(a.metadata, [&](std::ostream& os) { write_search_metadata(os, r); });
  }

  if (a.json) {
    std::cout << metadata_json(r).dump() << '\n';
  } else {
    write_search_metadata(std::cout, r);
    if (a.out.empty()) write_vertex_set(std::cout, r.best_set);
  }
  // Heuristic results are lower bounds by design; elsewhere a missing
  // certificate means the budget ran out.
  if (a.mode != "heuristic" && r.status != SearchStatus::kOptimal) return kExitUnknown;
  return kExitOk;
}

// ------------------------------------------------------------------ tables

std::string_view table_title(VariantKind k) {
  switch (k) {
    case VariantKind::kMutual: return "mutual-visibility number";
    case VariantKind::kTotal: return "total mutual-visibility number";
    case VariantKind::kOuter: return "outer mutual-visibility number";
    case VariantKind::kDual: return "dual mutual-visibility number";
  }
  return "";
}

std::string provenance(const KnownEntry& e) {
  if (e.lower_source == e.upper_source) return e.lower_source;
  return e.lower_source + " / " + e.upper_source;
}

void print_variant_table(std::ostream& os, const KnownValues& kv, VariantKind k) {
  os << "# " << table_title(k) << " of Q_h\n";
  os << std::left << std::setw(4) << "h" << std::setw(10) << "value" << "provenance\n";
  for (const KnownEntry& e : kv.entries_for(k)) {
    os << std::left << std::setw(4) << e.h << std::setw(10) << e.value_text() << provenance(e) << '\n';
  }
}

void print_summary(std::ostream& os, const KnownValues& kv) {
  int max_h = 0;
  for (const KnownEntry& e : kv.entries()) max_h = std::max(max_h, e.h);
  os << "# summary of known values (- = not tabulated)\n";
  os << std::left << std::setw(4) << "h";
  for (VariantKind k : kAllVariants) os << std::setw(10) << to_string(k);
  os << '\n';
  for (int h = 1; h <= max_h; ++h) {
    os << std::left << std::setw(4) << h;
    for (VariantKind k : kAllVariants) {
      const auto e = kv.lookup(h, k);
      os << std::setw(10) << (e ? e->value_text() : "-");
    }
    os << '\n';
  }
}

int run_tables(const std::string& which) {
  const KnownValues& kv = KnownValues::embedded();
  std::ostringstream os;
  const VariantKind order[] = {VariantKind::kMutual, VariantKind::kOuter, VariantKind::kDual, VariantKind::kTotal};
  if (which == "summary") {
    print_summary(os, kv);
  } else if (which == "all") {
    for (VariantKind k : order) {
      print_variant_table(os, kv, k);
      os << '\n';
    }
    print_summary(os, kv);
  } else {
    print_variant_table(os, kv, kVariantNames.at(which));
  }
  // Trailing spaces from padded final columns are not part of the format.
  std::istringstream lines(os.str());
  std::string line;
  while (std::getline(lines, line)) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    std::cout << line << '\n';
  }
  return kExitOk;
}

// -------------------------------------------------------------------- main

int run(int argc, char** argv) {
  CLI::App app{"Mutual-visibility sets in hypercubes"};
  app.require_subcommand(1);
  // -h is taken by --h (dimension) in the subcommands.
  app.set_help_flag("--help", "print help and exit");
  app.set_version_flag("--version", "hypervis 1.0");

  const auto variant_check = CLI::IsMember(keys(kVariantNames));
  const auto pattern_check = CLI::IsMember(keys(kPatternNames));
  const auto branching_check = CLI::IsMember(keys(kBranchingNames));
  const auto dim_range = CLI::Range(1, kMaxDim);

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "check a set file against a visibility variant");
  verify_cmd->add_option("--h", va.h, "dimension (checked against the file)")->check(dim_range);
  verify_cmd->add_option("--variant", va.variant, "mutual | total | outer | dual")->required()->check(variant_check);
  verify_cmd->add_option("--set", va.set_path, "set file, one vertex per line")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--max-distance", va.max_distance, "only check pairs up to this distance")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--all-witnesses", va.all_witnesses, "report every failing pair");
  verify_cmd->add_option("--threads", va.threads, "worker threads")->check(CLI::Range(1U, 256U));
  verify_cmd->add_flag("--json", va.json, "machine-readable output");

  ConstructArgs ca;
  auto* construct_cmd = app.add_subcommand("construct", "write a constructed set");
  construct_cmd->add_option("--kind", ca.kind, "layer-pair | layer | total | floor")
      ->required()
      ->check(CLI::IsMember({"layer-pair", "layer", "total", "floor"}));
  construct_cmd->add_option("--h", ca.h, "dimension")->required()->check(dim_range);
  construct_cmd->add_option("--i", ca.i, "first layer index")->check(CLI::NonNegativeNumber);
  construct_cmd->add_option("--gap", ca.gap, "distance between the two layers (layer-pair)")
      ->check(CLI::PositiveNumber);
  construct_cmd->add_option("--variant", ca.variant, "variant (floor)")->check(variant_check);
  construct_cmd->add_option("--out", ca.out, "output set file (default stdout)");

  BoundsArgs ba;
  auto* bounds_cmd = app.add_subcommand("bounds", "print known bounds with their provenance");
  bounds_cmd->add_option("--h", ba.h, "dimension")->required()->check(dim_range);
  bounds_cmd->add_option("--variant", ba.variant, "variant")->required()->check(variant_check);
  bounds_cmd->add_flag("--json", ba.json, "machine-readable output");

  EncodeArgs ea;
  auto* encode_cmd = app.add_subcommand("encode", "write the CNF or LP model");
  encode_cmd->add_option("--h", ea.h, "dimension")->required()->check(CLI::Range(2, kMaxDim));
  encode_cmd->add_option("--variant", ea.variant, "variant")->required()->check(variant_check);
  encode_cmd->add_option("--ell", ea.ell, "required size of M (dimacs)");
  encode_cmd->add_option("--path-cap", ea.path_cap, "longest distance with path constraints (default h)")
      ->check(CLI::Range(2, kMaxDim));
  encode_cmd->add_option("--format", ea.format, "dimacs | lp")->check(CLI::IsMember({"dimacs", "lp"}));
  encode_cmd->add_option("--preset-file", ea.preset_file, "vertices forced into M")->check(CLI::ExistingFile);
  encode_cmd->add_option("--forbid", ea.forbid, "adjacent-pair | k12-star (repeatable)")
      ->check(pattern_check);
  encode_cmd->add_option("--neighborhood-cap", ea.neighborhood_cap, "max |M n N[u]| for u in M")
      ->check(CLI::PositiveNumber);
  encode_cmd->add_flag("--antipode-closure", ea.antipode_closure, "M closed under antipodes");
  encode_cmd->add_flag("--minimal", ea.minimal, "omit the reverse path implications");
  encode_cmd->add_option("--out", ea.out, "output file (default stdout)");

  SolveArgs sa;
  auto* solve_cmd = app.add_subcommand("solve", "solve a DIMACS file");
  solve_cmd->add_option("cnf", sa.cnf_path, "DIMACS file")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--solver", sa.solver, "external command with {cnf}, or 'internal'");
  solve_cmd->add_option("--budget-seconds", sa.budget_seconds, "time limit")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--max-conflicts", sa.max_conflicts, "conflict limit (internal solver)");
  solve_cmd->add_option("--branching", sa.branching, "lowest-index | activity")
      ->check(branching_check);
  solve_cmd->add_option("--set-out", sa.set_out, "write the decoded set");
  solve_cmd->add_flag("--competition-exit-codes", sa.competition_exit_codes, "exit 10 sat, 20 unsat, 0 unknown");

  SearchArgs ra;
  auto* search_cmd = app.add_subcommand("search", "find large visibility sets");
  search_cmd->add_option("--h", ra.h, "dimension")->required()->check(CLI::Range(1, kMaxHeuristicDim));
  search_cmd->add_option("--variant", ra.variant, "variant")->required()->check(variant_check);
  search_cmd->add_option("--mode", ra.mode, "exact | two-phase | heuristic")
      ->check(CLI::IsMember({"exact", "two-phase", "heuristic"}));
  search_cmd->add_option("--pattern", ra.pattern, "adjacent-pair | k12-star (two-phase)")
      ->check(pattern_check);
  search_cmd->add_option("--seeds", ra.seeds, "preset-layers | antipode (heuristic)")
      ->check(CLI::IsMember({"preset-layers", "antipode"}));
  search_cmd->add_option("--path-cap", ra.path_cap, "starting path cap")->check(CLI::Range(2, kMaxHeuristicDim));
  search_cmd->add_option("--preset-file", ra.preset_file, "vertices forced into M")->check(CLI::ExistingFile);
  search_cmd->add_option("--solver", ra.solver, "external command with {cnf}, or 'internal'");
  search_cmd->add_option("--budget-seconds", ra.budget_seconds, "time limit")->check(CLI::PositiveNumber);
  search_cmd->add_option("--target", ra.target, "two-phase: skip phase 2 once this size is reached");
  search_cmd->add_option("--branching", ra.branching, "internal solver branching (default activity)")
      ->check(branching_check);
  search_cmd->add_option("--threads", ra.threads, "verifier threads")->check(CLI::Range(1U, 256U));
  search_cmd->add_option("--out", ra.out, "set file; metadata goes to <out>.meta");
  search_cmd->add_option("--metadata", ra.metadata, "metadata file (overrides <out>.meta)");
  search_cmd->add_flag("--json", ra.json, "print metadata as JSON");

  std::string which = "all";
  auto* tables_cmd = app.add_subcommand("tables", "print the tables of known values");
  tables_cmd->add_option("--which", which, "mutual | outer | dual | total | summary | all")
      ->check(CLI::IsMember({"mutual", "outer", "dual", "total", "summary", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify_cmd) return run_verify(va);
    if (*construct_cmd) return run_construct(ca);
    if (*bounds_cmd) return run_bounds(ba);
    if (*encode_cmd) return run_encode(ea);
    if (*solve_cmd) return run_solve(sa);
    if (*search_cmd) return run_search(ra);
    if (*tables_cmd) return run_tables(which);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SolverOutputError& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return kExitUnknown;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUnknown;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUnknown;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
