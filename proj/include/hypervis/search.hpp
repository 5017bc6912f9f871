#pragma once

// Exact and heuristic searches for large visibility sets.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hypervis/cube.hpp"
#include "hypervis/encode.hpp"
#include "hypervis/sat.hpp"
#include "hypervis/visibility.hpp"

namespace hypervis {

enum class SearchStatus { kOptimal, kLowerBoundOnly };
enum class Certificate { kNone, kExhaustive, kUnsatAtNext };

[[nodiscard]] std::string_view to_string(SearchStatus s);
// "none", "exhaustive", "unsat-at-l+1".
[[nodiscard]] std::string_view to_string(Certificate c);

struct SearchResult {
  int h = 0;
  VariantKind variant = VariantKind::kMutual;
  std::string mode;
  VertexSet best_set;
  SearchStatus status = SearchStatus::kLowerBoundOnly;
  Certificate certificate = Certificate::kNone;
  // Path cap of the formula that produced best_set or the refutation; 0 when
  // no formula was involved.
  int path_cap = 0;
  double elapsed_seconds = 0;
  // Candidate sets examined by exhaustive search.
  std::uint64_t nodes = 0;
  // Summed over every solver call.
  std::uint64_t conflicts = 0;
  std::uint64_t solver_calls = 0;
  // Phase-1 optimum of a two-phase search.
  std::optional<std::uint64_t> phase1_size;
  // Where best_set came from ("exhaustive", "sat", "construction", ...).
  std::string source;
  // Why the search stopped short of a certificate, when it did.
  std::string detail;

  [[nodiscard]] std::uint64_t size() const { return best_set.size(); }
};

struct SearchOptions {
  // Wall-clock budget for the whole search.
  std::optional<double> budget_seconds;
  // External solver command template; the internal solver when unset.
  std::optional<std::string> solver_command;
  Branching branching = Branching::kLowestIndex;
  // Path cap for SAT-based searches; each mode picks its own default.
  std::optional<int> path_cap;
  // Vertices every reported set must contain.
  std::vector<Vertex> presets;
  // Two-phase search skips phase 2 when phase 1 already reaches this size.
  std::optional<std::uint64_t> target;
  unsigned threads = 1;
};

// Largest dimension the exhaustive orbit search accepts.
inline constexpr int kMaxExhaustiveDim = 4;
// Largest dimension exact_number accepts.
inline constexpr int kMaxExactDim = 6;
inline constexpr int kMaxHeuristicDim = 11;

// Exhaustive search for h <= 4 over orbit representatives under the cube's
// automorphism group (trivial group when presets are given).  Every set
// containing a forbidden pattern is skipped.  Mutual, total and outer sets
// are subset-closed, so only feasible sets are extended; dual sets are not,
// so every orbit is enumerated.
[[nodiscard]] SearchResult exhaustive_search(int h, VariantKind variant,
                                             const std::vector<Pattern>& forbidden = {},
                                             const std::vector<Vertex>& presets = {});

// h <= 4: exhaustive.  h = 5, 6: binary search on the target size with the
// full-distance CNF, then an explicit refutation one above the best size.
[[nodiscard]] SearchResult exact_number(int h, VariantKind variant, const SearchOptions& options = {});

// Phase 1 maximizes under a prohibition of the pattern.  Phase 2 presets the
// canonical copy of the pattern (0^h and its neighbors across the last one or
// two coordinates) with no prohibition and looks for anything larger.  Any
// set beating phase 1 contains the pattern, and symmetry moves some copy onto
// the canonical one, so the better of the two phases is the optimum.
[[nodiscard]] SearchResult two_phase_search(int h, VariantKind variant, Pattern pattern,
                                            const SearchOptions& options = {});

// Canonical copy of the pattern used by phase 2.
[[nodiscard]] std::vector<Vertex> canonical_pattern(int h, Pattern pattern);
[[nodiscard]] bool contains_pattern(const VertexSet& m, Pattern pattern);

enum class HeuristicSeeds {
  kPresetLayers,  // preset the constructive floor set
  kAntipode,      // M closed under antipodes
};

[[nodiscard]] std::string_view to_string(HeuristicSeeds s);
[[nodiscard]] std::optional<HeuristicSeeds> parse_heuristic_seeds(std::string_view name);

// Grows a set upward from the constructive floor using a path-capped CNF.
// Every reported set passes the unlimited verifier; a decoded set that fails
// it triggers a retry with a longer path cap.  The result is always a lower
// bound only.
[[nodiscard]] SearchResult heuristic_search(int h, VariantKind variant, HeuristicSeeds seeds,
                                            const SearchOptions& options = {});

// Least image of a set of Q_h (h <= 6) under all automorphisms, as a mask
// with bit v set for member v.
[[nodiscard]] std::uint64_t canonical_mask(int h, std::uint64_t mask);

// Line-oriented key=value metadata.
void write_search_metadata(std::ostream& out, const SearchResult& result);

}  // namespace hypervis
