#include "hypervis/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <mutex>
#include <numeric>
#include <ostream>
#include <unordered_set>

#include "hypervis/constructions.hpp"

namespace hypervis {

std::string_view to_string(SearchStatus s) {
  return s == SearchStatus::kOptimal ? "optimal" : "lower-bound-only";
}

std::string_view to_string(Certificate c) {
  switch (c) {
    case Certificate::kNone: return "none";
    case Certificate::kExhaustive: return "exhaustive";
    case Certificate::kUnsatAtNext: return "unsat-at-l+1";
  }
  return "?";
}

std::string_view to_string(HeuristicSeeds s) {
  return s == HeuristicSeeds::kPresetLayers ? "preset-layers" : "antipode";
}

std::optional<HeuristicSeeds> parse_heuristic_seeds(std::string_view name) {
  if (name == "preset-layers") return HeuristicSeeds::kPresetLayers;
  if (name == "antipode") return HeuristicSeeds::kAntipode;
  return std::nullopt;
}

// ------------------------------------------------------------ symmetry

namespace {

constexpr int kMaxCanonicalDim = 6;

// table[a * 2^h + x] is the image of vertex x under automorphism a.
struct AutomorphismTable {
  int h = 0;
  std::size_t count = 0;
  std::vector<std::uint8_t> image;
};

AutomorphismTable build_table(int h) {
  AutomorphismTable t;
  t.h = h;
  const std::uint32_t n = std::uint32_t{1} << h;
  std::vector<int> perm(static_cast<std::size_t>(h));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::uint32_t shift = 0; shift < n; ++shift) {
      const CubeAutomorphism a(perm, shift);
      for (std::uint32_t x = 0; x < n; ++x) t.image.push_back(static_cast<std::uint8_t>(a.apply_index(x)));
      ++t.count;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return t;
}

const AutomorphismTable& automorphisms(int h) {
  static std::array<AutomorphismTable, kMaxCanonicalDim + 1> tables;
  static std::array<std::once_flag, kMaxCanonicalDim + 1> flags;
  std::call_once(flags[static_cast<std::size_t>(h)], [h] { tables[static_cast<std::size_t>(h)] = build_table(h); });
  return tables[static_cast<std::size_t>(h)];
}

VertexSet mask_to_set(int h, std::uint64_t mask) {
  VertexSet s(h);
  while (mask != 0) {
    s.insert_index(static_cast<std::uint32_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return s;
}

bool mask_has_adjacent_pair(int h, std::uint64_t mask) {
  for (int i = 0; i < h; ++i) {
    // Members whose neighbor across bit i is also a member.
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (mask >> (v ^ (1 << i)) & 1U) return true;
    }
  }
  return false;
}

bool mask_has_star(int h, std::uint64_t mask) {
  const std::uint32_t n = std::uint32_t{1} << h;
  for (std::uint32_t c = 0; c < n; ++c) {
    int member_neighbors = 0;
    for (int i = 0; i < h; ++i) member_neighbors += static_cast<int>(mask >> (c ^ (1U << i)) & 1U);
    if (member_neighbors >= 2 && (mask >> c & 1U)) return true;
  }
  return false;
}

bool mask_has_pattern(int h, std::uint64_t mask, Pattern p) {
  return p == Pattern::kAdjacentPair ? mask_has_adjacent_pair(h, mask) : mask_has_star(h, mask);
}

using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(std::optional<double> budget) : start_(Clock::now()), budget_(budget) {}

  [[nodiscard]] double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }
  [[nodiscard]] std::optional<double> remaining() const {
    if (!budget_) return std::nullopt;
    return std::max(0.0, *budget_ - elapsed());
  }
  [[nodiscard]] bool expired() const { return budget_ && elapsed() >= *budget_; }

 private:
  Clock::time_point start_;
  std::optional<double> budget_;
};

bool verified(const VertexSet& m, VariantKind kind, unsigned threads) {
  VerifyOptions vo;
  vo.threads = threads;
  return verify(m, Variant(kind), vo).ok;
}

}  // namespace

std::uint64_t canonical_mask(int h, std::uint64_t mask) {
  if (h < 1 || h > kMaxCanonicalDim) throw DomainError("canonical forms need 1 <= h <= 6");
  const std::uint32_t n = std::uint32_t{1} << h;
  if (n < 64 && (mask >> n) != 0) throw DomainError("mask has bits outside Q_" + std::to_string(h));
  const auto& t = automorphisms(h);
  std::uint64_t best = mask;
  for (std::size_t a = 0; a < t.count; ++a) {
    const std::uint8_t* img = &t.image[a * n];
    std::uint64_t out = 0;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      out |= std::uint64_t{1} << img[std::countr_zero(rest)];
    }
    best = std::min(best, out);
  }
  return best;
}

bool contains_pattern(const VertexSet& m, Pattern pattern) {
  for (const Vertex& v : m.vertices()) {
    const std::size_t member_neighbors = (open_neighborhood(v) & m).size();
    if (pattern == Pattern::kAdjacentPair && member_neighbors >= 1) return true;
    if (pattern == Pattern::kK12Star && member_neighbors >= 2) return true;
  }
  return false;
}

std::vector<Vertex> canonical_pattern(int h, Pattern pattern) {
  check_dim_range(h);
  const int needed = pattern == Pattern::kAdjacentPair ? 1 : 2;
  if (h < needed) throw DomainError("Q_" + std::to_string(h) + " is too small for the pattern");
  std::vector<Vertex> out{Vertex::zero(h)};
  // Neighbors across the last coordinates: 0...01 then 0...010.
  for (int k = 0; k < needed; ++k) out.push_back(Vertex(std::uint32_t{1} << (h - 1 - k), h));
  return out;
}

// ----------------------------------------------------------- exhaustive

namespace {

// Fills result; false when no set satisfies the constraints.
bool exhaustive_impl(int h, VariantKind variant, const std::vector<Pattern>& forbidden,
                     const std::vector<Vertex>& presets, SearchResult& result) {
  if (h < 1 || h > kMaxExhaustiveDim) {
    throw DomainError("exhaustive search needs 1 <= h <= " + std::to_string(kMaxExhaustiveDim));
  }
  const Deadline clock(std::nullopt);
  result.h = h;
  result.variant = variant;
  result.mode = "exhaustive";
  result.source = "exhaustive";

  const std::uint32_t n = std::uint32_t{1} << h;
  std::uint64_t start = 0;
  for (const Vertex& v : presets) {
    if (v.dim() != h) throw DimensionError("preset " + v.to_string() + " is not a vertex of Q_" + std::to_string(h));
    start |= std::uint64_t{1} << v.bits();
  }
  auto blocked = [&](std::uint64_t mask) {
    return std::any_of(forbidden.begin(), forbidden.end(), [&](Pattern p) { return mask_has_pattern(h, mask, p); });
  };
  if (blocked(start)) throw DomainError("presets contain a forbidden pattern");

  // With presets the symmetry group would have to fix them; use none.
  const bool use_symmetry = presets.empty();
  auto canon = [&](std::uint64_t mask) { return use_symmetry ? canonical_mask(h, mask) : mask; };
  const bool hereditary = variant != VariantKind::kDual;

  std::optional<std::uint64_t> best;
  auto consider = [&](std::uint64_t mask) {
    ++result.nodes;
    const bool ok = verified(mask_to_set(h, mask), variant, 1);
    if (ok && (!best || std::popcount(mask) > std::popcount(*best))) best = mask;
    return ok;
  };

  std::vector<std::uint64_t> level;
  if (consider(start) || !hereditary) level.push_back(canon(start));
  while (!level.empty()) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> next;
    for (std::uint64_t s : level) {
      for (std::uint32_t v = 0; v < n; ++v) {
        const std::uint64_t t = s | std::uint64_t{1} << v;
        if (t == s || blocked(t)) continue;
        const std::uint64_t c = canon(t);
        if (!seen.insert(c).second) continue;
        // Feasibility is invariant under automorphisms.
        if (consider(c) || !hereditary) next.push_back(c);
      }
    }
    level = std::move(next);
  }

  result.elapsed_seconds = clock.elapsed();
  if (!best) return false;
  result.best_set = mask_to_set(h, *best);
  result.status = SearchStatus::kOptimal;
  result.certificate = Certificate::kExhaustive;
  return true;
}

}  // namespace

SearchResult exhaustive_search(int h, VariantKind variant, const std::vector<Pattern>& forbidden,
                               const std::vector<Vertex>& presets) {
  SearchResult result;
  if (!exhaustive_impl(h, variant, forbidden, presets, result)) {
    throw DomainError("no " + std::string(to_string(variant)) + " set of Q_" + std::to_string(h) +
                      " satisfies the constraints");
  }
  return result;
}

// ------------------------------------------------------------ SAT driver

namespace {

enum class ProbeOutcome { kFound, kRefuted, kUnknown, kSpurious };

// Answers "is there a set of size >= ell?" with one formula per path cap.
class SatDriver {
 public:
  SatDriver(EncodeConfig config, const SearchOptions& options, const Deadline& deadline, SearchResult& result)
      : config_(std::move(config)), options_(options), deadline_(deadline), result_(result) {
    config_.target.reset();
    if (config_.path_cap == 0) config_.path_cap = config_.h;
    rebuild();
  }

  [[nodiscard]] int path_cap() const { return config_.path_cap; }
  [[nodiscard]] std::uint64_t universe_size() const { return std::uint64_t{1} << config_.h; }
  [[nodiscard]] bool full_distance() const { return config_.path_cap == config_.h; }
  [[nodiscard]] const VertexSet& found() const { return found_; }
  [[nodiscard]] const std::string& detail() const { return detail_; }

  ProbeOutcome probe(std::uint64_t ell) {
    if (deadline_.expired()) {
      detail_ = "time budget exhausted";
      return ProbeOutcome::kUnknown;
    }
    const CnfFormula f = with_target(base_, ell);
    SatResult r;
    if (options_.solver_command) {
      r = external_solve(f, *options_.solver_command, deadline_.remaining());
    } else {
      SolverOptions so;
      so.max_seconds = deadline_.remaining();
      so.branching = options_.branching;
      r = dpll_solve(f, so);
    }
    ++result_.solver_calls;
    result_.conflicts += r.stats.conflicts;
    switch (r.status) {
      case SatStatus::kUnsat: return ProbeOutcome::kRefuted;
      case SatStatus::kUnknown:
        detail_ = r.detail.empty() ? "solver gave up" : r.detail;
        return ProbeOutcome::kUnknown;
      case SatStatus::kSat: break;
    }
    VertexSet m = decode_model(f, r.assignment);
    for (const Vertex& p : config_.presets) {
      if (!m.contains(p)) throw Error("internal: decoded set lost preset " + p.to_string());
    }
    if (!verified(m, config_.variant, options_.threads)) {
      if (full_distance()) throw Error("internal: decoded set fails verification at full path cap");
      return ProbeOutcome::kSpurious;
    }
    found_ = std::move(m);
    return ProbeOutcome::kFound;
  }

  // Lengthens the path cap by one; false when it is already the diameter.
  bool widen() {
    if (full_distance()) return false;
    ++config_.path_cap;
    rebuild();
    return true;
  }

 private:
  void rebuild() { base_ = emit_cnf(config_); }

  EncodeConfig config_;
  const SearchOptions& options_;
  const Deadline& deadline_;
  SearchResult& result_;
  CnfFormula base_;
  VertexSet found_;
  std::string detail_;
};

// Raises best one size at a time until a refutation, a budget stop, or the
// whole vertex set.  Returns true when it ended in a refutation (or the
// full vertex set), with the refuting path cap in *cap_used.
bool climb(SatDriver& driver, std::optional<VertexSet>& best, std::uint64_t floor_size, std::string& detail,
           int* cap_used) {
  std::uint64_t lo = best ? std::max<std::uint64_t>(best->size(), floor_size) : floor_size;
  while (true) {
    const std::uint64_t ell = lo + 1;
    if (ell > driver.universe_size()) {
      *cap_used = driver.path_cap();
      return true;
    }
    switch (driver.probe(ell)) {
      case ProbeOutcome::kFound:
        best = driver.found();
        lo = best->size();
        break;
      case ProbeOutcome::kRefuted:
        *cap_used = driver.path_cap();
        return true;
      case ProbeOutcome::kUnknown:
        detail = driver.detail();
        return false;
      case ProbeOutcome::kSpurious:
        driver.widen();
        break;
    }
  }
}

EncodeConfig base_config(int h, VariantKind variant, const SearchOptions& options, int default_cap) {
  EncodeConfig c;
  c.h = h;
  c.variant = variant;
  c.path_cap = std::clamp(options.path_cap.value_or(default_cap), 2, h);
  c.presets = options.presets;
  return c;
}

void finish(SearchResult& r, const Deadline& clock) {
  r.elapsed_seconds = clock.elapsed();
  if (!verified(r.best_set, r.variant, 1)) throw Error("internal: search produced an unverified set");
}

}  // namespace

// ------------------------------------------------------------ exact

SearchResult exact_number(int h, VariantKind variant, const SearchOptions& options) {
  if (h < 1 || h > kMaxExactDim) throw DomainError("exact search needs 1 <= h <= " + std::to_string(kMaxExactDim));
  if (h <= kMaxExhaustiveDim && !options.solver_command) {
    SearchResult r = exhaustive_search(h, variant, {}, options.presets);
    r.mode = "exact";
    return r;
  }

  const Deadline clock(options.budget_seconds);
  SearchResult result;
  result.h = h;
  result.variant = variant;
  result.mode = "exact";
  const std::uint64_t n = std::uint64_t{1} << h;

  std::optional<VertexSet> best;
  const VertexSet floor = constructive_floor(h, variant);
  VertexSet preset_set(h);
  for (const Vertex& p : options.presets) preset_set.insert(p);
  if (preset_set.is_subset_of(floor) && verified(floor, variant, options.threads)) {
    best = floor;
    result.source = "construction";
  } else if (verified(preset_set, variant, options.threads)) {
    best = preset_set;
    result.source = "presets";
  }

  SatDriver driver(base_config(h, variant, options, h), options, clock, result);
  std::uint64_t lo = best ? best->size() : preset_set.size();
  if (!best && lo > 0) --lo;  // no verified set of the preset size yet
  // Doubling guess for the top of the range; it is only a guide, since the
  // final answer is confirmed by an explicit refutation.
  const Bound prev = bounds(h - 1, variant);
  std::uint64_t hi = std::min<std::uint64_t>(n, 2 * prev.upper.value_or(n / 2));
  hi = std::max(hi, lo);

  std::optional<int> refuted_cap;
  std::optional<std::uint64_t> refuted_at;
  bool stopped = false;
  while (!stopped) {
    while (lo < hi) {
      const std::uint64_t mid = lo + (hi - lo + 1) / 2;
      const ProbeOutcome o = driver.probe(mid);
      if (o == ProbeOutcome::kFound) {
        best = driver.found();
        result.source = "sat";
        lo = std::max<std::uint64_t>(mid, best->size());
        hi = std::max(hi, lo);
      } else if (o == ProbeOutcome::kRefuted) {
        hi = mid - 1;
        refuted_at = mid;
        refuted_cap = driver.path_cap();
      } else if (o == ProbeOutcome::kSpurious) {
        driver.widen();
      } else {
        stopped = true;
        result.detail = driver.detail();
        break;
      }
    }
    if (stopped) break;
    if (lo + 1 > n) {
      result.status = SearchStatus::kOptimal;
      result.certificate = Certificate::kExhaustive;
      break;
    }
    if (refuted_at == lo + 1) {
      result.path_cap = *refuted_cap;
      if (*refuted_cap == h) {
        result.status = SearchStatus::kOptimal;
        result.certificate = Certificate::kUnsatAtNext;
      } else {
        result.detail = "refutation used a path cap below the diameter";
      }
      break;
    }
    // The guessed top of the range was never refuted; test it directly.
    hi = n;
    const ProbeOutcome o = driver.probe(lo + 1);
    if (o == ProbeOutcome::kFound) {
      best = driver.found();
      result.source = "sat";
      lo = best->size();
    } else if (o == ProbeOutcome::kRefuted) {
      refuted_at = lo + 1;
      refuted_cap = driver.path_cap();
      hi = lo;
    } else if (o == ProbeOutcome::kSpurious) {
      driver.widen();
      hi = lo;  // retry the same probe at the longer cap
    } else {
      result.detail = driver.detail();
      stopped = true;
    }
  }

  if (!best) throw Error("no verified set found: " + result.detail);
  result.best_set = *best;
  if (result.path_cap == 0) result.path_cap = driver.path_cap();
  finish(result, clock);
  return result;
}

// ------------------------------------------------------------ two-phase

SearchResult two_phase_search(int h, VariantKind variant, Pattern pattern, const SearchOptions& options) {
  if (!options.presets.empty()) {
    throw DomainError("two-phase search fixes its own presets; drop the user presets");
  }
  const std::vector<Vertex> fixed = canonical_pattern(h, pattern);

  if (h <= kMaxExhaustiveDim && !options.solver_command) {
    const Deadline clock(std::nullopt);
    SearchResult phase1 = exhaustive_search(h, variant, {pattern});
    SearchResult r = phase1;
    r.mode = "two-phase";
    r.phase1_size = phase1.size();
    if (options.target && phase1.size() >= *options.target) {
      r.status = SearchStatus::kLowerBoundOnly;
      r.certificate = Certificate::kNone;
      r.detail = "phase 1 reached the target; phase 2 skipped";
    } else {
      SearchResult phase2;
      const bool found = exhaustive_impl(h, variant, {}, fixed, phase2);
      r.nodes += phase2.nodes;
      if (found && phase2.size() > phase1.size()) {
        r.best_set = phase2.best_set;
        r.source = "exhaustive (phase 2)";
      } else {
        r.source = "exhaustive (phase 1)";
      }
    }
    finish(r, clock);
    return r;
  }

  if (h > kMaxHeuristicDim) throw DomainError("two-phase search needs h <= " + std::to_string(kMaxHeuristicDim));
  const Deadline clock(options.budget_seconds);
  SearchResult result;
  result.h = h;
  result.variant = variant;
  result.mode = "two-phase";

  // Phase 1: prohibit the pattern.
  std::optional<VertexSet> best;
  const VertexSet floor = constructive_floor(h, variant);
  if (!contains_pattern(floor, pattern) && verified(floor, variant, options.threads)) {
    best = floor;
    result.source = "construction (phase 1)";
  }
  EncodeConfig c1 = base_config(h, variant, options, h);
  c1.forbidden = {pattern};
  SatDriver d1(c1, options, clock, result);
  int cap1 = 0;
  const std::uint64_t start1 = best ? best->size() : 0;
  const bool done1 = climb(d1, best, 0, result.detail, &cap1);
  if (best && (result.source.empty() || best->size() > start1)) result.source = "sat (phase 1)";
  result.phase1_size = best ? best->size() : 0;
  result.path_cap = d1.path_cap();

  bool certified = done1 && cap1 == h;
  if (done1 && !(options.target && best && best->size() >= *options.target)) {
    // Phase 2: the pattern is present; fix it canonically.
    EncodeConfig c2 = base_config(h, variant, options, h);
    c2.presets = fixed;
    SatDriver d2(c2, options, clock, result);
    int cap2 = 0;
    // A set from phase 1 need not contain the canonical copy, so climbing
    // starts from its size without reusing the set itself.
    std::optional<VertexSet> seed;
    const bool done2 = climb(d2, seed, result.phase1_size.value_or(0), result.detail, &cap2);
    if (seed && (!best || seed->size() > best->size())) {
      best = seed;
      result.source = "sat (phase 2)";
    }
    certified = certified && done2 && cap2 == h;
  } else {
    certified = false;
  }

  if (!best) throw Error("no verified set found: " + result.detail);
  result.best_set = *best;
  if (certified) {
    result.status = SearchStatus::kOptimal;
    result.certificate = Certificate::kUnsatAtNext;
  }
  finish(result, clock);
  return result;
}

// ------------------------------------------------------------ heuristic

SearchResult heuristic_search(int h, VariantKind variant, HeuristicSeeds seeds, const SearchOptions& options) {
  if (h < 2 || h > kMaxHeuristicDim) {
    throw DomainError("heuristic search needs 2 <= h <= " + std::to_string(kMaxHeuristicDim));
  }
  const Deadline clock(options.budget_seconds);
  SearchResult result;
  result.h = h;
  result.variant = variant;
  result.mode = std::string("heuristic/") + std::string(to_string(seeds));

  const VertexSet floor = constructive_floor(h, variant);
  if (!verified(floor, variant, options.threads)) throw Error("internal: constructive floor fails verification");
  std::optional<VertexSet> best = floor;
  result.source = "construction";

  EncodeConfig config = base_config(h, variant, options, 4);
  if (seeds == HeuristicSeeds::kPresetLayers) {
    for (const Vertex& v : floor.vertices()) config.presets.push_back(v);
  } else {
    config.antipode_closure = true;
  }
  SatDriver driver(config, options, clock, result);
  int cap = 0;
  const std::uint64_t floor_size = floor.size();
  if (climb(driver, best, floor_size, result.detail, &cap)) {
    result.detail = "no larger set under the heuristic constraints at path cap " + std::to_string(cap);
  }
  if (best->size() > floor_size) result.source = "sat";
  result.best_set = *best;
  result.path_cap = driver.path_cap();
  finish(result, clock);
  return result;
}

// ------------------------------------------------------------ metadata

void write_search_metadata(std::ostream& out, const SearchResult& r) {
  out << "h=" << r.h << '\n'
      << "variant=" << to_string(r.variant) << '\n'
      << "mode=" << r.mode << '\n'
      << "size=" << r.size() << '\n'
      << "status=" << to_string(r.status) << '\n'
      << "certificate=" << to_string(r.certificate) << '\n'
      << "source=" << r.source << '\n'
      << "path_cap=" << r.path_cap << '\n'
      << "elapsed_ms=" << static_cast<std::uint64_t>(r.elapsed_seconds * 1000.0 + 0.5) << '\n'
      << "nodes=" << r.nodes << '\n'
      << "conflicts=" << r.conflicts << '\n'
      << "solver_calls=" << r.solver_calls << '\n';
  if (r.phase1_size) out << "phase1_size=" << *r.phase1_size << '\n';
  if (!r.detail.empty()) out << "detail=" << r.detail << '\n';
}

}  // namespace hypervis
