#pragma once

// Slow reference implementations written straight from the definitions.
// They share no code with the library so that agreement is meaningful.

#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

enum class Kind { kMutual, kTotal, kOuter, kDual };

using Members = std::vector<bool>;  // indexed by vertex bits

inline Members members_of(int h, std::uint64_t mask) {
  Members m(std::size_t{1} << h, false);
  for (std::size_t v = 0; v < m.size(); ++v) m[v] = (mask >> v) & 1U;
  return m;
}

// Every shortest u,v-path as a vertex sequence, by walking one differing
// bit at a time.
inline std::vector<std::vector<std::uint32_t>> shortest_paths(std::uint32_t u, std::uint32_t v) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> current{u};
  std::function<void(std::uint32_t)> walk = [&](std::uint32_t at) {
    if (at == v) {
      out.push_back(current);
      return;
    }
    const std::uint32_t diff = at ^ v;
    for (int b = 0; b < 32; ++b) {
      if (!((diff >> b) & 1U)) continue;
      const std::uint32_t next = at ^ (1U << b);
      current.push_back(next);
      walk(next);
      current.pop_back();
    }
  };
  walk(u);
  return out;
}

inline bool visible(const Members& m, std::uint32_t u, std::uint32_t v) {
  for (const auto& path : shortest_paths(u, v)) {
    bool free = true;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) free = free && !m[path[i]];
    if (free) return true;
  }
  return false;
}

// True when the pair (u, v) must be visible under the variant.
inline bool required(Kind kind, bool u_in, bool v_in) {
  switch (kind) {
    case Kind::kMutual: return u_in && v_in;
    case Kind::kTotal: return true;
    case Kind::kOuter: return u_in || v_in;
    case Kind::kDual: return u_in == v_in;
  }
  return true;
}

// max_distance < 0 means unlimited.
inline bool verify(int h, Kind kind, const Members& m, int max_distance = -1) {
  const std::uint32_t n = 1U << h;
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      const int d = std::popcount(u ^ v);
      if (max_distance >= 0 && d > max_distance) continue;
      if (!required(kind, m[u], m[v])) continue;
      if (!visible(m, u, v)) return false;
    }
  }
  return true;
}

// Satisfiability by bit-parallel truth table; variables 1..num_vars.
// Returns the least satisfying assignment index, or -1.
inline long long truth_table(int num_vars, const std::vector<std::vector<int>>& clauses) {
  const std::size_t rows = std::size_t{1} << num_vars;
  const std::size_t words = (rows + 63) / 64;
  // column[v] has bit r set iff variable v is true in row r (bit v-1 of r).
  std::vector<std::vector<std::uint64_t>> column(static_cast<std::size_t>(num_vars) + 1,
                                                 std::vector<std::uint64_t>(words, 0));
  for (int var = 1; var <= num_vars; ++var) {
    for (std::size_t r = 0; r < rows; ++r) {
      if ((r >> (var - 1)) & 1U) column[static_cast<std::size_t>(var)][r / 64] |= std::uint64_t{1} << (r % 64);
    }
  }
  std::vector<std::uint64_t> all(words, ~std::uint64_t{0});
  if (rows % 64 != 0) all.back() = (std::uint64_t{1} << (rows % 64)) - 1;
  for (const auto& c : clauses) {
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t any = 0;
      for (int lit : c) {
        const auto& col = column[static_cast<std::size_t>(lit > 0 ? lit : -lit)];
        any |= lit > 0 ? col[w] : ~col[w];
      }
      all[w] &= any;
    }
  }
  for (std::size_t w = 0; w < words; ++w) {
    if (all[w] != 0) return static_cast<long long>(w * 64 + static_cast<std::size_t>(std::countr_zero(all[w])));
  }
  return -1;
}

// Largest size of a set of vertices with no two at distance 2, by plain
// enumeration of all subsets (h <= 4).
inline int max_total_by_enumeration(int h) {
  const std::uint32_t n = 1U << h;
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (std::uint32_t u = 0; u < n && ok; ++u) {
      if (!((mask >> u) & 1U)) continue;
      for (std::uint32_t v = u + 1; v < n && ok; ++v) {
        if (((mask >> v) & 1U) && std::popcount(u ^ v) == 2) ok = false;
      }
    }
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

// Largest visibility set by checking every subset (h <= 3).
inline int max_by_enumeration(int h, Kind kind) {
  const std::uint32_t n = 1U << h;
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) > best && verify(h, kind, members_of(h, mask))) best = std::popcount(mask);
  }
  return best;
}

inline std::uint64_t random_mask(std::mt19937_64& rng, int h, double density) {
  std::bernoulli_distribution pick(density);
  std::uint64_t mask = 0;
  for (int v = 0; v < (1 << h); ++v) {
    if (pick(rng)) mask |= std::uint64_t{1} << v;
  }
  return mask;
}

}  // namespace oracle
