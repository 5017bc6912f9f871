#include "hypervis/visibility.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <thread>

namespace hypervis {

std::string_view to_string(VariantKind kind) {
  switch (kind) {
    case VariantKind::kMutual: return "mutual";
    case VariantKind::kTotal: return "total";
    case VariantKind::kOuter: return "outer";
    case VariantKind::kDual: return "dual";
  }
  return "?";
}

std::optional<VariantKind> parse_variant_kind(std::string_view name) {
  for (auto k : kAllVariants) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

Variant::Variant(VariantKind k, std::optional<int> max_distance)
    : kind(k), max_check_distance(max_distance) {
  if (max_distance && *max_distance < 2) {
    throw DomainError("max check distance must be at least 2");
  }
}

std::string_view to_string(PairClass c) {
  switch (c) {
    case PairClass::kInside: return "M-M";
    case PairClass::kInsideOutside: return "M-complement";
    case PairClass::kOutside: return "complement-complement";
    case PairClass::kAny: return "V-V";
  }
  return "?";
}

std::string Witness::describe() const {
  return u.to_string() + " " + v.to_string() + " (" + std::string(to_string(pair_class)) + ")";
}

bool pair_visible(const VertexSet& m, Vertex u, Vertex v) {
  if (u.dim() != m.dim() || v.dim() != m.dim()) {
    throw DimensionError("pair_visible: dimension mismatch");
  }
  const std::uint32_t diff = u.bits() ^ v.bits();
  const int d = std::popcount(diff);
  if (d <= 1) return true;
  if (d == 2) {
    const std::uint32_t low = diff & (~diff + 1);
    return !m.contains_index(u.bits() ^ low) || !m.contains_index(u.bits() ^ (diff ^ low));
  }

  // Layered sweep over the subcube I(u,v): local index s is the set of
  // coordinates already flipped, reach[s] says an M-free prefix gets there.
  int positions[kMaxDim];
  int n = 0;
  for (std::uint32_t rest = diff; rest != 0; rest &= rest - 1) {
    positions[n++] = std::countr_zero(rest);
  }
  const std::size_t local_size = std::size_t{1} << d;
  thread_local std::vector<std::uint8_t> reach;
  thread_local std::vector<std::uint32_t> global;
  reach.assign(local_size, 0);
  global.resize(local_size);
  reach[0] = 1;
  global[0] = u.bits();
  const std::size_t full = local_size - 1;
  for (std::size_t s = 1; s <= full; ++s) {
    const int low = std::countr_zero(s);
    global[s] = global[s & (s - 1)] ^ (1U << positions[low]);
    if (s != full && m.contains_index(global[s])) continue;
    for (std::size_t rest = s; rest != 0; rest &= rest - 1) {
      if (reach[s ^ (rest & (~rest + 1))]) {
        reach[s] = 1;
        break;
      }
    }
  }
  return reach[full] != 0;
}

namespace {

struct PairFailure {
  std::uint32_t u;
  std::uint32_t v;
};

// Returns failing pairs in (u, v) order: only the least one unless collect_all.
template <class Include>
std::vector<PairFailure> scan_pairs(const VertexSet& m, int limit, bool collect_all,
                                    unsigned threads, Include include) {
  const std::uint32_t n = m.universe_size();
  threads = std::max(1U, std::min(threads, n));
  std::vector<std::vector<PairFailure>> found(threads);
  std::atomic<std::uint32_t> best_row{std::numeric_limits<std::uint32_t>::max()};

  auto worker = [&](unsigned t) {
    auto& out = found[t];
    for (std::uint32_t u = t; u < n; u += threads) {
      if (!collect_all && u > best_row.load(std::memory_order_relaxed)) return;
      for (std::uint32_t v = u + 1; v < n; ++v) {
        const int d = std::popcount(u ^ v);
        if (d < 2 || d > limit || !include(u, v)) continue;
        if (!pair_visible(m, Vertex(u, m.dim()), Vertex(v, m.dim()))) {
          out.push_back({u, v});
          if (!collect_all) {
            std::uint32_t cur = best_row.load();
            while (u < cur && !best_row.compare_exchange_weak(cur, u)) {
            }
            return;
          }
        }
      }
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }

  std::vector<PairFailure> all;
  for (auto& f : found) all.insert(all.end(), f.begin(), f.end());
  std::sort(all.begin(), all.end(), [](const PairFailure& a, const PairFailure& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  if (!collect_all && all.size() > 1) all.resize(1);
  return all;
}

PairClass classify(const VertexSet& m, VariantKind kind, std::uint32_t u, std::uint32_t v) {
  if (kind == VariantKind::kTotal) return PairClass::kAny;
  const bool in_u = m.contains_index(u);
  const bool in_v = m.contains_index(v);
  if (in_u && in_v) return PairClass::kInside;
  if (in_u || in_v) return PairClass::kInsideOutside;
  return PairClass::kOutside;
}

Verdict make_verdict(const VertexSet& m, VariantKind kind, bool certified,
                     const std::vector<PairFailure>& failures, bool collect_all) {
  Verdict verdict;
  verdict.certified = certified;
  verdict.ok = failures.empty();
  for (const auto& f : failures) {
    Witness w{Vertex(f.u, m.dim()), Vertex(f.v, m.dim()), classify(m, kind, f.u, f.v)};
    if (!verdict.witness) verdict.witness = w;
    if (collect_all) verdict.all_witnesses.push_back(w);
  }
  return verdict;
}

}  // namespace

Verdict verify_by_paths(const VertexSet& m, const Variant& variant, const VerifyOptions& options) {
  const int limit = variant.max_check_distance.value_or(m.dim());
  const VariantKind kind = variant.kind;
  auto include = [&](std::uint32_t u, std::uint32_t v) {
    const bool in_u = m.contains_index(u);
    const bool in_v = m.contains_index(v);
    switch (kind) {
      case VariantKind::kMutual: return in_u && in_v;
      case VariantKind::kTotal: return true;
      case VariantKind::kOuter: return in_u || in_v;
      case VariantKind::kDual: return in_u == in_v;
    }
    return false;
  };
  const auto failures = scan_pairs(m, limit, options.all_witnesses, options.threads, include);
  return make_verdict(m, kind, !variant.limited() || limit >= m.dim(), failures,
                      options.all_witnesses);
}

Verdict verify(const VertexSet& m, const Variant& variant, const VerifyOptions& options) {
  if (variant.kind == VariantKind::kTotal && !variant.limited() && !options.all_witnesses) {
    return verify_total_by_distance(m);
  }
  return verify_by_paths(m, variant, options);
}

Verdict verify_total_by_distance(const VertexSet& m) {
  // Two members at distance 2 block both shortest paths between the two
  // middle vertices of their interval; that middle pair is the witness.
  Verdict verdict;
  const auto members = m.indices();
  std::optional<PairFailure> best;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const std::uint32_t diff = members[i] ^ members[j];
      if (std::popcount(diff) != 2) continue;
      const std::uint32_t low = diff & (~diff + 1);
      const std::uint32_t a = members[i] ^ low;
      const std::uint32_t b = members[i] ^ (diff ^ low);
      const PairFailure f{std::min(a, b), std::max(a, b)};
      if (!best || f.u < best->u || (f.u == best->u && f.v < best->v)) best = f;
    }
  }
  if (best) {
    verdict.ok = false;
    verdict.witness = Witness{Vertex(best->u, m.dim()), Vertex(best->v, m.dim()), PairClass::kAny};
  }
  return verdict;
}

Verdict verify_dual_by_characterization(const VertexSet& m) {
  Verdict mutual = verify_by_paths(m, Variant(VariantKind::kMutual));
  if (!mutual.ok) return mutual;
  // For each distance-2 pair (u,v) with middles a,b: M meeting I(u,v) in
  // exactly {u,v} strands (a,b); exactly {a,b} strands (u,v).
  Verdict verdict;
  const std::uint32_t n = m.universe_size();
  for (std::uint32_t u = 0; u < n && verdict.ok; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      const std::uint32_t diff = u ^ v;
      if (std::popcount(diff) != 2) continue;
      const std::uint32_t low = diff & (~diff + 1);
      const std::uint32_t a = u ^ low;
      const std::uint32_t b = u ^ (diff ^ low);
      const bool in_u = m.contains_index(u), in_v = m.contains_index(v);
      const bool in_a = m.contains_index(a), in_b = m.contains_index(b);
      if (in_u + in_v + in_a + in_b != 2) continue;
      if (in_u && in_v) {
        verdict.ok = false;
        verdict.witness =
            Witness{Vertex(std::min(a, b), m.dim()), Vertex(std::max(a, b), m.dim()),
                    PairClass::kOutside};
        break;
      }
      if (in_a && in_b) {
        verdict.ok = false;
        verdict.witness = Witness{Vertex(u, m.dim()), Vertex(v, m.dim()), PairClass::kOutside};
        break;
      }
    }
  }
  return verdict;
}

}  // namespace hypervis
