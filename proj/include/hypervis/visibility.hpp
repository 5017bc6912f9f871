#pragma once

// M-visibility checks for the mutual, total, outer and dual variants.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypervis/cube.hpp"

namespace hypervis {

enum class VariantKind { kMutual, kTotal, kOuter, kDual };

[[nodiscard]] std::string_view to_string(VariantKind kind);
[[nodiscard]] std::optional<VariantKind> parse_variant_kind(std::string_view name);
inline constexpr VariantKind kAllVariants[] = {VariantKind::kMutual, VariantKind::kTotal,
                                               VariantKind::kOuter, VariantKind::kDual};

struct Variant {
  VariantKind kind = VariantKind::kMutual;
  // Pairs farther apart than this are not checked (M_d-visibility).  A pass
  // under a limit is a non-refutation, not a certificate.
  std::optional<int> max_check_distance;

  Variant() = default;
  Variant(VariantKind k, std::optional<int> max_distance = std::nullopt);

  [[nodiscard]] bool limited() const { return max_check_distance.has_value(); }
};

// Which pair population a failing pair came from.
enum class PairClass {
  kInside,         // u, v in M
  kInsideOutside,  // u in M, v outside M
  kOutside,        // u, v outside M
  kAny,            // u, v anywhere (total variant)
};

[[nodiscard]] std::string_view to_string(PairClass c);

struct Witness {
  Vertex u;
  Vertex v;
  PairClass pair_class = PairClass::kAny;

  [[nodiscard]] std::string describe() const;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  bool ok = true;
  // Least failing pair in (u, v) index order.
  std::optional<Witness> witness;
  // Every failing pair, only populated with VerifyOptions::all_witnesses.
  std::vector<Witness> all_witnesses;
  // False when a distance limit was in effect.
  bool certified = true;

  explicit operator bool() const { return ok; }
};

struct VerifyOptions {
  bool all_witnesses = false;
  unsigned threads = 1;
};

// True iff some shortest u,v-path has no interior vertex in M.
[[nodiscard]] bool pair_visible(const VertexSet& m, Vertex u, Vertex v);

// Checks the pair population the variant demands.  Total sets go through the
// distance-2 characterization unless a distance limit is set.
[[nodiscard]] Verdict verify(const VertexSet& m, const Variant& variant,
                             const VerifyOptions& options = {});

// Path-based check for every variant, no shortcuts.
[[nodiscard]] Verdict verify_by_paths(const VertexSet& m, const Variant& variant,
                                      const VerifyOptions& options = {});

// Total variant: no two members at distance exactly 2.
[[nodiscard]] Verdict verify_total_by_distance(const VertexSet& m);

// Dual variant: mutual, and no distance-2 interval meets M in exactly two
// non-adjacent vertices.
[[nodiscard]] Verdict verify_dual_by_characterization(const VertexSet& m);

}  // namespace hypervis
