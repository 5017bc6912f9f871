#pragma once

// Constructive lower bounds, closed-form bounds and the table of known
// visibility numbers of small hypercubes.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypervis/cube.hpp"
#include "hypervis/visibility.hpp"

namespace hypervis {

struct BinaryCode {
  int length = 0;
  int min_distance = 0;
  std::vector<Vertex> words;
};

// Smallest pairwise distance among the words (length+1 for fewer than two).
[[nodiscard]] int measured_min_distance(const BinaryCode& code);

// Classical Hamming code of length 2^m - 1, minimum distance 3.
[[nodiscard]] BinaryCode hamming_code(int m);
// Greedy lexicographic code: scan words in index order, keep every word at
// distance >= d from those already kept.
[[nodiscard]] BinaryCode lexicode(int n, int d);
// Distance-3 code of length n: Hamming when n = 2^m - 1, lexicode otherwise.
[[nodiscard]] BinaryCode distance3_code(int n);

[[nodiscard]] std::uint64_t binomial(int n, int k);

// layer(0^h, i) u layer(0^h, i + gap).
[[nodiscard]] VertexSet layer_pair_set(int h, int i, int gap);

// C(h, floor(h/2) - 1) + C(h, floor(h/2) + 2), valid for h >= 8.
[[nodiscard]] std::uint64_t mv_lower_bound(int h);

// Exact value at h = 7 doubled h - 7 times.  Requires h >= 8.
[[nodiscard]] std::uint64_t doubling_upper_bound(int h, VariantKind kind);

// Extends every word by a parity bit: the first set closes to even weight,
// the second to odd weight.  Both live in Q_{n+1}.
[[nodiscard]] std::pair<VertexSet, VertexSet> parity_extend(const BinaryCode& code);

// Independence number of the even halved cube by exact branch and bound.
// Requires 2 <= h <= 7.
[[nodiscard]] int alpha_halved_bruteforce(int h);

// Tabulated A(h,4) for 3 <= h <= 16; nullopt elsewhere (unknown here).
[[nodiscard]] std::optional<std::uint64_t> a_h_4(int h);

// Largest set the constructions give for the variant; always verifies.
[[nodiscard]] VertexSet constructive_floor(int h, VariantKind kind);

struct KnownEntry {
  int h = 0;
  VariantKind kind = VariantKind::kMutual;
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  std::string lower_source;
  std::string upper_source;

  [[nodiscard]] bool exact() const { return lower == upper; }
  // "59" or "116-118".
  [[nodiscard]] std::string value_text() const;
};

class KnownValues {
 public:
  static KnownValues parse(std::string_view text);
  // The table compiled into the library from data/known_values.txt.
  static const KnownValues& embedded();

  [[nodiscard]] int version() const { return version_; }
  [[nodiscard]] std::optional<KnownEntry> lookup(int h, VariantKind kind) const;
  [[nodiscard]] const std::vector<KnownEntry>& entries() const { return entries_; }
  [[nodiscard]] std::vector<KnownEntry> entries_for(VariantKind kind) const;

 private:
  int version_ = 0;
  std::vector<KnownEntry> entries_;
};

struct Bound {
  std::uint64_t lower = 0;
  std::optional<std::uint64_t> upper;
  std::string lower_source;
  std::string upper_source;

  [[nodiscard]] bool exact() const { return upper && *upper == lower; }
};

// Best available bounds: the table where it has an entry, otherwise the
// constructions and the doubling bound.
[[nodiscard]] Bound bounds(int h, VariantKind kind);

}  // namespace hypervis
