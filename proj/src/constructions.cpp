#include "hypervis/constructions.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

namespace hypervis {

int measured_min_distance(const BinaryCode& code) {
  int best = code.length + 1;
  for (std::size_t i = 0; i < code.words.size(); ++i) {
    for (std::size_t j = i + 1; j < code.words.size(); ++j) {
      best = std::min(best, hamming_distance(code.words[i], code.words[j]));
    }
  }
  return best;
}

BinaryCode hamming_code(int m) {
  if (m < 2 || m > 4) throw DomainError("hamming_code supports 2 <= m <= 4");
  const int n = (1 << m) - 1;
  BinaryCode code{n, 3, {}};
  // Coordinate i (bit i-1) carries syndrome column i; codewords have zero syndrome.
  for (std::uint32_t x = 0; x < (1U << n); ++x) {
    std::uint32_t syndrome = 0;
    for (std::uint32_t rest = x; rest != 0; rest &= rest - 1) {
      syndrome ^= static_cast<std::uint32_t>(std::countr_zero(rest)) + 1;
    }
    if (syndrome == 0) code.words.emplace_back(x, n);
  }
  return code;
}

BinaryCode lexicode(int n, int d) {
  check_dim_range(n);
  if (n > 16) throw CapacityError("lexicode length capped at 16");
  if (d < 1) throw DomainError("lexicode distance must be positive");
  BinaryCode code{n, d, {}};
  std::vector<std::uint32_t> kept;
  for (std::uint32_t x = 0; x < (1U << n); ++x) {
    const bool far = std::all_of(kept.begin(), kept.end(),
                                 [&](std::uint32_t y) { return std::popcount(x ^ y) >= d; });
    if (far) {
      kept.push_back(x);
      code.words.emplace_back(x, n);
    }
  }
  return code;
}

BinaryCode distance3_code(int n) {
  if (n == 3 || n == 7 || n == 15) return hamming_code(std::countr_zero(static_cast<unsigned>(n + 1)));
  return lexicode(n, 3);
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

VertexSet layer_pair_set(int h, int i, int gap) {
  if (i < 1 || gap < 0 || i + gap > h) {
    throw DomainError("layer_pair_set: need 1 <= i and i + gap <= h");
  }
  const Vertex root = Vertex::zero(h);
  return layer(root, i) | layer(root, i + gap);
}

std::uint64_t mv_lower_bound(int h) {
  if (h < 8) throw DomainError("mv_lower_bound needs h >= 8; smaller cubes have exact values");
  return binomial(h, h / 2 - 1) + binomial(h, h / 2 + 2);
}

std::uint64_t doubling_upper_bound(int h, VariantKind kind) {
  if (h < 8) throw DomainError("doubling_upper_bound needs h >= 8");
  const auto anchor = KnownValues::embedded().lookup(7, kind);
  if (!anchor || !anchor->exact()) throw Error("no exact anchor value at h = 7");
  return anchor->upper << (h - 7);
}

std::pair<VertexSet, VertexSet> parity_extend(const BinaryCode& code) {
  if (code.min_distance < 3) throw DomainError("parity_extend needs minimum distance >= 3");
  const int n = code.length;
  check_dim_range(n + 1);
  VertexSet even(n + 1);
  VertexSet odd(n + 1);
  for (const Vertex& w : code.words) {
    if (w.dim() != n) throw DimensionError("code word length mismatch");
    const std::uint32_t parity = static_cast<std::uint32_t>(w.weight() & 1);
    even.insert_index(w.bits() | (parity << n));
    odd.insert_index(w.bits() | ((parity ^ 1U) << n));
  }
  return {even, odd};
}

namespace {

// Maximum clique on <= 64 vertices with a greedy-colouring bound.
class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<std::uint64_t> adjacency) : adj_(std::move(adjacency)) {}

  int run() {
    const int n = static_cast<int>(adj_.size());
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    expand(all, 0);
    return best_;
  }

 private:
  void expand(std::uint64_t candidates, int size) {
    if (candidates == 0) {
      best_ = std::max(best_, size);
      return;
    }
    // Colour classes in order; vertices are branched on in reverse colour order.
    std::array<int, 64> order{};
    std::array<int, 64> colour{};
    int count = 0;
    int c = 0;
    std::uint64_t uncoloured = candidates;
    while (uncoloured != 0) {
      ++c;
      std::uint64_t available = uncoloured;
      while (available != 0) {
        const int v = std::countr_zero(available);
        available &= ~adj_[static_cast<std::size_t>(v)];
        available &= available - 1;
        uncoloured &= ~(std::uint64_t{1} << v);
        order[static_cast<std::size_t>(count)] = v;
        colour[static_cast<std::size_t>(count)] = c;
        ++count;
      }
    }
    for (int i = count - 1; i >= 0; --i) {
      if (size + colour[static_cast<std::size_t>(i)] <= best_) return;
      const int v = order[static_cast<std::size_t>(i)];
      expand(candidates & adj_[static_cast<std::size_t>(v)], size + 1);
      candidates &= ~(std::uint64_t{1} << v);
    }
  }

  std::vector<std::uint64_t> adj_;
  int best_ = 0;
};

}  // namespace

int alpha_halved_bruteforce(int h) {
  if (h < 2 || h > 7) throw DomainError("alpha_halved_bruteforce supports 2 <= h <= 7");
  const HalvedCube g = halved_cube(h, Parity::kEven);
  const std::size_t n = g.vertices.size();
  // Independent sets of the halved cube are cliques of its complement.
  std::vector<std::uint64_t> complement(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && !HalvedCube::adjacent(g.vertices[i], g.vertices[j])) {
        complement[i] |= std::uint64_t{1} << j;
      }
    }
  }
  return CliqueSearch(std::move(complement)).run();
}

std::optional<std::uint64_t> a_h_4(int h) {
  static constexpr std::array<std::uint64_t, 14> kTable = {1,  2,   2,   4,   8,    16,   20,
                                                          40, 72, 144, 256, 512, 1024, 2048};
  if (h < 3 || h > 16) return std::nullopt;
  return kTable[static_cast<std::size_t>(h - 3)];
}

VertexSet constructive_floor(int h, VariantKind kind) {
  check_dim_range(h);
  const Vertex root = Vertex::zero(h);
  switch (kind) {
    case VariantKind::kMutual:
      if (h >= 4) return layer_pair_set(h, h / 2 - 1, 3);
      return layer(root, std::max(1, h / 2));
    case VariantKind::kOuter:
      return layer(root, std::max(1, h / 2));
    case VariantKind::kTotal:
    case VariantKind::kDual: {
      if (h == 1) return VertexSet::full(1);
      auto [even, odd] = parity_extend(distance3_code(h - 1));
      return even | odd;
    }
  }
  return VertexSet(h);
}

}  // namespace hypervis
