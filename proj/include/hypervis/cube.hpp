#pragma once

// Hypercube geometry: vertices, vertex sets, layers, intervals, subcubes,
// halved cubes and shortest-path enumeration in Q_h.
//
// A vertex of Q_h is a binary string b_1 ... b_h.  It is stored as an integer
// bitmask where bit i holds coordinate i+1, so the leftmost character of the
// text form is the least significant bit.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypervis/error.hpp"

namespace hypervis {

inline constexpr int kMaxDim = 24;

// Longest shortest path enumerate_shortest_paths will expand (8! paths).
inline constexpr int kMaxEnumeratedDistance = 8;

class Vertex {
 public:
  constexpr Vertex() = default;
  Vertex(std::uint32_t bits, int dim);

  static Vertex zero(int dim) { return Vertex(0, dim); }
  // Parses the text form, e.g. "0110".
  static Vertex parse(std::string_view text);

  [[nodiscard]] constexpr std::uint32_t bits() const { return bits_; }
  [[nodiscard]] constexpr int dim() const { return dim_; }
  [[nodiscard]] int weight() const;
  // Coordinate value, 1-based as in b_1 ... b_h.
  [[nodiscard]] bool coordinate(int i) const;
  // Flips the coordinate stored in bit `bit` (0-based).
  [[nodiscard]] Vertex with_bit_flipped(int bit) const;
  [[nodiscard]] std::string to_string() const;

  friend constexpr bool operator==(Vertex, Vertex) = default;
  friend constexpr auto operator<=>(Vertex a, Vertex b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint32_t bits_ = 0;
  int dim_ = 0;
};

std::ostream& operator<<(std::ostream& os, Vertex v);

// Subset of V(Q_h) backed by a bitset of length 2^h.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int dim);

  static VertexSet from_indices(int dim, std::span<const std::uint32_t> indices);
  static VertexSet from_vertices(int dim, std::span<const Vertex> vertices);
  // Convenience for literals: {"0000", "0011"}.
  static VertexSet parse_list(std::span<const std::string_view> texts);
  static VertexSet parse_list(std::initializer_list<std::string_view> texts);
  static VertexSet full(int dim);

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] std::uint32_t universe_size() const { return std::uint32_t{1} << dim_; }

  [[nodiscard]] bool contains(Vertex v) const;
  [[nodiscard]] bool contains_index(std::uint32_t index) const {
    return (words_[index >> 6] >> (index & 63)) & 1U;
  }
  void insert(Vertex v);
  void erase(Vertex v);
  void insert_index(std::uint32_t index) { words_[index >> 6] |= std::uint64_t{1} << (index & 63); }
  void erase_index(std::uint32_t index) { words_[index >> 6] &= ~(std::uint64_t{1} << (index & 63)); }

  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] bool empty() const { return size() == 0; }

  // Members in increasing index order.
  [[nodiscard]] std::vector<std::uint32_t> indices() const;
  [[nodiscard]] std::vector<Vertex> vertices() const;
  [[nodiscard]] VertexSet complement() const;
  [[nodiscard]] bool is_subset_of(const VertexSet& other) const;

  [[nodiscard]] std::span<const std::uint64_t> words() const { return words_; }

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  template <class F>
  void for_each_index(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        const int bit = __builtin_ctzll(word);
        f(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(bit)));
        word &= word - 1;
      }
    }
  }

 private:
  void check_dim(Vertex v) const;
  void trim();

  int dim_ = 0;
  std::vector<std::uint64_t> words_;
};

struct Path {
  std::vector<Vertex> vertices;

  [[nodiscard]] int length() const { return static_cast<int>(vertices.size()) - 1; }
  // Vertices strictly between the endpoints.
  [[nodiscard]] std::span<const Vertex> interior() const;
};

enum class Parity { kEven, kOdd };

// Graph on one weight-parity class of Q_h with edges between vertices at
// Hamming distance 2.
struct HalvedCube {
  int dim = 0;
  Parity parity = Parity::kEven;
  std::vector<Vertex> vertices;

  [[nodiscard]] static bool adjacent(Vertex a, Vertex b);
  // Neighbor positions (into `vertices`) of vertices[i].
  [[nodiscard]] std::vector<std::size_t> neighbors(std::size_t i) const;
};

[[nodiscard]] int hamming_distance(Vertex u, Vertex v);
[[nodiscard]] Vertex antipode(Vertex u);
[[nodiscard]] VertexSet layer(Vertex v, int i);
[[nodiscard]] VertexSet interval(Vertex u, Vertex v);
[[nodiscard]] VertexSet open_neighborhood(Vertex u);
[[nodiscard]] VertexSet closed_neighborhood(Vertex u);

// All shortest u,v-paths, one per permutation of the differing coordinates,
// in lexicographic order of the flip sequence.  Empty when d(u,v) > max_len.
// Throws CapacityError when d(u,v) exceeds kMaxEnumeratedDistance and the cap
// admits it.
[[nodiscard]] std::vector<Path> enumerate_shortest_paths(Vertex u, Vertex v, int max_len);

// Number of shortest paths d! for a pair at distance d.
[[nodiscard]] std::uint64_t shortest_path_count(int distance);

// Subcube spanned by u and the flip directions of its neighbors in `x`.
[[nodiscard]] VertexSet raised_subcube(Vertex u, const VertexSet& x);

[[nodiscard]] HalvedCube halved_cube(int h, Parity parity);

// Automorphism x -> pi(x XOR translation) of Q_h; permutation[i] is the bit
// that bit i moves to.
class CubeAutomorphism {
 public:
  CubeAutomorphism(std::vector<int> permutation, std::uint32_t translation);
  static CubeAutomorphism identity(int dim);

  [[nodiscard]] int dim() const { return static_cast<int>(permutation_.size()); }
  [[nodiscard]] std::uint32_t apply_index(std::uint32_t x) const;
  [[nodiscard]] Vertex apply(Vertex v) const;
  [[nodiscard]] VertexSet apply(const VertexSet& s) const;

 private:
  std::vector<int> permutation_;
  std::uint32_t translation_;
};

// Set file format: one vertex per line, `#` comment lines and blank lines
// ignored.  dim_hint < 0 infers the dimension from the first vertex.
[[nodiscard]] VertexSet read_vertex_set(std::istream& in, int dim_hint = -1);
[[nodiscard]] VertexSet read_vertex_set_file(const std::string& path, int dim_hint = -1);
void write_vertex_set(std::ostream& out, const VertexSet& set);
void write_vertex_set_file(const std::string& path, const VertexSet& set);

void check_dim_range(int dim);

}  // namespace hypervis
