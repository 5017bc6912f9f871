#include "hypervis/cube.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace hypervis {

void check_dim_range(int dim) {
  if (dim < 1 || dim > kMaxDim) {
    throw CapacityError("dimension " + std::to_string(dim) + " outside [1, " +
                        std::to_string(kMaxDim) + "]");
  }
}

namespace {

void require_same_dim(Vertex u, Vertex v) {
  if (u.dim() != v.dim()) {
    throw DimensionError("vertices of Q_" + std::to_string(u.dim()) + " and Q_" +
                         std::to_string(v.dim()));
  }
}

std::uint32_t low_mask(int dim) { return dim >= 32 ? ~0U : (1U << dim) - 1U; }

}  // namespace

// ---------------------------------------------------------------- Vertex

Vertex::Vertex(std::uint32_t bits, int dim) : bits_(bits), dim_(dim) {
  check_dim_range(dim);
  if ((bits & ~low_mask(dim)) != 0) {
    throw DomainError("vertex bits exceed dimension " + std::to_string(dim));
  }
}

Vertex Vertex::parse(std::string_view text) {
  const int dim = static_cast<int>(text.size());
  if (dim < 1 || dim > kMaxDim) {
    throw ParseError("vertex '" + std::string(text) + "' has unsupported length");
  }
  std::uint32_t bits = 0;
  for (int i = 0; i < dim; ++i) {
    const char c = text[static_cast<std::size_t>(i)];
    if (c == '1') {
      bits |= 1U << i;
    } else if (c != '0') {
      throw ParseError("vertex '" + std::string(text) + "' contains '" + std::string(1, c) + "'");
    }
  }
  return Vertex(bits, dim);
}

int Vertex::weight() const { return std::popcount(bits_); }

bool Vertex::coordinate(int i) const {
  if (i < 1 || i > dim_) throw DomainError("coordinate index out of range");
  return (bits_ >> (i - 1)) & 1U;
}

Vertex Vertex::with_bit_flipped(int bit) const {
  if (bit < 0 || bit >= dim_) throw DomainError("bit index out of range");
  return Vertex(bits_ ^ (1U << bit), dim_);
}

std::string Vertex::to_string() const {
  std::string s(static_cast<std::size_t>(dim_), '0');
  for (int i = 0; i < dim_; ++i) {
    if ((bits_ >> i) & 1U) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, Vertex v) { return os << v.to_string(); }

// ------------------------------------------------------------- VertexSet

VertexSet::VertexSet(int dim) : dim_(dim) {
  check_dim_range(dim);
  words_.assign(((std::size_t{1} << dim) + 63) / 64, 0);
}

VertexSet VertexSet::from_indices(int dim, std::span<const std::uint32_t> indices) {
  VertexSet s(dim);
  for (auto i : indices) {
    if (i >= s.universe_size()) throw DomainError("vertex index outside Q_" + std::to_string(dim));
    s.insert_index(i);
  }
  return s;
}

VertexSet VertexSet::from_vertices(int dim, std::span<const Vertex> vertices) {
  VertexSet s(dim);
  for (auto v : vertices) s.insert(v);
  return s;
}

VertexSet VertexSet::parse_list(std::span<const std::string_view> texts) {
  if (texts.empty()) throw ParseError("cannot infer dimension of an empty vertex list");
  const Vertex first = Vertex::parse(texts.front());
  VertexSet s(first.dim());
  for (auto t : texts) s.insert(Vertex::parse(t));
  return s;
}

VertexSet VertexSet::parse_list(std::initializer_list<std::string_view> texts) {
  return parse_list(std::span<const std::string_view>(texts.begin(), texts.size()));
}

VertexSet VertexSet::full(int dim) {
  VertexSet s(dim);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  s.trim();
  return s;
}

void VertexSet::check_dim(Vertex v) const {
  if (v.dim() != dim_) {
    throw DimensionError("vertex of Q_" + std::to_string(v.dim()) + " used with a set over Q_" +
                         std::to_string(dim_));
  }
}

void VertexSet::trim() {
  if (dim_ < 6 && !words_.empty()) words_[0] &= (std::uint64_t{1} << (1U << dim_)) - 1;
}

bool VertexSet::contains(Vertex v) const {
  check_dim(v);
  return contains_index(v.bits());
}

void VertexSet::insert(Vertex v) {
  check_dim(v);
  insert_index(v.bits());
}

void VertexSet::erase(Vertex v) {
  check_dim(v);
  erase_index(v.bits());
}

std::size_t VertexSet::size() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::uint32_t> VertexSet::indices() const {
  std::vector<std::uint32_t> out;
  out.reserve(size());
  for_each_index([&](std::uint32_t i) { out.push_back(i); });
  return out;
}

std::vector<Vertex> VertexSet::vertices() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each_index([&](std::uint32_t i) { out.emplace_back(i, dim_); });
  return out;
}

VertexSet VertexSet::complement() const {
  VertexSet c = *this;
  for (auto& w : c.words_) w = ~w;
  c.trim();
  return c;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  if (dim_ != other.dim_) throw DimensionError("set dimension mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  if (dim_ != other.dim_) throw DimensionError("set dimension mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  if (dim_ != other.dim_) throw DimensionError("set dimension mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  if (dim_ != other.dim_) throw DimensionError("set dimension mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::span<const Vertex> Path::interior() const {
  if (vertices.size() < 2) return {};
  return std::span<const Vertex>(vertices).subspan(1, vertices.size() - 2);
}

// ------------------------------------------------------------ geometry

int hamming_distance(Vertex u, Vertex v) {
  require_same_dim(u, v);
  return std::popcount(u.bits() ^ v.bits());
}

Vertex antipode(Vertex u) { return Vertex(~u.bits() & low_mask(u.dim()), u.dim()); }

VertexSet layer(Vertex v, int i) {
  if (i < 0 || i > v.dim()) {
    throw DomainError("layer index " + std::to_string(i) + " outside [0, " +
                      std::to_string(v.dim()) + "]");
  }
  VertexSet s(v.dim());
  for (std::uint32_t x = 0; x < s.universe_size(); ++x) {
    if (std::popcount(x ^ v.bits()) == i) s.insert_index(x);
  }
  return s;
}

VertexSet interval(Vertex u, Vertex v) {
  require_same_dim(u, v);
  VertexSet s(u.dim());
  const std::uint32_t diff = u.bits() ^ v.bits();
  // Walk every submask of the differing coordinates.
  std::uint32_t sub = 0;
  do {
    s.insert_index(u.bits() ^ sub);
    sub = (sub - diff) & diff;
  } while (sub != 0);
  return s;
}

VertexSet open_neighborhood(Vertex u) {
  VertexSet s(u.dim());
  for (int b = 0; b < u.dim(); ++b) s.insert_index(u.bits() ^ (1U << b));
  return s;
}

VertexSet closed_neighborhood(Vertex u) {
  VertexSet s = open_neighborhood(u);
  s.insert(u);
  return s;
}

std::uint64_t shortest_path_count(int distance) {
  std::uint64_t n = 1;
  for (int i = 2; i <= distance; ++i) n *= static_cast<std::uint64_t>(i);
  return n;
}

std::vector<Path> enumerate_shortest_paths(Vertex u, Vertex v, int max_len) {
  const int d = hamming_distance(u, v);
  if (d > max_len) return {};
  if (d > kMaxEnumeratedDistance) {
    throw CapacityError("refusing to enumerate " + std::to_string(d) +
                        "! shortest paths; lower the path cap");
  }
  std::vector<int> flips;
  const std::uint32_t diff = u.bits() ^ v.bits();
  for (int b = 0; b < u.dim(); ++b) {
    if ((diff >> b) & 1U) flips.push_back(b);
  }
  std::vector<Path> paths;
  paths.reserve(shortest_path_count(d));
  do {
    Path p;
    p.vertices.reserve(static_cast<std::size_t>(d) + 1);
    std::uint32_t x = u.bits();
    p.vertices.emplace_back(x, u.dim());
    for (int b : flips) {
      x ^= 1U << b;
      p.vertices.emplace_back(x, u.dim());
    }
    paths.push_back(std::move(p));
  } while (std::next_permutation(flips.begin(), flips.end()));
  return paths;
}

VertexSet raised_subcube(Vertex u, const VertexSet& x) {
  if (x.dim() != u.dim()) throw DimensionError("raised_subcube: dimension mismatch");
  if (x.empty()) throw DomainError("raised_subcube needs at least one neighbor");
  std::uint32_t directions = 0;
  x.for_each_index([&](std::uint32_t w) {
    const std::uint32_t diff = w ^ u.bits();
    if (std::popcount(diff) != 1) {
      throw DomainError("raised_subcube: " + Vertex(w, u.dim()).to_string() +
                        " is not a neighbor of " + u.to_string());
    }
    directions |= diff;
  });
  return interval(u, Vertex(u.bits() ^ directions, u.dim()));
}

bool HalvedCube::adjacent(Vertex a, Vertex b) { return hamming_distance(a, b) == 2; }

std::vector<std::size_t> HalvedCube::neighbors(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    if (adjacent(vertices[i], vertices[j])) out.push_back(j);
  }
  return out;
}

HalvedCube halved_cube(int h, Parity parity) {
  if (h < 2) throw DomainError("halved cube needs h >= 2");
  check_dim_range(h);
  HalvedCube g;
  g.dim = h;
  g.parity = parity;
  const int want = parity == Parity::kEven ? 0 : 1;
  for (std::uint32_t x = 0; x < (1U << h); ++x) {
    if (std::popcount(x) % 2 == want) g.vertices.emplace_back(x, h);
  }
  return g;
}

// ---------------------------------------------------------- automorphism

CubeAutomorphism::CubeAutomorphism(std::vector<int> permutation, std::uint32_t translation)
    : permutation_(std::move(permutation)), translation_(translation) {
  const int dim = static_cast<int>(permutation_.size());
  check_dim_range(dim);
  std::vector<int> sorted = permutation_;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < dim; ++i) {
    if (sorted[static_cast<std::size_t>(i)] != i) throw DomainError("not a coordinate permutation");
  }
  if ((translation_ & ~low_mask(dim)) != 0) throw DomainError("translation exceeds dimension");
}

CubeAutomorphism CubeAutomorphism::identity(int dim) {
  std::vector<int> p(static_cast<std::size_t>(dim));
  std::iota(p.begin(), p.end(), 0);
  return CubeAutomorphism(std::move(p), 0);
}

std::uint32_t CubeAutomorphism::apply_index(std::uint32_t x) const {
  x ^= translation_;
  std::uint32_t y = 0;
  for (std::size_t b = 0; b < permutation_.size(); ++b) {
    if ((x >> b) & 1U) y |= 1U << permutation_[b];
  }
  return y;
}

Vertex CubeAutomorphism::apply(Vertex v) const {
  if (v.dim() != dim()) throw DimensionError("automorphism dimension mismatch");
  return Vertex(apply_index(v.bits()), v.dim());
}

VertexSet CubeAutomorphism::apply(const VertexSet& s) const {
  if (s.dim() != dim()) throw DimensionError("automorphism dimension mismatch");
  VertexSet out(s.dim());
  s.for_each_index([&](std::uint32_t x) { out.insert_index(apply_index(x)); });
  return out;
}

// ------------------------------------------------------------- set files

VertexSet read_vertex_set(std::istream& in, int dim_hint) {
  std::vector<Vertex> vertices;
  std::string line;
  int line_no = 0;
  int dim = dim_hint;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      // "# h=<dim>" records the dimension so empty sets survive a round trip.
      const auto key = line.find("h=", first);
      if (dim < 0 && key == first + 2) dim = std::stoi(line.substr(key + 2));
      continue;
    }
    const auto last = line.find_last_not_of(" \t");
    const std::string_view token(line.data() + first, last - first + 1);
    Vertex v;
    try {
      v = Vertex::parse(token);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (dim < 0) dim = v.dim();
    if (v.dim() != dim) {
      throw DimensionError("line " + std::to_string(line_no) + ": expected " +
                           std::to_string(dim) + " coordinates, got " +
                           std::to_string(v.dim()));
    }
    vertices.push_back(v);
  }
  if (dim < 0) throw ParseError("set file has no vertices and no dimension was given");
  return VertexSet::from_vertices(dim, vertices);
}

VertexSet read_vertex_set_file(const std::string& path, int dim_hint) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_vertex_set(in, dim_hint);
}

void write_vertex_set(std::ostream& out, const VertexSet& set) {
  out << "# h=" << set.dim() << " size=" << set.size() << '\n';
  set.for_each_index([&](std::uint32_t x) { out << Vertex(x, set.dim()).to_string() << '\n'; });
}

void write_vertex_set_file(const std::string& path, const VertexSet& set) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  write_vertex_set(out, set);
}

}  // namespace hypervis
