#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "hypervis/constructions.hpp"
#include "hypervis/cube.hpp"
#include "oracles.hpp"

using namespace hypervis;

namespace {
Vertex V(std::string_view text) { return Vertex::parse(text); }
}  // namespace

TEST_CASE("vertex text form puts coordinate 1 leftmost") {
  const Vertex v = V("1000");
  CHECK(v.dim() == 4);
  CHECK(v.coordinate(1));
  CHECK_FALSE(v.coordinate(4));
  CHECK(v.bits() == 1U);
  CHECK(V("0001").bits() == 8U);
  CHECK(v.to_string() == "1000");
  CHECK(V("0110").weight() == 2);
  for (std::uint32_t b = 0; b < 32; ++b) CHECK(Vertex::parse(Vertex(b, 5).to_string()) == Vertex(b, 5));
}

TEST_CASE("vertex construction rejects bad input") {
  CHECK_THROWS_AS(V("01a0"), ParseError);
  CHECK_THROWS_AS(V(""), ParseError);
  CHECK_THROWS_AS(Vertex(16, 4), DomainError);
  CHECK_THROWS_AS(Vertex(0, 25), CapacityError);
  CHECK_THROWS_AS(Vertex(0, 0), CapacityError);
  CHECK_THROWS_AS((void)V("0000").coordinate(5), DomainError);
}

TEST_CASE("hamming distance") {
  CHECK(hamming_distance(V("0000"), V("0000")) == 0);
  CHECK(hamming_distance(V("0001"), V("1001")) == 1);
  CHECK(hamming_distance(V("0110"), V("1011")) == 3);
  CHECK_THROWS_AS((void)hamming_distance(V("000"), V("0000")), DimensionError);
}

TEST_CASE("layers") {
  CHECK(layer(V("000"), 0) == VertexSet::parse_list({"000"}));
  const VertexSet l2 = layer(V("0000"), 2);
  CHECK(l2.size() == 6);
  for (const Vertex& v : l2.vertices()) CHECK(v.weight() == 2);
  CHECK(layer(Vertex::zero(6), 6) == VertexSet::parse_list({"111111"}));
  CHECK_THROWS_AS((void)layer(V("000"), 4), DomainError);
  CHECK_THROWS_AS((void)layer(V("000"), -1), DomainError);

  // Layers around any root partition the cube with binomial sizes.
  for (int h = 1; h <= 7; ++h) {
    const Vertex root(static_cast<std::uint32_t>((1U << h) - 1) / 3, h);
    VertexSet seen(h);
    std::size_t total = 0;
    for (int i = 0; i <= h; ++i) {
      const VertexSet l = layer(root, i);
      CHECK(l.size() == binomial(h, i));
      CHECK((l & seen).empty());
      seen |= l;
      total += l.size();
    }
    CHECK(total == (std::size_t{1} << h));
    CHECK(seen == VertexSet::full(h));
  }
}

TEST_CASE("intervals are subcubes") {
  CHECK(interval(V("0110"), V("0110")) == VertexSet::parse_list({"0110"}));
  CHECK(interval(V("0000"), V("0011")) == VertexSet::parse_list({"0000", "0001", "0010", "0011"}));
  for (std::uint32_t u = 0; u < 32; ++u) {
    for (std::uint32_t v = 0; v < 32; ++v) {
      const Vertex a(u, 5), b(v, 5);
      const VertexSet iv = interval(a, b);
      CHECK(iv.size() == (std::size_t{1} << hamming_distance(a, b)));
      for (const Vertex& x : iv.vertices()) {
        for (int i = 1; i <= 5; ++i) {
          if (a.coordinate(i) == b.coordinate(i)) CHECK(x.coordinate(i) == a.coordinate(i));
        }
        // x lies on a shortest path.
        CHECK(hamming_distance(a, x) + hamming_distance(x, b) == hamming_distance(a, b));
      }
    }
  }
}

TEST_CASE("neighborhoods") {
  const Vertex u = V("0101");
  const VertexSet open = open_neighborhood(u);
  CHECK(open == VertexSet::parse_list({"1101", "0001", "0111", "0100"}));
  VertexSet closed = open;
  closed.insert(u);
  CHECK(closed_neighborhood(u) == closed);
}

TEST_CASE("shortest path enumeration") {
  CHECK(enumerate_shortest_paths(V("0000"), V("0011"), 1).empty());
  const auto one = enumerate_shortest_paths(V("0000"), V("1000"), 4);
  REQUIRE(one.size() == 1);
  CHECK(one[0].interior().empty());
  CHECK(enumerate_shortest_paths(V("0000"), V("1110"), 3).size() == 6);
  CHECK(enumerate_shortest_paths(V("0000"), V("0000"), 3).size() == 1);

  // Lex order of flip permutations: bits (0,1) before (1,0).
  const auto two = enumerate_shortest_paths(V("000"), V("110"), 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].vertices[1] == V("100"));
  CHECK(two[1].vertices[1] == V("010"));

  for (std::uint32_t v = 0; v < 64; ++v) {
    const Vertex a = Vertex::zero(6), b(v, 6);
    const int d = hamming_distance(a, b);
    const auto paths = enumerate_shortest_paths(a, b, 6);
    CHECK(paths.size() == shortest_path_count(d));
    std::set<std::vector<std::uint32_t>> distinct;
    for (const Path& p : paths) {
      CHECK(p.length() == d);
      CHECK(p.vertices.front() == a);
      CHECK(p.vertices.back() == b);
      std::vector<std::uint32_t> bits;
      for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        bits.push_back(p.vertices[i].bits());
        if (i > 0) CHECK(hamming_distance(p.vertices[i - 1], p.vertices[i]) == 1);
      }
      const VertexSet iv = interval(a, b);
      for (const Vertex& z : p.interior()) CHECK(iv.contains(z));
      distinct.insert(bits);
    }
    CHECK(distinct.size() == paths.size());
    // Same path family as walking one differing bit at a time.
    std::set<std::vector<std::uint32_t>> expected;
    for (auto& p : oracle::shortest_paths(0, v)) expected.insert(p);
    CHECK(distinct == expected);
  }
}

TEST_CASE("path enumeration refuses long distances") {
  const Vertex a = Vertex::zero(10);
  const Vertex b(0x1FF, 10);
  CHECK_THROWS_AS((void)enumerate_shortest_paths(a, b, 10), CapacityError);
  CHECK(enumerate_shortest_paths(a, b, 5).empty());
  CHECK(enumerate_shortest_paths(a, Vertex(0xFF, 10), 8).size() == 40320);
}

TEST_CASE("raised subcube") {
  CHECK(raised_subcube(V("0000"), VertexSet::parse_list({"1000", "0100"})) ==
        VertexSet::parse_list({"0000", "1000", "0100", "1100"}));
  CHECK(raised_subcube(V("000"), VertexSet::parse_list({"001"})) == VertexSet::parse_list({"000", "001"}));
  CHECK(raised_subcube(Vertex::zero(5), open_neighborhood(Vertex::zero(5))) == VertexSet::full(5));
  CHECK_THROWS_AS((void)raised_subcube(V("0000"), VertexSet::parse_list({"1100"})), DomainError);
  CHECK_THROWS_AS((void)raised_subcube(V("0000"), VertexSet(4)), DomainError);
}

TEST_CASE("halved cubes") {
  const HalvedCube q3 = halved_cube(3, Parity::kEven);
  CHECK(VertexSet::from_vertices(3, q3.vertices) == VertexSet::parse_list({"000", "011", "101", "110"}));
  for (std::size_t i = 0; i < 4; ++i) CHECK(q3.neighbors(i).size() == 3);
  const HalvedCube q2 = halved_cube(2, Parity::kEven);
  CHECK(q2.vertices.size() == 2);
  CHECK(HalvedCube::adjacent(q2.vertices[0], q2.vertices[1]));
  CHECK_THROWS_AS((void)halved_cube(1, Parity::kEven), DomainError);

  for (int h = 2; h <= 8; ++h) {
    const HalvedCube even = halved_cube(h, Parity::kEven);
    const HalvedCube odd = halved_cube(h, Parity::kOdd);
    CHECK(even.vertices.size() == (std::size_t{1} << (h - 1)));
    for (std::size_t i = 0; i < even.vertices.size(); ++i) CHECK(even.neighbors(i).size() == binomial(h, 2));
    // Flipping bit 0 maps even onto odd and keeps adjacency.
    const VertexSet odd_set = VertexSet::from_vertices(h, odd.vertices);
    for (const Vertex& a : even.vertices) {
      CHECK(odd_set.contains(a.with_bit_flipped(0)));
      for (const Vertex& b : even.vertices) {
        CHECK(HalvedCube::adjacent(a, b) == HalvedCube::adjacent(a.with_bit_flipped(0), b.with_bit_flipped(0)));
      }
    }
  }
}

TEST_CASE("antipodes") {
  CHECK(antipode(V("0000")) == V("1111"));
  CHECK(antipode(V("0101")) == V("1010"));
  for (std::uint32_t b = 0; b < 128; ++b) {
    const Vertex v(b, 7);
    CHECK(antipode(antipode(v)) == v);
    CHECK(hamming_distance(v, antipode(v)) == 7);
  }
}

TEST_CASE("automorphisms preserve distance") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> perm{0, 1, 2, 3, 4};
    std::shuffle(perm.begin(), perm.end(), rng);
    const CubeAutomorphism a(perm, static_cast<std::uint32_t>(rng() % 32));
    for (std::uint32_t u = 0; u < 32; ++u) {
      for (std::uint32_t v = 0; v < 32; ++v) {
        CHECK(hamming_distance(a.apply(Vertex(u, 5)), a.apply(Vertex(v, 5))) ==
              hamming_distance(Vertex(u, 5), Vertex(v, 5)));
      }
    }
  }
  CHECK_THROWS_AS(CubeAutomorphism({0, 0, 1}, 0), DomainError);
}

TEST_CASE("vertex set operations") {
  VertexSet a = VertexSet::parse_list({"000", "011"});
  const VertexSet b = VertexSet::parse_list({"011", "111"});
  CHECK((a | b).size() == 3);
  CHECK((a & b) == VertexSet::parse_list({"011"}));
  CHECK((a - b) == VertexSet::parse_list({"000"}));
  CHECK(a.complement().size() == 6);
  CHECK((a & b).is_subset_of(a));
  a.erase(V("000"));
  CHECK(a.size() == 1);
  CHECK_THROWS_AS(a.insert(V("0000")), DimensionError);
  CHECK_THROWS_AS((void)(a | VertexSet(4)), DimensionError);
  CHECK(VertexSet::full(10).size() == 1024);
  CHECK(VertexSet::full(10).complement().empty());
}

TEST_CASE("set files round trip") {
  const VertexSet m = layer_pair_set(6, 1, 3);
  std::stringstream buf;
  write_vertex_set(buf, m);
  CHECK(read_vertex_set(buf) == m);

  std::stringstream commented("# a comment\n\n0101\n1111\n");
  CHECK(read_vertex_set(commented) == VertexSet::parse_list({"0101", "1111"}));

  std::stringstream empty_with_header("# h=5 size=0\n");
  const VertexSet e = read_vertex_set(empty_with_header);
  CHECK(e.dim() == 5);
  CHECK(e.empty());

  std::stringstream mixed("0101\n111\n");
  CHECK_THROWS_AS((void)read_vertex_set(mixed), DimensionError);
  std::stringstream bad("01x1\n");
  CHECK_THROWS_AS((void)read_vertex_set(bad), ParseError);
  std::stringstream nothing("");
  CHECK_THROWS_AS((void)read_vertex_set(nothing), ParseError);
}
