#pragma once

// Conversions between library types and the oracle's plain representations.

#include "hypervis/cube.hpp"
#include "hypervis/visibility.hpp"
#include "oracles.hpp"

namespace test_support {

inline hypervis::VertexSet from_mask(int h, std::uint64_t mask) {
  hypervis::VertexSet s(h);
  for (std::uint32_t v = 0; v < (1U << h); ++v) {
    if ((mask >> v) & 1U) s.insert_index(v);
  }
  return s;
}

inline oracle::Members members(const hypervis::VertexSet& s) {
  oracle::Members m(s.universe_size(), false);
  for (std::uint32_t v : s.indices()) m[v] = true;
  return m;
}

inline oracle::Kind to_oracle(hypervis::VariantKind k) {
  switch (k) {
    case hypervis::VariantKind::kMutual: return oracle::Kind::kMutual;
    case hypervis::VariantKind::kTotal: return oracle::Kind::kTotal;
    case hypervis::VariantKind::kOuter: return oracle::Kind::kOuter;
    case hypervis::VariantKind::kDual: return oracle::Kind::kDual;
  }
  return oracle::Kind::kMutual;
}

}  // namespace test_support
