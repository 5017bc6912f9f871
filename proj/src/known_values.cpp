#include <sstream>

#include "hypervis/constructions.hpp"

namespace hypervis {

namespace detail {
extern const std::string_view kKnownValuesText;
}

std::string KnownEntry::value_text() const {
  if (exact()) return std::to_string(lower);
  return std::to_string(lower) + "-" + std::to_string(upper);
}

KnownValues KnownValues::parse(std::string_view text) {
  KnownValues table;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string first;
    fields >> first;
    if (first == "version") {
      fields >> table.version_;
      continue;
    }
    KnownEntry e;
    std::string variant;
    try {
      e.h = std::stoi(first);
    } catch (const std::exception&) {
      throw ParseError("known values line " + std::to_string(line_no) + ": bad dimension");
    }
    fields >> variant >> e.lower >> e.upper >> e.lower_source >> e.upper_source;
    const auto kind = parse_variant_kind(variant);
    if (!fields || !kind) {
      throw ParseError("known values line " + std::to_string(line_no) + ": malformed");
    }
    e.kind = *kind;
    if (e.lower > e.upper) {
      throw ParseError("known values line " + std::to_string(line_no) + ": lower > upper");
    }
    table.entries_.push_back(std::move(e));
  }
  if (table.version_ == 0) throw ParseError("known values table has no version line");
  return table;
}

const KnownValues& KnownValues::embedded() {
  static const KnownValues table = parse(detail::kKnownValuesText);
  return table;
}

std::optional<KnownEntry> KnownValues::lookup(int h, VariantKind kind) const {
  for (const auto& e : entries_) {
    if (e.h == h && e.kind == kind) return e;
  }
  return std::nullopt;
}

std::vector<KnownEntry> KnownValues::entries_for(VariantKind kind) const {
  std::vector<KnownEntry> out;
  for (const auto& e : entries_) {
    if (e.kind == kind) out.push_back(e);
  }
  return out;
}

Bound bounds(int h, VariantKind kind) {
  check_dim_range(h);
  if (auto e = KnownValues::embedded().lookup(h, kind)) {
    return Bound{e->lower, e->upper, e->lower_source, e->upper_source};
  }
  Bound b;
  if (kind == VariantKind::kTotal) {
    if (auto a = a_h_4(h)) return Bound{2 * *a, 2 * *a, "code-table", "code-table"};
    if (h <= 7) {
      const std::uint64_t v = h == 1 ? 2 : 2 * static_cast<std::uint64_t>(alpha_halved_bruteforce(h));
      return Bound{v, v, "halved-cube search", "halved-cube search"};
    }
  }
  switch (kind) {
    case VariantKind::kMutual:
      b.lower = mv_lower_bound(h);
      b.lower_source = "layer construction";
      break;
    case VariantKind::kOuter:
      b.lower = binomial(h, h / 2);
      b.lower_source = "layer construction";
      break;
    case VariantKind::kDual:
    case VariantKind::kTotal:
      if (auto a = a_h_4(h)) {
        b.lower = 2 * *a;
        b.lower_source = "code construction";
      } else {
        // A(n,4) is nondecreasing in n, so the last tabulated value still holds.
        b.lower = 2 * *a_h_4(16);
        b.lower_source = "code-table";
      }
      break;
  }
  if (h >= 8) {
    b.upper = doubling_upper_bound(h, kind);
    b.upper_source = "doubling";
  }
  return b;
}

}  // namespace hypervis
