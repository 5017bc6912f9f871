#include "hypervis/encode.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

namespace hypervis {

std::string_view to_string(Pattern p) {
  switch (p) {
    case Pattern::kAdjacentPair: return "adjacent-pair";
    case Pattern::kK12Star: return "k12-star";
  }
  return "?";
}

std::optional<Pattern> parse_pattern(std::string_view name) {
  if (name == "adjacent-pair") return Pattern::kAdjacentPair;
  if (name == "k12-star") return Pattern::kK12Star;
  return std::nullopt;
}

void EncodeConfig::validate() const {
  if (h < 2 || h > kMaxDim) throw DomainError("encoding needs 2 <= h <= " + std::to_string(kMaxDim));
  const int s = effective_path_cap();
  if (s < 2 || s > h) {
    throw DomainError("path cap " + std::to_string(s) + " outside [2, " + std::to_string(h) + "]");
  }
  const std::uint64_t n = std::uint64_t{1} << h;
  if (target && *target > n) {
    throw DomainError("target " + std::to_string(*target) + " exceeds the " + std::to_string(n) +
                      " vertices of Q_" + std::to_string(h));
  }
  if (neighborhood_cap && *neighborhood_cap < 1) throw DomainError("neighborhood cap must be >= 1");
  VertexSet preset_set(h);
  for (const Vertex& v : presets) {
    if (v.dim() != h) throw DimensionError("preset " + v.to_string() + " is not a vertex of Q_" + std::to_string(h));
    preset_set.insert(v);
  }
  for (const Vertex& v : presets) {
    const std::size_t member_neighbors = (open_neighborhood(v) & preset_set).size();
    for (Pattern p : forbidden) {
      if (p == Pattern::kAdjacentPair && member_neighbors >= 1) {
        throw DomainError("presets contain an adjacent pair at " + v.to_string());
      }
      if (p == Pattern::kK12Star && member_neighbors >= 2) {
        throw DomainError("presets contain a K_{1,2} centred at " + v.to_string());
      }
    }
    if (neighborhood_cap && member_neighbors + 1 > static_cast<std::size_t>(*neighborhood_cap)) {
      throw DomainError("presets exceed the neighborhood cap at " + v.to_string());
    }
  }
}

// ------------------------------------------------------------ CnfFormula

std::span<const int> CnfFormula::clause(std::size_t i) const {
  const std::size_t begin = starts_[i];
  const std::size_t end = i + 1 < starts_.size() ? starts_[i + 1] : literals_.size();
  return std::span<const int>(literals_).subspan(begin, end - begin);
}

int CnfFormula::new_vars(int count) {
  const int first = num_vars_ + 1;
  num_vars_ += count;
  return first;
}

void CnfFormula::add_clause(std::span<const int> literals) {
  for (int lit : literals) {
    if (lit == 0 || std::abs(lit) > num_vars_) {
      throw DomainError("clause literal " + std::to_string(lit) + " outside declared variables");
    }
  }
  starts_.push_back(literals_.size());
  literals_.insert(literals_.end(), literals.begin(), literals.end());
}

std::optional<std::size_t> CnfFormula::first_falsified(const Assignment& assignment) const {
  if (assignment.size() < static_cast<std::size_t>(num_vars_) + 1) return 0;
  for (std::size_t i = 0; i < num_clauses(); ++i) {
    const auto c = clause(i);
    const bool sat = std::any_of(c.begin(), c.end(), [&](int lit) {
      return assignment[static_cast<std::size_t>(std::abs(lit))] == (lit > 0);
    });
    if (!sat) return i;
  }
  return std::nullopt;
}

bool CnfFormula::satisfied_by(const Assignment& assignment) const {
  return !first_falsified(assignment).has_value();
}

// --------------------------------------------------------------- counter

CounterEncoding sequential_counter_at_most_k(std::span<const int> literals, int k, int first_aux,
                                             std::optional<int> guard) {
  if (k < 0) throw DomainError("at-most-k needs k >= 0");
  CounterEncoding enc;
  const int n = static_cast<int>(literals.size());
  if (k >= n) return enc;

  auto overflow = [&](std::vector<int> clause) {
    if (guard) clause.push_back(*guard);
    enc.clauses.push_back(std::move(clause));
  };
  if (k == 0) {
    for (int lit : literals) overflow({-lit});
    return enc;
  }

  enc.aux_count = (n - 1) * k;
  // s(i, j), 1-based: "at least j of the first i literals are true".
  auto s = [&](int i, int j) { return first_aux + (i - 1) * k + (j - 1); };
  auto x = [&](int i) { return literals[static_cast<std::size_t>(i - 1)]; };

  enc.clauses.push_back({-x(1), s(1, 1)});
  for (int j = 2; j <= k; ++j) enc.clauses.push_back({-s(1, j)});
  for (int i = 2; i < n; ++i) {
    enc.clauses.push_back({-x(i), s(i, 1)});
    enc.clauses.push_back({-s(i - 1, 1), s(i, 1)});
    for (int j = 2; j <= k; ++j) {
      enc.clauses.push_back({-x(i), -s(i - 1, j - 1), s(i, j)});
      enc.clauses.push_back({-s(i - 1, j), s(i, j)});
    }
    overflow({-x(i), -s(i - 1, k)});
  }
  overflow({-x(n), -s(n - 1, k)});
  return enc;
}

// --------------------------------------------------------------- emit_cnf

namespace {

// Calls f(u, v, d) for every unordered pair u < v with 2 <= d(u,v) <= cap.
template <class F>
void for_each_capped_pair(int h, int cap, F&& f) {
  const std::uint32_t n = std::uint32_t{1} << h;
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      const int d = std::popcount(u ^ v);
      if (d >= 2 && d <= cap) f(u, v, d);
    }
  }
}

// Calls f(center, a, b) for every induced K_{1,2} a - center - b, a < b.
template <class F>
void for_each_star(int h, F&& f) {
  const std::uint32_t n = std::uint32_t{1} << h;
  for (std::uint32_t c = 0; c < n; ++c) {
    for (int i = 0; i < h; ++i) {
      for (int j = i + 1; j < h; ++j) f(c, c ^ (1U << i), c ^ (1U << j));
    }
  }
}

template <class F>
void for_each_edge(int h, F&& f) {
  const std::uint32_t n = std::uint32_t{1} << h;
  for (std::uint32_t u = 0; u < n; ++u) {
    for (int i = 0; i < h; ++i) {
      const std::uint32_t v = u ^ (1U << i);
      if (u < v) f(u, v);
    }
  }
}

std::string vtext(std::uint32_t x, int h) { return Vertex(x, h).to_string(); }

}  // namespace

CnfFormula emit_cnf(const EncodeConfig& config) {
  config.validate();
  const int h = config.h;
  const int s = config.effective_path_cap();
  const std::uint32_t n = std::uint32_t{1} << h;

  CnfFormula f(static_cast<int>(n));
  f.dim = h;
  f.variant = config.variant;
  f.path_cap = s;
  f.first_path_var = f.num_vars() + 1;
  auto x = [&](std::uint32_t v) { return f.vertex_var(v); };

  if (config.variant == VariantKind::kTotal) {
    // No two members at distance 2.
    for_each_capped_pair(h, 2, [&](std::uint32_t u, std::uint32_t v, int) { f.add_clause({x(u), x(v)}); });
  } else {
    std::vector<int> ys;
    std::vector<int> clause;
    for_each_capped_pair(h, s, [&](std::uint32_t u, std::uint32_t v, int) {
      const auto paths = enumerate_shortest_paths(Vertex(u, h), Vertex(v, h), s);
      ys.clear();
      for (std::uint32_t p = 0; p < paths.size(); ++p) {
        const int y = f.new_var();
        f.path_vars.push_back({u, v, p});
        ys.push_back(y);
        clause.assign(1, y);
        for (const Vertex& z : paths[p].interior()) {
          f.add_clause({-y, x(z.bits())});
          clause.push_back(-x(z.bits()));
        }
        if (config.reverse_implications) f.add_clause(clause);
      }
      auto emit = [&](std::initializer_list<int> head) {
        clause.assign(head);
        clause.insert(clause.end(), ys.begin(), ys.end());
        f.add_clause(clause);
      };
      switch (config.variant) {
        case VariantKind::kMutual:
          emit({x(u), x(v)});
          break;
        case VariantKind::kOuter:
          emit({x(u)});
          emit({x(v)});
          break;
        case VariantKind::kDual:
          emit({x(u), x(v)});
          emit({-x(u), -x(v)});
          break;
        case VariantKind::kTotal:
          break;
      }
    });
  }

  for (const Vertex& p : config.presets) f.add_clause({-x(p.bits())});

  for (Pattern p : config.forbidden) {
    if (p == Pattern::kAdjacentPair) {
      for_each_edge(h, [&](std::uint32_t u, std::uint32_t v) { f.add_clause({x(u), x(v)}); });
    } else {
      for_each_star(h, [&](std::uint32_t c, std::uint32_t a, std::uint32_t b) {
        f.add_clause({x(c), x(a), x(b)});
      });
    }
  }

  if (config.antipode_closure) {
    const std::uint32_t last = 1U << (h - 1);
    for (std::uint32_t u = 0; u < n; ++u) {
      if (u & last) continue;
      const std::uint32_t a = ~u & (n - 1);
      f.add_clause({-x(u), x(a)});
      f.add_clause({x(u), -x(a)});
    }
  }

  if (config.neighborhood_cap) {
    std::vector<int> members(static_cast<std::size_t>(h));
    for (std::uint32_t u = 0; u < n; ++u) {
      for (int i = 0; i < h; ++i) members[static_cast<std::size_t>(i)] = -x(u ^ (1U << i));
      const auto enc = sequential_counter_at_most_k(members, *config.neighborhood_cap - 1,
                                                    f.num_vars() + 1, x(u));
      f.new_vars(enc.aux_count);
      for (const auto& c : enc.clauses) f.add_clause(c);
    }
  }

  for (std::size_t i = 0; i < f.num_clauses(); ++i) {
    if (f.clause(i).empty()) throw Error("internal: empty clause emitted");
  }
  return with_target(f, config.target.value_or(0));
}

CnfFormula with_target(const CnfFormula& base, std::uint64_t ell) {
  if (base.dim == 0) throw DomainError("formula carries no vertex map");
  if (base.counter_var_count != 0 || base.target != 0) {
    throw DomainError("formula already has a cardinality constraint");
  }
  const std::uint32_t n = std::uint32_t{1} << base.dim;
  if (ell > n) throw DomainError("target exceeds the number of vertices");
  CnfFormula f = base;
  f.target = ell;
  // At most 2^h - ell vertex variables true, i.e. at least ell vertices in M.
  std::vector<int> all_x(n);
  for (std::uint32_t v = 0; v < n; ++v) all_x[v] = f.vertex_var(v);
  const auto counter = sequential_counter_at_most_k(all_x, static_cast<int>(n - ell), f.num_vars() + 1);
  f.first_counter_var = f.num_vars() + 1;
  f.counter_var_count = counter.aux_count;
  f.new_vars(counter.aux_count);
  for (const auto& c : counter.clauses) f.add_clause(c);
  return f;
}

VertexSet decode_model(const CnfFormula& formula, const Assignment& assignment) {
  if (formula.dim == 0) throw DomainError("formula carries no vertex map");
  if (auto bad = formula.first_falsified(assignment)) {
    throw DomainError("assignment falsifies clause " + std::to_string(*bad + 1));
  }
  VertexSet m(formula.dim);
  for (std::uint32_t v = 0; v < m.universe_size(); ++v) {
    if (!assignment[static_cast<std::size_t>(formula.vertex_var(v))]) m.insert_index(v);
  }
  if (m.size() < formula.target) {
    throw DomainError("decoded set has " + std::to_string(m.size()) + " vertices, target is " +
                      std::to_string(formula.target));
  }
  return m;
}

// ----------------------------------------------------------------- DIMACS

void write_dimacs(std::ostream& out, const CnfFormula& f) {
  if (f.dim > 0) {
    out << "c hypervis h=" << f.dim << " variant=" << to_string(f.variant) << " ell=" << f.target
        << " path_cap=" << f.path_cap << '\n';
    for (std::uint32_t v = 0; v < (1U << f.dim); ++v) {
      out << "c x " << f.vertex_var(v) << ' ' << vtext(v, f.dim) << '\n';
    }
    for (std::size_t i = 0; i < f.path_vars.size(); ++i) {
      const auto& p = f.path_vars[i];
      out << "c y " << f.first_path_var + static_cast<int>(i) << ' ' << vtext(p.u, f.dim) << ' '
          << vtext(p.v, f.dim) << ' ' << p.path_index << '\n';
    }
    if (f.counter_var_count > 0) {
      out << "c s " << f.first_counter_var << ' ' << f.counter_var_count << '\n';
    }
  }
  out << "p cnf " << f.num_vars() << ' ' << f.num_clauses() << '\n';
  std::string line;
  for (std::size_t i = 0; i < f.num_clauses(); ++i) {
    line.clear();
    for (int lit : f.clause(i)) {
      line += std::to_string(lit);
      line += ' ';
    }
    line += "0\n";
    out << line;
  }
}

CnfFormula read_dimacs(std::istream& in) {
  CnfFormula f;
  bool header = false;
  std::size_t declared_clauses = 0;
  std::vector<int> clause;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;
    if (first == "c") {
      std::string tag;
      tokens >> tag;
      if (tag == "hypervis") {
        std::string kv;
        while (tokens >> kv) {
          const auto eq = kv.find('=');
          if (eq == std::string::npos) continue;
          const std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
          if (key == "h") f.dim = std::stoi(value);
          else if (key == "variant") f.variant = parse_variant_kind(value).value_or(VariantKind::kMutual);
          else if (key == "ell") f.target = std::stoull(value);
          else if (key == "path_cap") f.path_cap = std::stoi(value);
        }
      } else if (tag == "y") {
        int var = 0;
        std::string u, v;
        std::uint32_t p = 0;
        tokens >> var >> u >> v >> p;
        if (f.path_vars.empty()) f.first_path_var = var;
        f.path_vars.push_back({Vertex::parse(u).bits(), Vertex::parse(v).bits(), p});
      } else if (tag == "s") {
        tokens >> f.first_counter_var >> f.counter_var_count;
      }
      continue;
    }
    if (first == "p") {
      std::string fmt;
      int vars = 0;
      tokens >> fmt >> vars >> declared_clauses;
      if (fmt != "cnf" || !tokens || vars < 0) {
        throw ParseError("line " + std::to_string(line_no) + ": bad problem line");
      }
      f.new_vars(vars);
      header = true;
      continue;
    }
    if (!header) throw ParseError("line " + std::to_string(line_no) + ": clause before problem line");
    std::istringstream lits(line);
    long long lit = 0;
    while (lits >> lit) {
      if (lit == 0) {
        f.add_clause(clause);
        clause.clear();
      } else {
        if (std::llabs(lit) > f.num_vars()) {
          throw ParseError("line " + std::to_string(line_no) + ": literal " + std::to_string(lit) +
                           " exceeds declared variable count");
        }
        clause.push_back(static_cast<int>(lit));
      }
    }
    if (!lits.eof()) throw ParseError("line " + std::to_string(line_no) + ": bad token");
  }
  if (!header) throw ParseError("missing problem line");
  if (!clause.empty()) f.add_clause(clause);
  if (f.num_clauses() != declared_clauses) {
    throw ParseError("problem line declares " + std::to_string(declared_clauses) + " clauses, found " +
                     std::to_string(f.num_clauses()));
  }
  return f;
}

// -------------------------------------------------------------------- ILP

bool LinearRow::satisfied(std::span<const std::uint8_t> values) const {
  std::int64_t lhs = 0;
  for (const auto& t : terms) lhs += t.coef * values[t.var];
  return sense == RowSense::kEqual ? lhs == rhs : lhs <= rhs;
}

bool IlpModel::feasible(std::span<const std::uint8_t> values) const {
  return std::all_of(rows.begin(), rows.end(), [&](const LinearRow& r) { return r.satisfied(values); });
}

std::int64_t IlpModel::objective(std::span<const std::uint8_t> values) const {
  std::int64_t sum = 0;
  for (std::uint32_t v = 0; v < num_vertex_vars(); ++v) sum += values[v];
  return sum;
}

IlpModel emit_ilp(const EncodeConfig& config) {
  config.validate();
  const int h = config.h;
  const int s = config.effective_path_cap();
  const std::uint32_t n = std::uint32_t{1} << h;

  IlpModel m;
  m.dim = h;
  m.variant = config.variant;
  m.path_cap = s;
  for (std::uint32_t v = 0; v < n; ++v) m.var_names.push_back("x_" + vtext(v, h));

  auto row = [&](std::string name, std::vector<LinearTerm> terms, RowSense sense, std::int64_t rhs) {
    m.rows.push_back({std::move(name), std::move(terms), sense, rhs});
  };

  if (config.variant == VariantKind::kTotal) {
    for_each_capped_pair(h, 2, [&](std::uint32_t u, std::uint32_t v, int) {
      row("total_" + vtext(u, h) + "_" + vtext(v, h), {{u, 1}, {v, 1}}, RowSense::kLessEqual, 1);
    });
  } else {
    for_each_capped_pair(h, s, [&](std::uint32_t u, std::uint32_t v, int) {
      const std::string tag = vtext(u, h) + "_" + vtext(v, h);
      const auto paths = enumerate_shortest_paths(Vertex(u, h), Vertex(v, h), s);
      std::vector<std::uint32_t> zs;
      for (std::uint32_t p = 0; p < paths.size(); ++p) {
        const auto z = static_cast<std::uint32_t>(m.var_names.size());
        m.var_names.push_back("z_" + tag + "_" + std::to_string(p));
        m.z_vars.push_back({u, v, p});
        zs.push_back(z);
        int j = 0;
        for (const Vertex& w : paths[p].interior()) {
          row("path_" + tag + "_" + std::to_string(p) + "_" + std::to_string(++j),
              {{z, 1}, {w.bits(), 1}}, RowSense::kLessEqual, 1);
        }
      }
      auto with_paths = [&](std::int64_t endpoint_coef, std::int64_t path_coef) {
        std::vector<LinearTerm> terms{{u, endpoint_coef}, {v, endpoint_coef}};
        for (auto z : zs) terms.push_back({z, path_coef});
        return terms;
      };
      switch (config.variant) {
        case VariantKind::kMutual:
          row("vis_" + tag, with_paths(1, -1), RowSense::kLessEqual, 1);
          break;
        case VariantKind::kDual:
          row("vis_" + tag, with_paths(1, -1), RowSense::kLessEqual, 1);
          row("dual_" + tag, with_paths(-1, -1), RowSense::kLessEqual, -1);
          break;
        case VariantKind::kOuter:
          row("outer_" + tag, with_paths(1, -2), RowSense::kLessEqual, 0);
          break;
        case VariantKind::kTotal:
          break;
      }
    });
  }

  for (const Vertex& p : config.presets) {
    row("preset_" + p.to_string(), {{p.bits(), 1}}, RowSense::kEqual, 1);
  }
  for (Pattern p : config.forbidden) {
    if (p == Pattern::kAdjacentPair) {
      for_each_edge(h, [&](std::uint32_t u, std::uint32_t v) {
        row("adj_" + vtext(u, h) + "_" + vtext(v, h), {{u, 1}, {v, 1}}, RowSense::kLessEqual, 1);
      });
    } else {
      for_each_star(h, [&](std::uint32_t c, std::uint32_t a, std::uint32_t b) {
        row("star_" + vtext(c, h) + "_" + vtext(a, h) + "_" + vtext(b, h), {{c, 1}, {a, 1}, {b, 1}},
            RowSense::kLessEqual, 2);
      });
    }
  }
  if (config.antipode_closure) {
    const std::uint32_t last = 1U << (h - 1);
    for (std::uint32_t u = 0; u < n; ++u) {
      if (u & last) continue;
      row("anti_" + vtext(u, h), {{u, 1}, {~u & (n - 1), -1}}, RowSense::kEqual, 0);
    }
  }
  if (config.neighborhood_cap) {
    // sum_{w in N(u)} x_w + h x_u <= cap - 1 + h, vacuous when x_u = 0.
    for (std::uint32_t u = 0; u < n; ++u) {
      std::vector<LinearTerm> terms;
      for (int i = 0; i < h; ++i) terms.push_back({u ^ (1U << i), 1});
      terms.push_back({u, h});
      row("nbhd_" + vtext(u, h), std::move(terms), RowSense::kLessEqual, *config.neighborhood_cap - 1 + h);
    }
  }
  return m;
}

void write_lp(std::ostream& out, const IlpModel& m) {
  constexpr std::size_t kTermsPerLine = 8;
  auto write_terms = [&](const std::vector<LinearTerm>& terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (i > 0 && i % kTermsPerLine == 0) out << "\n  ";
      const auto& t = terms[i];
      const std::int64_t mag = t.coef < 0 ? -t.coef : t.coef;
      if (i == 0) {
        if (t.coef < 0) out << "- ";
      } else {
        out << (t.coef < 0 ? " - " : " + ");
      }
      if (mag != 1) out << mag << ' ';
      out << m.var_names[t.var];
    }
  };

  out << "\\ hypervis ILP model h=" << m.dim << " variant=" << to_string(m.variant)
      << " path_cap=" << m.path_cap << '\n';
  out << "Maximize\n obj: ";
  std::vector<LinearTerm> objective;
  for (std::uint32_t v = 0; v < m.num_vertex_vars(); ++v) objective.push_back({v, 1});
  write_terms(objective);
  out << "\nSubject To\n";
  for (const auto& r : m.rows) {
    out << ' ' << r.name << ": ";
    write_terms(r.terms);
    out << (r.sense == RowSense::kEqual ? " = " : " <= ") << r.rhs << '\n';
  }
  out << "Binary\n";
  for (std::size_t i = 0; i < m.var_names.size(); ++i) {
    out << ' ' << m.var_names[i] << '\n';
  }
  out << "End\n";
}

}  // namespace hypervis
