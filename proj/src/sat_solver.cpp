#include <algorithm>
#include <chrono>
#include <limits>

#include "hypervis/sat.hpp"

namespace hypervis {

std::string_view to_string(SatStatus s) {
  switch (s) {
    case SatStatus::kSat: return "SATISFIABLE";
    case SatStatus::kUnsat: return "UNSATISFIABLE";
    case SatStatus::kUnknown: return "UNKNOWN";
  }
  return "?";
}

namespace {

using Lit = std::uint32_t;
constexpr std::uint32_t kNoClause = std::numeric_limits<std::uint32_t>::max();
constexpr std::uint8_t kFalse = 0, kTrue = 1, kUndef = 2;

Lit to_lit(int dimacs) {
  const auto v = static_cast<std::uint32_t>(dimacs < 0 ? -dimacs : dimacs);
  return 2 * v + (dimacs < 0 ? 1U : 0U);
}
Lit negate(Lit l) { return l ^ 1U; }
std::uint32_t var_of(Lit l) { return l >> 1; }

double luby(double y, int x) {
  int size = 1, seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x %= size;
  }
  double r = 1;
  for (int i = 0; i < seq; ++i) r *= y;
  return r;
}

class Solver {
 public:
  Solver(const CnfFormula& formula, const SolverOptions& options)
      : options_(options), num_vars_(static_cast<std::uint32_t>(formula.num_vars())) {
    const std::size_t n = num_vars_ + 1;
    assigns_.assign(n, kUndef);
    level_.assign(n, 0);
    reason_.assign(n, kNoClause);
    seen_.assign(n, 0);
    phase_.assign(n, kFalse);
    activity_.assign(n, 0.0);
    heap_index_.assign(n, -1);
    watches_.resize(2 * n);
    load(formula);
  }

  SatResult solve() {
    start_ = std::chrono::steady_clock::now();
    SatResult result;
    result.status = run(result.detail);
    result.stats = stats_;
    result.stats.seconds = elapsed();
    if (result.status == SatStatus::kSat) {
      result.assignment.assign(num_vars_ + 1, false);
      for (std::uint32_t v = 1; v <= num_vars_; ++v) result.assignment[v] = assigns_[v] == kTrue;
    }
    return result;
  }

 private:
  struct ClauseRef {
    std::uint32_t start;
    std::uint32_t size;
  };

  std::uint8_t value(Lit l) const {
    const std::uint8_t a = assigns_[var_of(l)];
    return a == kUndef ? kUndef : static_cast<std::uint8_t>(a ^ (l & 1U));
  }

  std::uint32_t decision_level() const { return static_cast<std::uint32_t>(trail_lim_.size()); }

  void enqueue(Lit l, std::uint32_t reason) {
    const std::uint32_t v = var_of(l);
    assigns_[v] = static_cast<std::uint8_t>((l & 1U) ? kFalse : kTrue);
    level_[v] = decision_level();
    reason_[v] = reason;
    trail_.push_back(l);
  }

  void load(const CnfFormula& formula) {
    std::vector<Lit> c;
    auto add = [&](std::span<const int> dimacs) {
      c.clear();
      for (int d : dimacs) c.push_back(to_lit(d));
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      for (std::size_t i = 1; i < c.size(); ++i) {
        if (c[i] == negate(c[i - 1])) return;  // tautology
      }
      if (c.empty()) {
        trivially_unsat_ = true;
        return;
      }
      if (c.size() == 1) {
        units_.push_back(c[0]);
        return;
      }
      attach(c);
    };
    for (std::size_t i = 0; i < formula.num_clauses(); ++i) add(formula.clause(i));
    for (int a : options_.assumptions) {
      if (a == 0 || static_cast<std::uint32_t>(std::abs(a)) > num_vars_) {
        throw DomainError("assumption literal outside the formula");
      }
      units_.push_back(to_lit(a));
    }
  }

  std::uint32_t attach(const std::vector<Lit>& c) {
    const auto ci = static_cast<std::uint32_t>(clauses_.size());
    clauses_.push_back({static_cast<std::uint32_t>(lits_.size()), static_cast<std::uint32_t>(c.size())});
    lits_.insert(lits_.end(), c.begin(), c.end());
    watches_[c[0]].push_back(ci);
    watches_[c[1]].push_back(ci);
    return ci;
  }

  std::uint32_t propagate() {
    while (qhead_ < trail_.size()) {
      const Lit false_lit = negate(trail_[qhead_++]);
      ++stats_.propagations;
      auto& ws = watches_[false_lit];
      std::size_t i = 0, j = 0;
      while (i < ws.size()) {
        const std::uint32_t ci = ws[i++];
        Lit* c = &lits_[clauses_[ci].start];
        const std::uint32_t size = clauses_[ci].size;
        if (c[0] == false_lit) std::swap(c[0], c[1]);
        if (value(c[0]) == kTrue) {
          ws[j++] = ci;
          continue;
        }
        bool moved = false;
        for (std::uint32_t k = 2; k < size; ++k) {
          if (value(c[k]) != kFalse) {
            std::swap(c[1], c[k]);
            watches_[c[1]].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = ci;
        if (value(c[0]) == kFalse) {
          while (i < ws.size()) ws[j++] = ws[i++];
          ws.resize(j);
          qhead_ = trail_.size();
          return ci;
        }
        enqueue(c[0], ci);
      }
      ws.resize(j);
    }
    return kNoClause;
  }

  // First-UIP learning.  Returns the backjump level; learnt[0] is asserting.
  std::uint32_t analyze(std::uint32_t conflict, std::vector<Lit>& learnt) {
    learnt.assign(1, 0);
    int pending = 0;
    Lit p = 0;
    bool have_p = false;
    std::size_t index = trail_.size();
    std::uint32_t ci = conflict;
    do {
      const ClauseRef cr = clauses_[ci];
      for (std::uint32_t k = have_p ? 1 : 0; k < cr.size; ++k) {
        const Lit q = lits_[cr.start + k];
        const std::uint32_t v = var_of(q);
        if (seen_[v] || level_[v] == 0) continue;
        seen_[v] = 1;
        bump(v);
        if (level_[v] >= decision_level()) {
          ++pending;
        } else {
          learnt.push_back(q);
        }
      }
      while (!seen_[var_of(trail_[--index])]) {
      }
      p = trail_[index];
      have_p = true;
      ci = reason_[var_of(p)];
      seen_[var_of(p)] = 0;
      --pending;
    } while (pending > 0);
    learnt[0] = negate(p);

    std::uint32_t back = 0;
    std::size_t max_i = 1;
    for (std::size_t i = 1; i < learnt.size(); ++i) {
      if (level_[var_of(learnt[i])] > back) {
        back = level_[var_of(learnt[i])];
        max_i = i;
      }
    }
    if (learnt.size() > 1) std::swap(learnt[1], learnt[max_i]);
    for (Lit l : learnt) seen_[var_of(l)] = 0;
    decay();
    return back;
  }

  void cancel_until(std::uint32_t level) {
    if (decision_level() <= level) return;
    for (std::size_t i = trail_.size(); i > trail_lim_[level]; --i) {
      const std::uint32_t v = var_of(trail_[i - 1]);
      phase_[v] = assigns_[v];
      assigns_[v] = kUndef;
      reason_[v] = kNoClause;
      if (v < cursor_) cursor_ = v;
      if (options_.branching == Branching::kActivity) heap_insert(v);
    }
    trail_.resize(trail_lim_[level]);
    trail_lim_.resize(level);
    qhead_ = trail_.size();
  }

  std::optional<Lit> pick_branch() {
    if (options_.branching == Branching::kLowestIndex) {
      while (cursor_ <= num_vars_ && assigns_[cursor_] != kUndef) ++cursor_;
      if (cursor_ > num_vars_) return std::nullopt;
      return 2 * cursor_ + 1;  // false first
    }
    while (!heap_.empty()) {
      const std::uint32_t v = heap_pop();
      if (assigns_[v] == kUndef) return 2 * v + (phase_[v] == kTrue ? 0U : 1U);
    }
    return std::nullopt;
  }

  // --- activity heap (max-heap on activity_, ties by lower index)

  bool heap_less(std::uint32_t a, std::uint32_t b) const {
    return activity_[a] > activity_[b] || (activity_[a] == activity_[b] && a < b);
  }
  void heap_up(std::size_t i) {
    const std::uint32_t v = heap_[i];
    while (i > 0) {
      const std::size_t parent = (i - 1) / 2;
      if (!heap_less(v, heap_[parent])) break;
      heap_[i] = heap_[parent];
      heap_index_[heap_[i]] = static_cast<int>(i);
      i = parent;
    }
    heap_[i] = v;
    heap_index_[v] = static_cast<int>(i);
  }
  void heap_down(std::size_t i) {
    const std::uint32_t v = heap_[i];
    for (;;) {
      std::size_t child = 2 * i + 1;
      if (child >= heap_.size()) break;
      if (child + 1 < heap_.size() && heap_less(heap_[child + 1], heap_[child])) ++child;
      if (!heap_less(heap_[child], v)) break;
      heap_[i] = heap_[child];
      heap_index_[heap_[i]] = static_cast<int>(i);
      i = child;
    }
    heap_[i] = v;
    heap_index_[v] = static_cast<int>(i);
  }
  void heap_insert(std::uint32_t v) {
    if (heap_index_[v] >= 0) return;
    heap_.push_back(v);
    heap_up(heap_.size() - 1);
  }
  std::uint32_t heap_pop() {
    const std::uint32_t top = heap_.front();
    heap_index_[top] = -1;
    heap_.front() = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
      heap_index_[heap_.front()] = 0;
      heap_down(0);
    }
    return top;
  }

  void bump(std::uint32_t v) {
    if (options_.branching != Branching::kActivity) return;
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
      for (auto& a : activity_) a *= 1e-100;
      var_inc_ *= 1e-100;
    }
    if (heap_index_[v] >= 0) heap_up(static_cast<std::size_t>(heap_index_[v]));
  }
  void decay() { var_inc_ /= 0.95; }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  bool over_budget(std::string& detail) {
    if (options_.max_conflicts && stats_.conflicts >= *options_.max_conflicts) {
      detail = "conflict budget exhausted";
      return true;
    }
    if (options_.max_seconds && elapsed() >= *options_.max_seconds) {
      detail = "time budget exhausted";
      return true;
    }
    return false;
  }

  SatStatus run(std::string& detail) {
    if (trivially_unsat_) return SatStatus::kUnsat;
    for (Lit u : units_) {
      const std::uint8_t val = value(u);
      if (val == kFalse) return SatStatus::kUnsat;
      if (val == kUndef) enqueue(u, kNoClause);
    }
    if (options_.branching == Branching::kActivity) {
      for (std::uint32_t v = 1; v <= num_vars_; ++v) heap_insert(v);
    }

    std::vector<Lit> learnt;
    int restart_index = 0;
    std::uint64_t restart_at = static_cast<std::uint64_t>(100 * luby(2, restart_index));
    std::uint64_t conflicts_since_restart = 0;
    for (;;) {
      const std::uint32_t conflict = propagate();
      if (conflict != kNoClause) {
        ++stats_.conflicts;
        ++conflicts_since_restart;
        if (decision_level() == 0) return SatStatus::kUnsat;
        const std::uint32_t back = analyze(conflict, learnt);
        cancel_until(back);
        if (learnt.size() == 1) {
          enqueue(learnt[0], kNoClause);
        } else {
          const std::uint32_t ci = attach(learnt);
          enqueue(learnt[0], ci);
        }
        if ((stats_.conflicts & 63U) == 0 && over_budget(detail)) return SatStatus::kUnknown;
        if (options_.max_conflicts && stats_.conflicts >= *options_.max_conflicts) {
          detail = "conflict budget exhausted";
          return SatStatus::kUnknown;
        }
        if (options_.branching == Branching::kActivity && conflicts_since_restart >= restart_at) {
          cancel_until(0);
          conflicts_since_restart = 0;
          restart_at = static_cast<std::uint64_t>(100 * luby(2, ++restart_index));
        }
        continue;
      }
      if ((stats_.decisions & 1023U) == 0 && over_budget(detail)) return SatStatus::kUnknown;
      const auto next = pick_branch();
      if (!next) return SatStatus::kSat;
      ++stats_.decisions;
      trail_lim_.push_back(trail_.size());
      enqueue(*next, kNoClause);
    }
  }

  const SolverOptions& options_;
  std::uint32_t num_vars_;
  std::vector<std::uint8_t> assigns_;
  std::vector<std::uint32_t> level_;
  std::vector<std::uint32_t> reason_;
  std::vector<std::uint8_t> seen_;
  std::vector<std::uint8_t> phase_;
  std::vector<double> activity_;
  std::vector<int> heap_index_;
  std::vector<std::uint32_t> heap_;
  double var_inc_ = 1.0;
  std::vector<ClauseRef> clauses_;
  std::vector<Lit> lits_;
  std::vector<std::vector<std::uint32_t>> watches_;
  std::vector<Lit> units_;
  std::vector<Lit> trail_;
  std::vector<std::size_t> trail_lim_;
  std::size_t qhead_ = 0;
  std::uint32_t cursor_ = 1;
  bool trivially_unsat_ = false;
  SolverStats stats_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

SatResult dpll_solve(const CnfFormula& formula, const SolverOptions& options) {
  Solver solver(formula, options);
  return solver.solve();
}

}  // namespace hypervis
