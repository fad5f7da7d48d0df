#include "qzeno/modelcount.hpp"

#include <algorithm>

namespace qzeno {

namespace {

struct Search {
  const CnfFormula& f;
  std::uint64_t cap;
  std::vector<std::uint64_t> found;
  bool truncated = false;

  // truncated only becomes true when a model beyond the cap is actually
  // encountered, so an exact-cap result is not flagged.
  void record(std::uint64_t x) {
    if (found.size() >= cap) {
      truncated = true;
      return;
    }
    found.push_back(x);
  }

  // Clause status under the partial assignment (assigned, value): satisfied,
  // or the distinct unassigned literals it still has.
  struct ClauseView {
    bool satisfied = false;
    int unassigned = 0;
    Literal unit{};  // valid when unassigned == 1
  };

  ClauseView inspect(const Clause& c, std::uint64_t assigned,
                     std::uint64_t value) const {
    ClauseView view;
    Literal seen[8];
    for (const Literal& lit : c.literals) {
      std::uint64_t bit = 1ULL << lit.variable;
      if (assigned & bit) {
        bool v = (value & bit) != 0;
        if (v != lit.negated) {
          view.satisfied = true;
          return view;
        }
        continue;
      }
      bool dup = false;
      for (int i = 0; i < view.unassigned && i < 8; ++i)
        if (seen[i] == lit) dup = true;
      if (dup) continue;
      if (view.unassigned < 8) seen[view.unassigned] = lit;
      view.unit = lit;
      ++view.unassigned;
    }
    return view;
  }

  void emit_completions(std::uint64_t assigned, std::uint64_t value) {
    std::vector<int> free_vars;
    for (int v = 0; v < f.n; ++v)
      if (!(assigned & (1ULL << v))) free_vars.push_back(v);
    const int nf = static_cast<int>(free_vars.size());
    if (nf >= 63) {
      truncated = true;  // cannot even index the completions
      return;
    }
    for (std::uint64_t c = 0; c < (1ULL << nf); ++c) {
      if (truncated) return;
      std::uint64_t x = value;
      for (int i = 0; i < nf; ++i)
        if ((c >> i) & 1ULL) x |= 1ULL << free_vars[i];
      record(x);
    }
  }

  void descend(std::uint64_t assigned, std::uint64_t value) {
    if (truncated) return;
    // Unit propagation to fixpoint.
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Clause& c : f.clauses) {
        ClauseView view = inspect(c, assigned, value);
        if (view.satisfied) continue;
        if (view.unassigned == 0) return;  // conflict
        if (view.unassigned == 1) {
          std::uint64_t bit = 1ULL << view.unit.variable;
          assigned |= bit;
          if (!view.unit.negated) value |= bit;
          changed = true;
        }
      }
    }

    // Branch variable: most occurrences in the shortest open clauses,
    // ties to the lowest index. No open clause means every clause is
    // satisfied and the free variables expand.
    int shortest = f.n + 1;
    for (const Clause& c : f.clauses) {
      ClauseView view = inspect(c, assigned, value);
      if (!view.satisfied && view.unassigned < shortest)
        shortest = view.unassigned;
    }
    if (shortest == f.n + 1) {
      emit_completions(assigned, value);
      return;
    }

    std::vector<int> occurrences(f.n, 0);
    for (const Clause& c : f.clauses) {
      ClauseView view = inspect(c, assigned, value);
      if (view.satisfied || view.unassigned != shortest) continue;
      for (const Literal& lit : c.literals)
        if (!(assigned & (1ULL << lit.variable))) ++occurrences[lit.variable];
    }
    int branch = -1;
    for (int v = 0; v < f.n; ++v)
      if (occurrences[v] > 0 && (branch < 0 || occurrences[v] > occurrences[branch]))
        branch = v;

    std::uint64_t bit = 1ULL << branch;
    descend(assigned | bit, value);        // branch = 0
    descend(assigned | bit, value | bit);  // branch = 1
  }
};

}  // namespace

ModelSet enumerate_models_dpll(const CnfFormula& f, std::uint64_t cap) {
  if (cap < 1) throw InvalidParams("enumerate_models_dpll: cap must be >= 1");
  Search search{f, cap};
  search.descend(0, 0);
  std::sort(search.found.begin(), search.found.end());
  return ModelSet{f.n, std::move(search.found), search.truncated};
}

ModelSet enumerate_models_bruteforce(const CnfFormula& f) {
  if (f.n > 24)
    throw TooManyVariables("enumerate_models_bruteforce: n = " +
                           std::to_string(f.n) + " exceeds 24");
  const int m = f.clause_count();
  ModelSet out;
  out.n = f.n;
  for (std::uint64_t x = 0; x < (1ULL << f.n); ++x)
    if (count_satisfied(f, x) == m) out.models.push_back(x);
  return out;
}

}  // namespace qzeno
