#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qzeno/errors.hpp"

namespace qzeno {

struct Literal {
  int variable = 0;
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Clause {
  std::vector<Literal> literals;

  // True iff at least one literal is satisfied by the assignment bitmask.
  bool satisfied_by(std::uint64_t assignment) const;

  friend bool operator==(const Clause&, const Clause&) = default;
};

struct CnfFormula {
  int n = 0;  // variable count
  std::vector<Clause> clauses;

  int clause_count() const { return static_cast<int>(clauses.size()); }

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted, unique
};

bool eval_clause(const Clause& c, std::uint64_t assignment);

// Number of clauses of f satisfied by the assignment; in [0, m].
int count_satisfied(const CnfFormula& f, std::uint64_t assignment);

// Number of assignments x in [0, 2^n) satisfying the clause. Handles repeated
// and complementary literals (a tautological clause is satisfied by all x).
std::uint64_t clause_satisfying_count(const Clause& c, int n);

// First k clauses of f; throws KOutOfRange unless 0 <= k <= m.
CnfFormula prefix(const CnfFormula& f, int k);

// k = round(ratio * m), ties up.
int prefix_length(int m, double ratio);

// m clauses of 3 distinct variables each, signs independent fair coins.
CnfFormula random_3sat(int n, int m, std::uint64_t seed);

// Each of the C(n,2) edges kept independently with probability p.
Graph erdos_renyi(int n, double p, std::uint64_t seed);

// For every node j and unordered pair {i,k} of distinct neighbors of j, the
// not-all-equal clause pair over {i,j,k}: all-negated then all-positive.
// Duplicate literal-sets are dropped, first occurrence kept. Clause order:
// ascending j, then ascending (i,k), negative before positive.
CnfFormula coordination_formula(const Graph& g);

CnfFormula parse_dimacs(const std::string& text);
CnfFormula parse_dimacs(std::istream& in);
std::string emit_dimacs(const CnfFormula& f);

Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g);

}  // namespace qzeno
