#include "qzeno/cnf.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>

#include "qzeno/rng.hpp"

namespace qzeno {

bool Clause::satisfied_by(std::uint64_t assignment) const {
  for (const Literal& lit : literals) {
    bool value = (assignment >> lit.variable) & 1ULL;
    if (value != lit.negated) return true;
  }
  return false;
}

bool eval_clause(const Clause& c, std::uint64_t assignment) {
  return c.satisfied_by(assignment);
}

int count_satisfied(const CnfFormula& f, std::uint64_t assignment) {
  int count = 0;
  for (const Clause& c : f.clauses)
    if (c.satisfied_by(assignment)) ++count;
  return count;
}

std::uint64_t clause_satisfying_count(const Clause& c, int n) {
  // The clause fails exactly on assignments fixing every mentioned variable
  // against its literal; a complementary pair makes failure impossible.
  std::uint64_t pos = 0, neg = 0;
  for (const Literal& lit : c.literals) {
    std::uint64_t bit = 1ULL << lit.variable;
    (lit.negated ? neg : pos) |= bit;
  }
  if (c.literals.empty()) return 0;
  if (pos & neg) return 1ULL << n;  // tautology
  int distinct = std::popcount(pos | neg);
  return (1ULL << n) - (1ULL << (n - distinct));
}

CnfFormula prefix(const CnfFormula& f, int k) {
  if (k < 0 || k > f.clause_count())
    throw KOutOfRange("prefix: k = " + std::to_string(k) + " outside [0, " +
                      std::to_string(f.clause_count()) + "]");
  CnfFormula out;
  out.n = f.n;
  out.clauses.assign(f.clauses.begin(), f.clauses.begin() + k);
  return out;
}

int prefix_length(int m, double ratio) {
  return static_cast<int>(std::floor(ratio * m + 0.5));
}

CnfFormula random_3sat(int n, int m, std::uint64_t seed) {
  if (n < 3) throw InvalidParams("random_3sat: need n >= 3");
  if (m < 1) throw InvalidParams("random_3sat: need m >= 1");
  Rng rng(seed);
  CnfFormula f;
  f.n = n;
  f.clauses.reserve(m);
  for (int ci = 0; ci < m; ++ci) {
    int v0 = rng.range(0, n - 1);
    int v1;
    do {
      v1 = rng.range(0, n - 1);
    } while (v1 == v0);
    int v2;
    do {
      v2 = rng.range(0, n - 1);
    } while (v2 == v0 || v2 == v1);
    Clause c;
    for (int v : {v0, v1, v2}) c.literals.push_back({v, rng.coin()});
    f.clauses.push_back(std::move(c));
  }
  return f;
}

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
  if (n < 1) throw InvalidParams("erdos_renyi: need n >= 1");
  if (p < 0.0 || p > 1.0) throw InvalidParams("erdos_renyi: need 0 <= p <= 1");
  Rng rng(seed);
  Graph g;
  g.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.bernoulli(p)) g.edges.emplace_back(i, j);
  return g;
}

CnfFormula coordination_formula(const Graph& g) {
  std::vector<std::vector<int>> adj(g.n);
  for (auto [i, j] : g.edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());

  CnfFormula f;
  f.n = g.n;
  // Key: sorted variable triple plus polarity.
  std::set<std::pair<std::array<int, 3>, bool>> seen;
  for (int j = 0; j < g.n; ++j) {
    const auto& nbrs = adj[j];
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        std::array<int, 3> vars{nbrs[a], j, nbrs[b]};
        std::sort(vars.begin(), vars.end());
        for (bool negated : {true, false}) {
          if (!seen.insert({vars, negated}).second) continue;
          Clause c;
          for (int v : vars) c.literals.push_back({v, negated});
          f.clauses.push_back(std::move(c));
        }
      }
    }
  }
  return f;
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula f;
  bool have_header = false;
  int declared_clauses = 0;
  Clause current;
  bool in_clause = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == 'c') continue;
    if (line[0] == 'p') {
      if (have_header) throw ParseError("duplicate header", line_no);
      std::istringstream hs(line);
      std::string p, fmt;
      int n = 0, m = 0;
      if (!(hs >> p >> fmt >> n >> m) || fmt != "cnf")
        throw ParseError("malformed header, expected 'p cnf <n> <m>'", line_no);
      if (n < 0 || m < 0) throw ParseError("negative counts in header", line_no);
      f.n = n;
      declared_clauses = m;
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("clause before 'p cnf' header", line_no);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      int lit = 0;
      try {
        std::size_t pos = 0;
        lit = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("bad literal '" + tok + "'", line_no);
      }
      if (lit == 0) {
        f.clauses.push_back(std::move(current));
        current = Clause{};
        in_clause = false;
        continue;
      }
      int var = std::abs(lit) - 1;
      if (var >= f.n)
        throw ParseError("variable " + std::to_string(std::abs(lit)) +
                             " exceeds declared count " + std::to_string(f.n),
                         line_no);
      current.literals.push_back({var, lit < 0});
      in_clause = true;
    }
  }
  if (in_clause) throw ParseError("unterminated clause at end of input", line_no);
  if (f.clause_count() != declared_clauses)
    throw HeaderMismatch("header declares " + std::to_string(declared_clauses) +
                         " clauses, found " + std::to_string(f.clause_count()));
  return f;
}

std::string emit_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.n << ' ' << f.clause_count() << '\n';
  for (const Clause& c : f.clauses) {
    for (const Literal& lit : c.literals)
      out << (lit.negated ? -(lit.variable + 1) : (lit.variable + 1)) << ' ';
    out << "0\n";
  }
  return out.str();
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  Graph g;
  if (!(in >> g.n) || g.n < 1) throw ParseError("expected node count", 1);
  int i, j;
  while (in >> i >> j) {
    if (i == j || i < 0 || j < 0 || i >= g.n || j >= g.n)
      throw ParseError("bad edge " + std::to_string(i) + " " + std::to_string(j), 0);
    if (i > j) std::swap(i, j);
    g.edges.emplace_back(i, j);
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n << '\n';
  for (auto [i, j] : g.edges) out << i << ' ' << j << '\n';
  return out.str();
}

}  // namespace qzeno
