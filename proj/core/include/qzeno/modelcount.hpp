#pragma once

#include <cstdint>
#include <vector>

#include "qzeno/cnf.hpp"

namespace qzeno {

inline constexpr std::uint64_t kDefaultModelCap = 1ULL << 20;

struct ModelSet {
  int n = 0;
  std::vector<std::uint64_t> models;  // strictly ascending
  bool truncated = false;

  std::uint64_t count() const { return models.size(); }
};

// All satisfying assignments, found by recursive splitting with unit
// propagation and pure-literal elimination; free variables under a satisfied
// residual are expanded into every completion. Enumeration stops once cap
// models were found (truncated is set); output is sorted ascending.
ModelSet enumerate_models_dpll(const CnfFormula& f,
                               std::uint64_t cap = kDefaultModelCap);

// Checks every assignment; n <= 24 or TooManyVariables.
ModelSet enumerate_models_bruteforce(const CnfFormula& f);

}  // namespace qzeno
