#pragma once

#include <cstddef>
#include <vector>

#include "borel/hochster.hpp"
#include "borel/sequential_chain.hpp"

namespace borel {

struct RegularityOptions {
  // Hard ceiling for the Artinian top-degree scan; 0 means 10x the
  // generator-degree bound of each reduced quotient.
  Exponent degree_ceiling = 0;
};

struct RegularityStep {
  std::size_t index;  // n_l
  int dim;            // n - n_l
  Exponent s;         // s(reduced Q_l)
  int a_invariant;    // a_{n - n_l}(M) = s - (n - n_l)
};

struct RegularityReport {
  int reg = 0;
  std::vector<RegularityStep> steps;
  int dim = -1;
  int depth = -1;
  SequentialChain chain;
};

// reg(M) = max_l s(Q_l / (x_{n_l+1}, ..., x_n) Q_l) over the sequential chain.
// Throws ZeroModule for M = 0 and NotBorelType off Borel type.
RegularityReport regularity_borel(const Subquotient& m, const RegularityOptions& opts = {});

struct Lemma22Report {
  int chain_reg = 0;
  int oracle_reg = 0;
  bool agree() const noexcept { return chain_reg == oracle_reg; }
};

// Compares the chain formula with the Betti-number oracle for a cyclic S/I.
// Throws GuardExceeded if the oracle box is too large.
Lemma22Report lemma22_consistency(const Subquotient& m, const RegularityOptions& opts = {},
                                  const OracleOptions& oracle = {});

}  // namespace borel
