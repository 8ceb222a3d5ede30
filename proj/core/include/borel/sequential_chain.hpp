#pragma once

#include <cstddef>
#include <vector>

#include "borel/subquotient.hpp"

namespace borel {

struct ChainStep {
  std::size_t index;    // n_l
  MonomialIdeal ideal;  // L_l, with M_l = L_l / J
};

/// The sequential chain 0 = M_0 ⊊ M_1 ⊊ ... ⊊ M_r = M of a Borel-type module,
/// M_l = Gamma_(x_{n_l})(M) with n_1 > n_2 > ... > n_r.
struct SequentialChain {
  Subquotient base;
  std::vector<ChainStep> steps;

  std::size_t length() const noexcept { return steps.size(); }
  // L_{l}, with L_0 the denominator of the base module. 0 <= l <= r.
  const MonomialIdeal& ideal(std::size_t l) const;
};

// Requires M ≠ 0 and Gamma_(x_1)(M) = M. Throws NotBorelType when the
// chain breaks containment or monotonicity, which happens only off Borel type.
SequentialChain build_chain(const Subquotient& m);

struct ChainQuotient {
  Subquotient quotient;  // Q_l = L_l / L_{l-1}
  Subquotient reduced;   // Q_l / (x_{n_l+1}, ..., x_n) Q_l
};

std::vector<ChainQuotient> chain_quotients(const SequentialChain& c);

// x_{n_l+1}, ..., x_n is a regular sequence on Q_l (1-based l).
bool check_regular_sequence(const SequentialChain& c, std::size_t l);

struct DimensionFiltrationReport {
  // Entry i-1 compares D_{n-i}(S/J) against Gamma_(x_i)(S/J).
  std::vector<bool> equal;
  bool all_equal() const;
};

// Requires S/J of Borel type.
DimensionFiltrationReport dimension_filtration_check(const MonomialIdeal& j);

struct SeqCmReport {
  std::vector<int> dims;  // d_l = dim Q_l
  int dim = -1;
  int depth = -1;
  bool dims_match_indices = true;  // d_l = n - n_l
  bool strictly_increasing = true;
  bool regular_sequences = true;
  bool ok() const noexcept {
    return dims_match_indices && strictly_increasing && regular_sequences;
  }
};

SeqCmReport seq_cm_report(const SequentialChain& c);

// The deduplicated display 0 ⊆ Gamma_(x_n)(M) ⊆ ... ⊆ Gamma_(x_1)(M) = M,
// recomputed independently of the chain builder. Zero entries are dropped.
std::vector<MonomialIdeal> gamma_ladder(const Subquotient& m);

// For S/I: the chain of I by iterated variable saturations,
// I_l = (I : x_{n_l}^inf), where each n_l is the largest j whose saturation
// of I_{l-1} grows it.
std::vector<MonomialIdeal> ideal_sequential_chain(const MonomialIdeal& ideal);

}  // namespace borel
