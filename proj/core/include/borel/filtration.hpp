#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "borel/decomposition.hpp"
#include "borel/sequential_chain.hpp"

namespace borel {

struct FiltrationStep {
  MonomialIdeal ideal;  // L_k = L_{k-1} + (witness)
  Monomial witness;     // m_k
  MonomialPrime prime;  // (L_{k-1} : m_k) = P_k, so L_k / L_{k-1} ≅ S/P_k
};

/// Prime filtration J = L_0 ⊊ L_1 ⊊ ... ⊊ L_t = I of M = I/J.
struct PrimeFiltration {
  Subquotient base;
  std::vector<FiltrationStep> steps;

  // L_k; L_0 is the denominator of the base.
  const MonomialIdeal& ideal(std::size_t k) const;
};

struct FiltrationOptions {
  // When set, witnesses of equal degree are tried in a shuffled order
  // instead of canonical order.
  std::optional<std::uint64_t> shuffle_seed;
};

// Pretty clean filtration of a nonzero Borel-type module, built along the
// sequential chain with primes (x_1..x_{n_1}) ⊇ (x_1..x_{n_2}) ⊇ ...
// Witnesses are tried by increasing degree. Throws WitnessExhausted if the
// box search fails.
PrimeFiltration build_pretty_clean(const Subquotient& m, const FiltrationOptions& opts = {});

struct FiltrationVerification {
  bool structure_ok = true;
  std::optional<std::size_t> failing_step;  // 1-based
  std::string failure;

  bool pretty_clean = false;
  bool supp_equals_ass = false;
  bool clean = false;
  std::vector<MonomialPrime> support;
  std::vector<MonomialPrime> associated;
  std::vector<MonomialPrime> minimal;

  bool ok() const noexcept { return structure_ok && pretty_clean && supp_equals_ass; }
};

// Independent re-check of every step, the pretty clean order, supp(F) = Ass(M),
// and cleanness (supp(F) = Min(M)).
FiltrationVerification verify_filtration(const PrimeFiltration& f);

struct FiltrationLengthReport {
  std::vector<std::int64_t> step_counts;    // steps carrying prime (x_1..x_{n_l})
  std::vector<std::int64_t> reduced_dims;   // dim_K of the reduced chain quotient
  bool ok() const noexcept { return step_counts == reduced_dims; }
};

FiltrationLengthReport filtration_length_check(const PrimeFiltration& f,
                                               const SequentialChain& c,
                                               Exponent degree_ceiling = 0);

}  // namespace borel
