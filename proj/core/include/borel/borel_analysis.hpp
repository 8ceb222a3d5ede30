#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "borel/decomposition.hpp"
#include "borel/subquotient.hpp"

namespace borel {

/// Outcome of the three equivalent Borel-type tests, all computed.
///
///  - by_saturation: Gamma_(x_i)(M) = Gamma_(x_1..x_i)(M) for every i.
///  - by_pairwise:   Gamma_(x_i)(M) ⊆ Gamma_(x_j)(M) for every j < i.
///  - by_ass:        every associated prime is (x_1, ..., x_r).
struct BorelVerdict {
  bool by_saturation = true;
  bool by_pairwise = true;
  bool by_ass = true;
  bool zero_module = false;

  std::optional<std::size_t> saturation_failure;                 // i
  std::optional<std::pair<std::size_t, std::size_t>> pairwise_failure;  // (j, i)
  std::optional<MonomialPrime> offending_prime;
  std::vector<MonomialPrime> associated_primes;

  bool is_borel() const noexcept { return by_saturation; }
};

// Throws InternalInconsistency if the three criteria disagree.
BorelVerdict is_borel_type(const Subquotient& m);

// Property (*): (I : x_j^inf) = (I : (x_1..x_j)^inf) for all j.
bool ideal_is_borel_type(const MonomialIdeal& ideal);

// (0 :_M x_i) ⊆ (0 :_M x_j) for all j < i.
bool is_strongly_stable_module(const Subquotient& m);

// Closed under the exchanges u -> x_j u / x_i for j < i.
bool is_strongly_stable_ideal(const MonomialIdeal& ideal);

// Default scan bound for the truncation test: max generator degree of the
// numerator plus the number of variables.
Exponent default_truncation_bound(const Subquotient& m);

// Least e <= e_max with M_{>=e} strongly stable. When one is found the
// module must be Borel type; otherwise InternalInconsistency.
std::optional<Exponent> truncation_borel_criterion(const Subquotient& m, Exponent e_max);

struct GammaIdentityReport {
  bool passed = true;
  std::size_t checks = 0;
  std::string counterexample;
};

// For a Borel-type module: Gamma_(x_j) = Gamma_(x_j...x_{j+p}) for every
// valid (j, p), and Gamma_(u) = Gamma_(x_{w(u)}) for every nonunit u of degree
// <= 2 and every squarefree u. Throws NotBorelType otherwise.
GammaIdentityReport gamma_identity_suite(const Subquotient& m);

}  // namespace borel
