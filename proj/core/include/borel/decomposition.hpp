#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "borel/monomial.hpp"
#include "borel/subquotient.hpp"

namespace borel {

/// A prime generated by a set of variables, e.g. (x1, x3).
class MonomialPrime {
 public:
  MonomialPrime() = default;
  MonomialPrime(std::size_t nvars, std::vector<std::size_t> vars);

  // (x1, ..., xr).
  static MonomialPrime initial_segment(std::size_t nvars, std::size_t r);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<std::size_t>& vars() const noexcept { return vars_; }
  std::size_t height() const noexcept { return vars_.size(); }
  // dim S/P.
  int dimension() const noexcept { return static_cast<int>(nvars_ - vars_.size()); }
  bool is_initial_segment() const noexcept;
  bool is_subset_of(const MonomialPrime& other) const;
  MonomialIdeal ideal() const;

  friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;
  friend auto operator<=>(const MonomialPrime& a, const MonomialPrime& b) {
    return a.vars_ <=> b.vars_;
  }

 private:
  std::size_t nvars_ = 0;
  std::vector<std::size_t> vars_;  // sorted, 1-based
};

// `x1,x2`.
std::string to_string(const MonomialPrime& p);

// The prime an ideal equals, if it is generated by variables.
std::optional<MonomialPrime> as_prime(const MonomialIdeal& ideal);

/// Irreducible monomial ideal (x_i^{e_i} : i in domain); bound 0 means the
/// variable does not appear.
struct IrreducibleComponent {
  std::vector<Exponent> bounds;

  MonomialIdeal ideal() const;
  MonomialPrime radical() const;

  friend bool operator==(const IrreducibleComponent&,
                         const IrreducibleComponent&) = default;
  friend auto operator<=>(const IrreducibleComponent&,
                          const IrreducibleComponent&) = default;
};

// Irredundant irreducible decomposition. Requires J proper and nonzero.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& j);

// Ass(S/J) as radicals of the irreducible components, sorted.
std::vector<MonomialPrime> associated_primes_cyclic(const MonomialIdeal& j);

struct AssociatedPrime {
  MonomialPrime prime;
  Monomial witness;  // (J : witness) = prime
};

// Ass(I/J) by witness search over the exponent box of the generators of I
// and J; the first witness found (canonical order) is kept per prime.
std::vector<AssociatedPrime> associated_primes_with_witnesses(const Subquotient& m);
std::vector<MonomialPrime> associated_primes_subquotient(const Subquotient& m);

// Minimal elements of a prime set.
std::vector<MonomialPrime> minimal_primes(const std::vector<MonomialPrime>& primes);

// Krull dimension; -1 for the zero module.
int krull_dim(const Subquotient& m);

struct PrimaryComponent {
  MonomialPrime radical;
  MonomialIdeal ideal;
};

// Group irreducible components by radical and intersect each group.
std::vector<PrimaryComponent> primary_decomposition(const MonomialIdeal& j);

// L with D_i(S/J) = L/J: intersection of primary components of dimension > i.
// Requires 0 <= i <= dim S/J.
MonomialIdeal schenzel_dimension_filtration(const MonomialIdeal& j, int i);

}  // namespace borel
