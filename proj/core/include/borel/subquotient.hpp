#pragma once

#include <cstdint>
#include <vector>

#include "borel/monomial.hpp"

namespace borel {

/// The multigraded module M = I/J for monomial ideals J ⊆ I.
///
/// Submodules of M are always of the form L/J with J ⊆ L ⊆ I, so every
/// operation that produces a submodule returns the ideal L.
///
/// Every element of M is torsion as soon as J ≠ 0; the constructor insists on
/// that (or on M = 0), which is the standing hypothesis of all Borel-type
/// results.
class Subquotient {
 public:
  Subquotient(MonomialIdeal numerator, MonomialIdeal denominator);

  // S/J.
  static Subquotient cyclic(MonomialIdeal denominator);

  const MonomialIdeal& numerator() const noexcept { return num_; }
  const MonomialIdeal& denominator() const noexcept { return den_; }
  std::size_t nvars() const noexcept { return num_.nvars(); }

  bool is_zero() const { return num_ == den_; }
  bool is_cyclic() const { return num_.is_unit(); }

  friend bool operator==(const Subquotient&, const Subquotient&) = default;

 private:
  MonomialIdeal num_;
  MonomialIdeal den_;
};

// Gamma_U(M) = L/J with L = I ∩ (J : U^inf). Rejects U = 0.
MonomialIdeal gamma(const Subquotient& m, const MonomialIdeal& u);
MonomialIdeal gamma(const Subquotient& m, const Monomial& u);

// M / (L/J) = I/L; requires J ⊆ L ⊆ I.
Subquotient quotient_by_submodule(const Subquotient& m, const MonomialIdeal& l);

// M_{>=e}, the submodule generated by homogeneous elements of degree >= e.
Subquotient truncate(const Subquotient& m, Exponent e);

// dim_K M_d: monomials of degree d in I but not in J.
std::int64_t hilbert_function(const Subquotient& m, Exponent d);

// Q / (x_{r+1}, ..., x_n) Q for Q = I/L, i.e. I / (L + (x_{r+1..n}) I).
Subquotient artinian_reduction(const Subquotient& q, std::size_t r);

// s(N) = max{ d : N_d ≠ 0 } for an Artinian N generated in degrees
// <= gen_degree_bound. A ceiling of 0 means 10 * max(bound, 1); the scan
// always reaches the bound itself. Throws NotArtinian past the ceiling and
// ZeroModule for N = 0.
Exponent top_degree_s(const Subquotient& n, Exponent gen_degree_bound,
                      Exponent ceiling = 0);

// Hilbert function values at d = 0..s(N) for an Artinian module.
std::vector<std::int64_t> artinian_hilbert_table(const Subquotient& n,
                                                 Exponent ceiling = 0);

}  // namespace borel
