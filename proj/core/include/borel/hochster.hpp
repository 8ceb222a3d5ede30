#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "borel/monomial.hpp"

namespace borel {

/// A finite simplicial complex on vertices 1..n, faces stored as bitmasks
/// (bit i-1 is vertex i) in insertion order. The void complex has no faces;
/// the irrelevant complex has only the empty face.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // Throws InvalidArgument if the face family is not closed downward.
  SimplicialComplex(std::size_t nvertices, std::vector<std::uint32_t> faces);

  std::size_t nvertices() const noexcept { return nvertices_; }
  const std::vector<std::uint32_t>& faces() const noexcept { return faces_; }
  bool is_void() const noexcept { return faces_.empty(); }
  bool contains(std::uint32_t face) const;

 private:
  std::size_t nvertices_ = 0;
  std::vector<std::uint32_t> faces_;
};

enum class Field { rationals, f2 };

// {x^a / x^sigma ∈ I : sigma ⊆ supp(a)}.
SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal,
                                       std::span<const Exponent> degree);

// Nonzero reduced Betti numbers of the complex, keyed by homological
// dimension (-1 for the irrelevant complex).
std::map<int, std::int64_t> reduced_homology_ranks(const SimplicialComplex& k,
                                                   Field field = Field::rationals);

/// Multigraded Betti numbers of S/I: entries[(i, a)] = beta_{i,a}(S/I),
/// nonzero entries only.
struct BettiTable {
  std::size_t nvars = 0;
  std::map<std::pair<int, std::vector<Exponent>>, std::int64_t> entries;

  // beta_{i,j}(S/I) keyed by (i, j = |a|).
  std::map<std::pair<int, int>, std::int64_t> totals() const;
};

struct OracleOptions {
  Field field = Field::rationals;
  std::size_t box_guard = std::size_t{1} << 16;
};

// Number of multidegrees in the lcm box of the minimal generators.
std::size_t lcm_box_size(const MonomialIdeal& ideal);

// Throws GuardExceeded when the lcm box exceeds the guard and
// InvalidArgument for the zero or unit ideal.
BettiTable betti_table(const MonomialIdeal& ideal, const OracleOptions& opts = {});

struct OracleInvariants {
  int reg = 0;
  int pd = 0;
  int depth = 0;
};

OracleInvariants oracle_invariants(const BettiTable& table);

}  // namespace borel
