#include "borel/hochster.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "borel/errors.hpp"

namespace borel {

namespace {

using BigInt = boost::multiprecision::cpp_int;

// Fraction-free (Bareiss) elimination; exact rank over Q.
std::size_t rank_rational(std::vector<std::vector<BigInt>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a.front().size();
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t rank_f2(std::vector<std::vector<std::uint8_t>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      for (std::size_t c = col; c < cols; ++c) a[r][c] ^= a[rank][c];
    }
    ++rank;
  }
  return rank;
}

int face_dim(std::uint32_t face) { return std::popcount(face) - 1; }

// Rank of the boundary map from dim-k faces to dim-(k-1) faces.
std::size_t boundary_rank(const std::vector<std::uint32_t>& upper,
                          const std::vector<std::uint32_t>& lower, Field field) {
  if (upper.empty() || lower.empty()) return 0;
  std::unordered_map<std::uint32_t, std::size_t> row_of;
  for (std::size_t r = 0; r < lower.size(); ++r) row_of.emplace(lower[r], r);

  auto for_each_entry = [&](auto&& set) {
    for (std::size_t c = 0; c < upper.size(); ++c) {
      const std::uint32_t face = upper[c];
      int position = 0;
      for (std::uint32_t bits = face; bits != 0; bits &= bits - 1) {
        const std::uint32_t vertex = bits & (~bits + 1);
        set(row_of.at(face ^ vertex), c, position % 2 == 0 ? 1 : -1);
        ++position;
      }
    }
  };

  if (field == Field::f2) {
    std::vector<std::vector<std::uint8_t>> m(lower.size(),
                                             std::vector<std::uint8_t>(upper.size(), 0));
    for_each_entry([&](std::size_t r, std::size_t c, int) { m[r][c] = 1; });
    return rank_f2(std::move(m));
  }
  std::vector<std::vector<BigInt>> m(lower.size(), std::vector<BigInt>(upper.size(), 0));
  for_each_entry([&](std::size_t r, std::size_t c, int sign) { m[r][c] = sign; });
  return rank_rational(std::move(m));
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t nvertices, std::vector<std::uint32_t> faces)
    : nvertices_(nvertices), faces_(std::move(faces)) {
  if (nvertices_ > 31) throw InvalidArgument("at most 31 vertices supported");
  std::set<std::uint32_t> seen(faces_.begin(), faces_.end());
  if (seen.size() != faces_.size()) throw InvalidArgument("duplicate face");
  for (std::uint32_t f : faces_) {
    if (nvertices_ < 32 && (f >> nvertices_) != 0) {
      throw InvalidArgument("face uses a vertex beyond the vertex set");
    }
    for (std::uint32_t bits = f; bits != 0; bits &= bits - 1) {
      const std::uint32_t vertex = bits & (~bits + 1);
      if (!seen.contains(f ^ vertex)) throw InvalidArgument("face family is not closed downward");
    }
  }
}

bool SimplicialComplex::contains(std::uint32_t face) const {
  return std::find(faces_.begin(), faces_.end(), face) != faces_.end();
}

SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal,
                                       std::span<const Exponent> degree) {
  const std::size_t n = ideal.nvars();
  if (degree.size() != n) throw DimensionMismatch("multidegree length mismatch");
  std::uint32_t support = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (degree[i] < 0) throw InvalidArgument("negative multidegree");
    if (degree[i] > 0) support |= std::uint32_t{1} << i;
  }
  std::vector<std::uint32_t> faces;
  std::vector<Exponent> e(degree.begin(), degree.end());
  // Enumerate subsets of the support in increasing order, which keeps every
  // face after all of its subfaces.
  for (std::uint32_t sigma = 0;; sigma = (sigma - support) & support) {
    for (std::size_t i = 0; i < n; ++i) e[i] = degree[i] - ((sigma >> i) & 1U);
    if (ideal.contains(Monomial(e))) faces.push_back(sigma);
    if (sigma == support) break;
  }
  return SimplicialComplex(n, std::move(faces));
}

std::map<int, std::int64_t> reduced_homology_ranks(const SimplicialComplex& k, Field field) {
  std::map<int, std::int64_t> out;
  if (k.is_void()) return out;
  int top = -1;
  for (std::uint32_t f : k.faces()) top = std::max(top, face_dim(f));
  // by_dim[d + 1] holds the faces of dimension d, in stored order.
  std::vector<std::vector<std::uint32_t>> by_dim(static_cast<std::size_t>(top) + 2);
  for (std::uint32_t f : k.faces()) by_dim[static_cast<std::size_t>(face_dim(f) + 1)].push_back(f);

  std::vector<std::size_t> ranks(by_dim.size() + 1, 0);  // ranks[d+1] = rank of boundary from dim d
  for (int d = 0; d <= top; ++d) {
    const auto idx = static_cast<std::size_t>(d + 1);
    ranks[idx] = boundary_rank(by_dim[idx], by_dim[idx - 1], field);
  }
  for (int d = -1; d <= top; ++d) {
    const auto idx = static_cast<std::size_t>(d + 1);
    const auto betti = static_cast<std::int64_t>(by_dim[idx].size()) -
                       static_cast<std::int64_t>(ranks[idx]) -
                       static_cast<std::int64_t>(ranks[idx + 1]);
    if (betti != 0) out.emplace(d, betti);
  }
  return out;
}

std::map<std::pair<int, int>, std::int64_t> BettiTable::totals() const {
  std::map<std::pair<int, int>, std::int64_t> out;
  for (const auto& [key, rank] : entries) {
    int degree = 0;
    for (Exponent e : key.second) degree += e;
    out[{key.first, degree}] += rank;
  }
  return out;
}

std::size_t lcm_box_size(const MonomialIdeal& ideal) {
  std::size_t size = 1;
  for (Exponent b : ideal.exponent_bounds()) {
    const auto side = static_cast<std::size_t>(b) + 1;
    if (size > std::numeric_limits<std::size_t>::max() / side) {
      return std::numeric_limits<std::size_t>::max();
    }
    size *= side;
  }
  return size;
}

BettiTable betti_table(const MonomialIdeal& ideal, const OracleOptions& opts) {
  if (ideal.is_zero() || ideal.is_unit()) {
    throw InvalidArgument("Betti oracle needs a proper nonzero ideal");
  }
  const std::size_t n = ideal.nvars();
  if (n > 31) throw GuardExceeded("too many variables for the oracle");
  const std::size_t box = lcm_box_size(ideal);
  if (box > opts.box_guard) {
    throw GuardExceeded("lcm box of " + std::to_string(box) + " multidegrees exceeds guard " +
                        std::to_string(opts.box_guard));
  }

  // Joins of subsets of generators; Betti numbers live only there.
  std::set<Monomial> lattice(ideal.generators().begin(), ideal.generators().end());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Monomial> current(lattice.begin(), lattice.end());
    for (const auto& g : ideal.generators()) {
      for (const auto& m : current) grew |= lattice.insert(lcm(g, m)).second;
    }
  }

  BettiTable table;
  table.nvars = n;
  table.entries[{0, std::vector<Exponent>(n, 0)}] = 1;

  const std::vector<Exponent> bounds = ideal.exponent_bounds();
  std::vector<Exponent> a(n, 0);
  for (;;) {
    const auto homology = reduced_homology_ranks(upper_koszul_complex(ideal, a), opts.field);
    if (!homology.empty() && !lattice.contains(Monomial(a))) {
      throw InternalInconsistency("nonzero Betti number outside the lcm lattice");
    }
    // beta_{i,a}(I) = dim H_{i-1}(K^a(I)) and beta_{i+1,a}(S/I) = beta_{i,a}(I).
    for (const auto& [dim, rank] : homology) table.entries[{dim + 2, a}] = rank;

    std::size_t i = 0;
    while (i < n && a[i] == bounds[i]) a[i++] = 0;
    if (i == n) break;
    ++a[i];
  }
  return table;
}

OracleInvariants oracle_invariants(const BettiTable& table) {
  OracleInvariants out;
  for (const auto& [key, rank] : table.entries) {
    if (rank == 0) continue;
    int degree = 0;
    for (Exponent e : key.second) degree += e;
    out.reg = std::max(out.reg, degree - key.first);
    out.pd = std::max(out.pd, key.first);
  }
  out.depth = static_cast<int>(table.nvars) - out.pd;
  return out;
}

}  // namespace borel
