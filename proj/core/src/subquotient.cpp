#include "borel/subquotient.hpp"

#include <algorithm>
#include <string>

#include "borel/errors.hpp"

namespace borel {

Subquotient::Subquotient(MonomialIdeal numerator, MonomialIdeal denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (num_.nvars() != den_.nvars()) {
    throw DimensionMismatch("numerator and denominator live in different rings");
  }
  if (!num_.contains(den_)) {
    throw InvalidArgument("denominator is not contained in numerator");
  }
  if (den_.is_zero() && !num_.is_zero()) {
    throw InvalidArgument("zero denominator: module is not torsion");
  }
}

Subquotient Subquotient::cyclic(MonomialIdeal denominator) {
  const std::size_t n = denominator.nvars();
  return Subquotient(MonomialIdeal::unit(n), std::move(denominator));
}

MonomialIdeal gamma(const Subquotient& m, const MonomialIdeal& u) {
  if (u.is_zero()) throw InvalidArgument("torsion functor of the zero ideal");
  return intersect(m.numerator(), saturate(m.denominator(), u));
}

MonomialIdeal gamma(const Subquotient& m, const Monomial& u) {
  return gamma(m, MonomialIdeal::principal(u));
}

Subquotient quotient_by_submodule(const Subquotient& m, const MonomialIdeal& l) {
  if (!l.contains(m.denominator()) || !m.numerator().contains(l)) {
    throw InvalidArgument("submodule ideal must sit between denominator and numerator");
  }
  return Subquotient(m.numerator(), l);
}

Subquotient truncate(const Subquotient& m, Exponent e) {
  if (e < 0) throw InvalidArgument("negative truncation degree");
  const std::size_t n = m.nvars();
  std::vector<Monomial> gens;
  for (const auto& g : m.numerator().generators()) {
    if (g.degree() >= e) {
      gens.push_back(g);
      continue;
    }
    for (const auto& t : monomials_of_degree(n, e - g.degree())) {
      gens.push_back(multiply(g, t));
    }
  }
  MonomialIdeal truncated(n, std::move(gens));
  return Subquotient(truncated + m.denominator(), m.denominator());
}

std::int64_t hilbert_function(const Subquotient& m, Exponent d) {
  if (d < 0) throw InvalidArgument("negative degree");
  if (m.is_zero()) return 0;
  std::int64_t count = 0;
  for (const auto& mono : monomials_of_degree(m.nvars(), d)) {
    if (m.numerator().contains(mono) && !m.denominator().contains(mono)) ++count;
  }
  return count;
}

Subquotient artinian_reduction(const Subquotient& q, std::size_t r) {
  const std::size_t n = q.nvars();
  if (r < 1 || r > n) {
    throw InvalidArgument("reduction index " + std::to_string(r) + " outside 1.." +
                          std::to_string(n));
  }
  if (r == n) return q;
  MonomialIdeal tail = MonomialIdeal::variable_range(n, r + 1, n);
  return Subquotient(q.numerator(), q.denominator() + product(tail, q.numerator()));
}

Exponent top_degree_s(const Subquotient& n, Exponent gen_degree_bound,
                      Exponent ceiling) {
  if (n.is_zero()) throw ZeroModule("s(N) of the zero module");
  if (ceiling <= 0) ceiling = 10 * std::max<Exponent>(gen_degree_bound, 1);
  ceiling = std::max(ceiling, gen_degree_bound);
  Exponent top = -1;
  for (Exponent d = 0; d <= ceiling; ++d) {
    if (hilbert_function(n, d) != 0) {
      top = d;
    } else if (d >= gen_degree_bound) {
      return top;
    }
  }
  throw NotArtinian("not Artinian within degree ceiling " + std::to_string(ceiling));
}

std::vector<std::int64_t> artinian_hilbert_table(const Subquotient& n,
                                                 Exponent ceiling) {
  if (n.is_zero()) return {};
  const Exponent bound = n.numerator().max_generator_degree();
  const Exponent s = top_degree_s(n, bound, ceiling);
  std::vector<std::int64_t> table;
  table.reserve(static_cast<std::size_t>(s) + 1);
  for (Exponent d = 0; d <= s; ++d) table.push_back(hilbert_function(n, d));
  return table;
}

}  // namespace borel
