#include "borel/sequential_chain.hpp"

#include <algorithm>

#include "borel/borel_analysis.hpp"
#include "borel/decomposition.hpp"
#include "borel/errors.hpp"

namespace borel {

const MonomialIdeal& SequentialChain::ideal(std::size_t l) const {
  if (l == 0) return base.denominator();
  if (l > steps.size()) throw InvalidArgument("chain index out of range");
  return steps[l - 1].ideal;
}

SequentialChain build_chain(const Subquotient& m) {
  if (m.is_zero()) throw ZeroModule("sequential chain of the zero module");
  const std::size_t n = m.nvars();
  if (gamma(m, Monomial::variable(n, 1)) != m.numerator()) {
    throw NotBorelType("Gamma_(x1)(M) != M: sequential chain undefined");
  }

  SequentialChain chain{m, {}};
  MonomialIdeal previous = m.denominator();
  std::size_t previous_index = n + 1;
  while (previous != m.numerator()) {
    Subquotient rest = quotient_by_submodule(m, previous);
    std::size_t index = 0;
    for (std::size_t j = n; j >= 1; --j) {
      if (gamma(rest, Monomial::variable(n, j)) != previous) {
        index = j;
        break;
      }
    }
    if (index == 0) throw InternalInconsistency("no torsion index although M/M_{l-1} != 0");
    MonomialIdeal next = gamma(m, Monomial::variable(n, index));
    if (!next.contains(previous) || next == previous || index >= previous_index) {
      throw NotBorelType("module not Borel type: chain undefined at step " +
                         std::to_string(chain.steps.size() + 1));
    }
    chain.steps.push_back({index, next});
    previous = std::move(next);
    previous_index = index;
  }
  return chain;
}

std::vector<ChainQuotient> chain_quotients(const SequentialChain& c) {
  std::vector<ChainQuotient> out;
  out.reserve(c.length());
  for (std::size_t l = 1; l <= c.length(); ++l) {
    Subquotient q(c.ideal(l), c.ideal(l - 1));
    Subquotient reduced = artinian_reduction(q, c.steps[l - 1].index);
    out.push_back({std::move(q), std::move(reduced)});
  }
  return out;
}

bool check_regular_sequence(const SequentialChain& c, std::size_t l) {
  if (l < 1 || l > c.length()) throw InvalidArgument("chain step out of range");
  const std::size_t n = c.base.nvars();
  const std::size_t start = c.steps[l - 1].index;
  const MonomialIdeal& top = c.ideal(l);
  MonomialIdeal bottom = c.ideal(l - 1);
  for (std::size_t v = start + 1; v <= n; ++v) {
    const Monomial x = Monomial::variable(n, v);
    MonomialIdeal killed = intersect(colon(bottom, x), top);
    if (!bottom.contains(killed)) return false;
    bottom = bottom + product(MonomialIdeal::principal(x), top);
  }
  return true;
}

bool DimensionFiltrationReport::all_equal() const {
  return std::all_of(equal.begin(), equal.end(), [](bool b) { return b; });
}

DimensionFiltrationReport dimension_filtration_check(const MonomialIdeal& j) {
  Subquotient m = Subquotient::cyclic(j);
  if (!is_borel_type(m).is_borel()) throw NotBorelType("S/J is not of Borel type");
  const std::size_t n = j.nvars();
  const int dim = krull_dim(m);
  DimensionFiltrationReport report;
  for (std::size_t i = 1; i <= n; ++i) {
    const int level = static_cast<int>(n - i);
    // Past dim M the largest submodule of dimension <= level is M itself.
    MonomialIdeal schenzel = level > dim ? MonomialIdeal::unit(n)
                                         : schenzel_dimension_filtration(j, level);
    report.equal.push_back(schenzel == gamma(m, Monomial::variable(n, i)));
  }
  return report;
}

SeqCmReport seq_cm_report(const SequentialChain& c) {
  SeqCmReport report;
  const int n = static_cast<int>(c.base.nvars());
  const auto quotients = chain_quotients(c);
  for (std::size_t l = 0; l < quotients.size(); ++l) {
    const int d = krull_dim(quotients[l].quotient);
    report.dims.push_back(d);
    if (d != n - static_cast<int>(c.steps[l].index)) report.dims_match_indices = false;
    if (l > 0 && d <= report.dims[l - 1]) report.strictly_increasing = false;
    if (!check_regular_sequence(c, l + 1)) report.regular_sequences = false;
  }
  if (!report.dims.empty()) {
    report.depth = report.dims.front();
    report.dim = report.dims.back();
  }
  return report;
}

std::vector<MonomialIdeal> gamma_ladder(const Subquotient& m) {
  const std::size_t n = m.nvars();
  std::vector<MonomialIdeal> out;
  for (std::size_t j = n; j >= 1; --j) {
    MonomialIdeal g = gamma(m, Monomial::variable(n, j));
    if (g == m.denominator()) continue;
    if (!out.empty() && out.back() == g) continue;
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<MonomialIdeal> ideal_sequential_chain(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.nvars();
  std::vector<MonomialIdeal> out;
  MonomialIdeal current = ideal;
  while (!current.is_unit()) {
    bool grew = false;
    for (std::size_t j = n; j >= 1; --j) {
      MonomialIdeal next = saturate(current, MonomialIdeal::principal(Monomial::variable(n, j)));
      if (next != current) {
        out.push_back(next);
        current = std::move(next);
        grew = true;
        break;
      }
    }
    // Every variable regular on S/current: the chain stops short of S.
    if (!grew) break;
  }
  return out;
}

}  // namespace borel
