#include "borel/regularity.hpp"

#include <algorithm>

#include "borel/borel_analysis.hpp"
#include "borel/errors.hpp"

namespace borel {

RegularityReport regularity_borel(const Subquotient& m, const RegularityOptions& opts) {
  if (m.is_zero()) throw ZeroModule("regularity of the zero module is undefined");
  if (!is_borel_type(m).is_borel()) throw NotBorelType("module is not of Borel type");

  RegularityReport report{0, {}, -1, -1, build_chain(m)};
  const int n = static_cast<int>(m.nvars());
  const auto quotients = chain_quotients(report.chain);
  for (std::size_t l = 0; l < quotients.size(); ++l) {
    const auto& reduced = quotients[l].reduced;
    const Exponent s = top_degree_s(reduced, reduced.numerator().max_generator_degree(),
                                    opts.degree_ceiling);
    const std::size_t index = report.chain.steps[l].index;
    const int dim = n - static_cast<int>(index);
    report.steps.push_back({index, dim, s, s - dim});
    report.reg = l == 0 ? s : std::max(report.reg, static_cast<int>(s));
  }
  report.depth = report.steps.front().dim;
  report.dim = report.steps.back().dim;
  return report;
}

Lemma22Report lemma22_consistency(const Subquotient& m, const RegularityOptions& opts,
                                  const OracleOptions& oracle) {
  if (!m.is_cyclic()) throw InvalidArgument("oracle comparison needs a cyclic module S/I");
  Lemma22Report report;
  report.chain_reg = regularity_borel(m, opts).reg;
  report.oracle_reg = oracle_invariants(betti_table(m.denominator(), oracle)).reg;
  return report;
}

}  // namespace borel
