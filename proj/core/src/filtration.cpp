#include "borel/filtration.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "borel/borel_analysis.hpp"
#include "borel/errors.hpp"

namespace borel {

namespace {

std::vector<Monomial> box_candidates(const MonomialIdeal& target, const MonomialIdeal& current) {
  std::vector<Exponent> box = target.exponent_bounds();
  const auto other = current.exponent_bounds();
  for (std::size_t i = 0; i < box.size(); ++i) box[i] = std::max(box[i], other[i]);
  std::vector<Monomial> out;
  std::vector<Exponent> e(box.size(), 0);
  for (;;) {
    Monomial m(e);
    if (target.contains(m) && !current.contains(m)) out.push_back(std::move(m));
    std::size_t i = 0;
    while (i < e.size() && e[i] == box[i]) e[i++] = 0;
    if (i == e.size()) break;
    ++e[i];
  }
  return out;
}

}  // namespace

const MonomialIdeal& PrimeFiltration::ideal(std::size_t k) const {
  if (k == 0) return base.denominator();
  if (k > steps.size()) throw InvalidArgument("filtration index out of range");
  return steps[k - 1].ideal;
}

PrimeFiltration build_pretty_clean(const Subquotient& m, const FiltrationOptions& opts) {
  if (m.is_zero()) throw ZeroModule("filtration of the zero module");
  if (!is_borel_type(m).is_borel()) throw NotBorelType("module is not of Borel type");
  const std::size_t n = m.nvars();
  const SequentialChain chain = build_chain(m);

  std::optional<std::mt19937_64> rng;
  if (opts.shuffle_seed) rng.emplace(*opts.shuffle_seed);

  PrimeFiltration f{m, {}};
  MonomialIdeal current = m.denominator();
  for (const auto& step : chain.steps) {
    const MonomialPrime prime = MonomialPrime::initial_segment(n, step.index);
    const MonomialIdeal prime_ideal = prime.ideal();
    while (current != step.ideal) {
      auto candidates = box_candidates(step.ideal, current);
      std::stable_sort(candidates.begin(), candidates.end(),
                       [](const Monomial& a, const Monomial& b) {
                         if (a.degree() != b.degree()) return a.degree() < b.degree();
                         return a < b;
                       });
      if (rng) {
        auto first = candidates.begin();
        while (first != candidates.end()) {
          auto last = std::find_if(first, candidates.end(), [&](const Monomial& c) {
            return c.degree() != first->degree();
          });
          std::shuffle(first, last, *rng);
          first = last;
        }
      }
      auto witness = std::find_if(candidates.begin(), candidates.end(), [&](const Monomial& c) {
        return colon(current, c) == prime_ideal;
      });
      if (witness == candidates.end()) {
        throw WitnessExhausted("no witness for prime (" + to_string(prime) + ") after " +
                               std::to_string(f.steps.size()) + " steps");
      }
      current = current + MonomialIdeal::principal(*witness);
      f.steps.push_back({current, *witness, prime});
    }
  }
  return f;
}

FiltrationVerification verify_filtration(const PrimeFiltration& f) {
  FiltrationVerification v;
  const auto fail = [&](std::size_t step, std::string why) {
    if (!v.structure_ok) return;
    v.structure_ok = false;
    v.failing_step = step;
    v.failure = std::move(why);
  };

  for (std::size_t k = 1; k <= f.steps.size(); ++k) {
    const auto& step = f.steps[k - 1];
    const MonomialIdeal& before = f.ideal(k - 1);
    if (!f.base.numerator().contains(step.witness)) {
      fail(k, "witness outside the numerator");
    } else if (before.contains(step.witness)) {
      fail(k, "witness already in the previous ideal");
    } else if (step.ideal != before + MonomialIdeal::principal(step.witness)) {
      fail(k, "ideal is not the previous ideal plus the witness");
    } else if (colon(before, step.witness) != step.prime.ideal()) {
      fail(k, "colon of the previous ideal by the witness is not the stated prime");
    }
  }
  if (f.ideal(f.steps.size()) != f.base.numerator()) {
    fail(f.steps.size(), "filtration does not end at the numerator");
  }

  v.pretty_clean = true;
  for (std::size_t i = 0; i < f.steps.size() && v.pretty_clean; ++i) {
    for (std::size_t j = i + 1; j < f.steps.size(); ++j) {
      const auto& pi = f.steps[i].prime;
      const auto& pj = f.steps[j].prime;
      if (pi != pj && pi.is_subset_of(pj)) {
        v.pretty_clean = false;
        break;
      }
    }
  }

  std::set<MonomialPrime> support;
  for (const auto& step : f.steps) support.insert(step.prime);
  v.support.assign(support.begin(), support.end());
  if (!f.base.is_zero()) v.associated = associated_primes_subquotient(f.base);
  v.minimal = minimal_primes(v.associated);
  v.supp_equals_ass = v.support == v.associated;
  v.clean = v.support == v.minimal;
  return v;
}

FiltrationLengthReport filtration_length_check(const PrimeFiltration& f,
                                               const SequentialChain& c,
                                               Exponent degree_ceiling) {
  FiltrationLengthReport report;
  const std::size_t n = c.base.nvars();
  const auto quotients = chain_quotients(c);
  for (std::size_t l = 0; l < c.length(); ++l) {
    const auto prime = MonomialPrime::initial_segment(n, c.steps[l].index);
    report.step_counts.push_back(std::count_if(
        f.steps.begin(), f.steps.end(), [&](const FiltrationStep& s) { return s.prime == prime; }));
    const auto table = artinian_hilbert_table(quotients[l].reduced, degree_ceiling);
    report.reduced_dims.push_back(std::accumulate(table.begin(), table.end(), std::int64_t{0}));
  }
  return report;
}

}  // namespace borel
