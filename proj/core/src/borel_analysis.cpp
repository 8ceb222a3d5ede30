#include "borel/borel_analysis.hpp"

#include <set>

#include "borel/errors.hpp"

namespace borel {

namespace {

std::vector<MonomialIdeal> gammas_of_variables(const Subquotient& m) {
  const std::size_t n = m.nvars();
  std::vector<MonomialIdeal> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(gamma(m, Monomial::variable(n, i)));
  return out;
}

}  // namespace

BorelVerdict is_borel_type(const Subquotient& m) {
  BorelVerdict v;
  if (m.is_zero()) {
    v.zero_module = true;
    return v;
  }
  const std::size_t n = m.nvars();
  const auto single = gammas_of_variables(m);

  for (std::size_t i = 1; i <= n && v.by_saturation; ++i) {
    auto segment = gamma(m, MonomialIdeal::variable_range(n, 1, i));
    if (segment != single[i - 1]) {
      v.by_saturation = false;
      v.saturation_failure = i;
    }
  }

  for (std::size_t i = 2; i <= n && v.by_pairwise; ++i) {
    for (std::size_t j = 1; j < i; ++j) {
      if (!single[j - 1].contains(single[i - 1])) {
        v.by_pairwise = false;
        v.pairwise_failure = std::make_pair(j, i);
        break;
      }
    }
  }

  v.associated_primes = associated_primes_subquotient(m);
  for (const auto& p : v.associated_primes) {
    if (!p.is_initial_segment()) {
      v.by_ass = false;
      v.offending_prime = p;
      break;
    }
  }

  if (v.by_saturation != v.by_pairwise || v.by_saturation != v.by_ass) {
    throw InternalInconsistency("Borel criteria disagree: saturation=" +
                                std::to_string(v.by_saturation) +
                                " pairwise=" + std::to_string(v.by_pairwise) +
                                " ass=" + std::to_string(v.by_ass));
  }
  return v;
}

bool ideal_is_borel_type(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) {
    throw InvalidArgument("Borel-type test needs a proper nonzero ideal");
  }
  const std::size_t n = ideal.nvars();
  for (std::size_t j = 1; j <= n; ++j) {
    auto by_variable = saturate(ideal, MonomialIdeal::principal(Monomial::variable(n, j)));
    auto by_segment = saturate(ideal, MonomialIdeal::variable_range(n, 1, j));
    if (by_variable != by_segment) return false;
  }
  return true;
}

bool is_strongly_stable_module(const Subquotient& m) {
  if (m.is_zero()) return true;
  const std::size_t n = m.nvars();
  std::vector<MonomialIdeal> annihilated;
  annihilated.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    annihilated.push_back(
        intersect(colon(m.denominator(), Monomial::variable(n, i)), m.numerator()));
  }
  for (std::size_t i = 2; i <= n; ++i) {
    for (std::size_t j = 1; j < i; ++j) {
      if (!annihilated[j - 1].contains(annihilated[i - 1])) return false;
    }
  }
  return true;
}

bool is_strongly_stable_ideal(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) {
    throw InvalidArgument("strong stability test needs a proper nonzero ideal");
  }
  const std::size_t n = ideal.nvars();
  for (const auto& u : ideal.generators()) {
    for (std::size_t i = 1; i <= n; ++i) {
      if (u[i - 1] == 0) continue;
      Monomial lowered = divide(u, Monomial::variable(n, i));
      for (std::size_t j = 1; j < i; ++j) {
        if (!ideal.contains(multiply(lowered, Monomial::variable(n, j)))) return false;
      }
    }
  }
  return true;
}

Exponent default_truncation_bound(const Subquotient& m) {
  return m.numerator().max_generator_degree() + static_cast<Exponent>(m.nvars());
}

std::optional<Exponent> truncation_borel_criterion(const Subquotient& m, Exponent e_max) {
  if (m.is_zero()) return 0;
  for (Exponent e = 0; e <= e_max; ++e) {
    if (!is_strongly_stable_module(truncate(m, e))) continue;
    if (!is_borel_type(m).is_borel()) {
      throw InternalInconsistency("truncation at degree " + std::to_string(e) +
                                  " is strongly stable but the module is not Borel type");
    }
    return e;
  }
  return std::nullopt;
}

GammaIdentityReport gamma_identity_suite(const Subquotient& m) {
  if (!is_borel_type(m).is_borel()) {
    throw NotBorelType("Gamma identities require a Borel-type module");
  }
  GammaIdentityReport report;
  if (m.is_zero()) return report;
  const std::size_t n = m.nvars();
  const auto single = gammas_of_variables(m);

  for (std::size_t j = 1; j <= n; ++j) {
    std::vector<Exponent> e(n, 0);
    for (std::size_t p = 0; j + p <= n; ++p) {
      e[j + p - 1] = 1;
      ++report.checks;
      Monomial block(e);
      if (gamma(m, block) != single[j - 1]) {
        report.passed = false;
        report.counterexample = "j=" + std::to_string(j) + " p=" + std::to_string(p);
        return report;
      }
    }
  }

  std::set<Monomial> sample;
  for (Exponent d = 1; d <= 2; ++d) {
    for (auto& u : monomials_of_degree(n, d)) sample.insert(std::move(u));
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Exponent> e(n, 0);
    for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<Exponent>((mask >> i) & 1U);
    sample.emplace(std::move(e));
  }
  for (const auto& u : sample) {
    ++report.checks;
    auto [radical, w] = radical_and_min_support(u);
    (void)radical;
    if (gamma(m, u) != single[w - 1]) {
      report.passed = false;
      report.counterexample = "u=" + to_string(u);
      return report;
    }
  }
  return report;
}

}  // namespace borel
