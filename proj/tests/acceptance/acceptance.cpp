// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "borel/driver.hpp"
#include "borel/errors.hpp"
#include "support/oracles.hpp"

namespace {

using namespace borel;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Corpus {
  std::vector<MonomialIdeal> fixed;     // Borel-fixed ideals, n in {2,3,4}
  std::vector<Subquotient> mixed;       // random modules, Borel or not
  std::vector<Subquotient> borel;       // every nonzero Borel-type module above
};

Corpus build_corpus() {
  Corpus c;
  for (std::size_t n = 2; n <= 4; ++n) {
    FuzzRng rng(1000 + n);
    for (int k = 0; k < 70; ++k) c.fixed.push_back(random_borel_fixed_ideal(rng, n, 4));
  }
  FuzzRng rng(2024);
  for (int k = 0; k < 600; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 3);
    c.mixed.push_back(random_monomial_module(rng, n, 3));
  }
  for (const auto& i : c.fixed) c.borel.push_back(Subquotient::cyclic(i));
  for (const auto& m : c.mixed) {
    if (m.is_zero()) continue;
    try {
      if (is_borel_type(m).is_borel()) c.borel.push_back(m);
    } catch (const InternalInconsistency&) {
      // criterion 2 reports it
    }
  }
  return c;
}

std::string show(const Subquotient& m) {
  std::string s = format_module_file(m);
  for (auto& ch : s) {
    if (ch == '\n') ch = ' ';
  }
  return s;
}

Outcome regularity_vs_oracle(const Corpus& c) {
  std::size_t agree = 0;
  for (const auto& i : c.fixed) {
    auto m = Subquotient::cyclic(i);
    int chain = regularity_borel(m).reg;
    int oracle = oracle_invariants(betti_table(i)).reg;
    if (chain != oracle) {
      return {false, "reg " + std::to_string(chain) + " vs oracle " + std::to_string(oracle) +
                         " on " + show(m)};
    }
    ++agree;
  }
  return {agree >= 200, std::to_string(agree) + " Borel-fixed ideals agree"};
}

Outcome criteria_agree(const Corpus& c) {
  std::size_t borel = 0;
  for (const auto& m : c.mixed) {
    try {
      if (is_borel_type(m).is_borel()) ++borel;
    } catch (const InternalInconsistency& e) {
      return {false, std::string(e.what()) + " on " + show(m)};
    }
  }
  std::ostringstream out;
  out << c.mixed.size() << " modules, " << borel << " Borel type, " << c.mixed.size() - borel
      << " not";
  return {c.mixed.size() >= 500 && borel > 0 && borel < c.mixed.size(), out.str()};
}

// Tallies violations separately for S/J and for proper subquotients I/J.
struct Tally {
  std::size_t cyclic = 0, cyclic_bad = 0, other = 0, other_bad = 0;
  std::string first;

  void add(const Subquotient& m, const std::string& problem) {
    (m.is_cyclic() ? cyclic : other) += 1;
    if (problem.empty()) return;
    (m.is_cyclic() ? cyclic_bad : other_bad) += 1;
    if (first.empty()) first = problem + " on " + show(m);
  }

  Outcome outcome(const std::string& what) const {
    std::ostringstream out;
    out << what << ": cyclic " << cyclic - cyclic_bad << "/" << cyclic << ", subquotients "
        << other - other_bad << "/" << other;
    if (!first.empty()) out << "; first violation: " << first;
    return {cyclic_bad + other_bad == 0, out.str()};
  }
};

std::string chain_problem(const Subquotient& m) {
  auto chain = build_chain(m);
  for (std::size_t l = 1; l <= chain.length(); ++l) {
    if (!chain.ideal(l).contains(chain.ideal(l - 1)) || chain.ideal(l) == chain.ideal(l - 1)) {
      return "L not strictly increasing";
    }
    if (l > 1 && chain.steps[l - 1].index >= chain.steps[l - 2].index) {
      return "n not strictly decreasing";
    }
  }
  auto r = seq_cm_report(chain);
  if (!r.dims_match_indices) return "d != n - n_l";
  if (!r.strictly_increasing) return "d not increasing";
  if (!r.regular_sequences) return "regular sequence failed";
  return {};
}

Outcome chain_invariants(const Corpus& c) {
  Tally t;
  for (const auto& m : c.borel) t.add(m, chain_problem(m));
  return t.outcome("Borel-type modules passing");
}

Outcome dimension_filtration(const Corpus& c) {
  std::size_t cases = 0;
  for (const auto& m : c.borel) {
    if (!m.is_cyclic()) continue;
    auto r = dimension_filtration_check(m.denominator());
    if (!r.all_equal()) return {false, "mismatch on " + show(m)};
    ++cases;
  }
  return {cases >= 100, std::to_string(cases) + " cyclic modules"};
}

std::string filtration_problem(const Subquotient& m) {
  std::optional<PrimeFiltration> built;
  try {
    built = build_pretty_clean(m);
  } catch (const WitnessExhausted& e) {
    return e.what();
  }
  auto v = verify_filtration(*built);
  if (!v.ok()) return "verification failed (" + v.failure + ")";
  if (!filtration_length_check(*built, build_chain(m)).ok()) return "length mismatch";
  return {};
}

Outcome pretty_clean(const Corpus& c) {
  Tally t;
  for (const auto& m : c.borel) t.add(m, filtration_problem(m));
  return t.outcome("filtrations built and verified");
}

Outcome depth_vs_oracle(const Corpus& c) {
  std::size_t cases = 0;
  for (const auto& m : c.borel) {
    if (!m.is_cyclic()) continue;
    auto chain = build_chain(m);
    int depth = static_cast<int>(m.nvars() - chain.steps.front().index);
    int oracle = oracle_invariants(betti_table(m.denominator())).depth;
    if (depth != oracle) return {false, "depth mismatch on " + show(m)};
    ++cases;
  }
  return {cases > 0, std::to_string(cases) + " cyclic modules"};
}

Outcome golden() {
  using testing::ideal;
  std::vector<std::string> bad;
  auto expect = [&](bool ok, const char* what) {
    if (!ok) bad.emplace_back(what);
  };
  auto m = Subquotient::cyclic(ideal(2, {"x1^2", "x1*x2"}));
  auto r = regularity_borel(m);
  expect(r.reg == 1, "reg S/(x1^2,x1x2)");
  expect(r.dim == 1, "dim S/(x1^2,x1x2)");
  expect(r.depth == 0, "depth S/(x1^2,x1x2)");
  auto chain = build_chain(m);
  expect(chain.length() == 2 && chain.steps[0].index == 2 && chain.steps[0].ideal == ideal(2, {"x1"}) &&
             chain.steps[1].index == 1 && chain.steps[1].ideal.is_unit(),
         "chain S/(x1^2,x1x2)");
  auto f = build_pretty_clean(m);
  expect(f.steps.size() == 2 && f.steps[0].prime == MonomialPrime(2, {1, 2}) &&
             f.steps[1].prime == MonomialPrime(2, {1}),
         "filtration primes S/(x1^2,x1x2)");
  expect(regularity_borel(Subquotient::cyclic(ideal(2, {"x1"}))).reg == 0, "reg S/(x1)");
  expect(regularity_borel(Subquotient::cyclic(ideal(2, {"x1", "x2"}))).reg == 0, "reg S/(x1,x2)");
  auto v = is_borel_type(Subquotient::cyclic(ideal(2, {"x2"})));
  expect(!v.is_borel() && v.pairwise_failure == std::make_pair(std::size_t{1}, std::size_t{2}),
         "S/(x2) not Borel with pair (1,2)");
  if (bad.empty()) return {true, "all golden values match"};
  std::string detail = "mismatch:";
  for (const auto& b : bad) detail += " [" + b + "]";
  return {false, detail};
}

Outcome property_suites(const Corpus& c) {
  std::size_t checks = 0;
  for (const auto& m : c.mixed) {
    if (m.is_zero()) continue;
    const bool borel = is_borel_type(m).is_borel();
    const auto& i = m.numerator();
    const auto& j = m.denominator();

    // Submodule heredity and two-out-of-three for N = (J + (g))/J.
    auto l = j + MonomialIdeal::principal(i.generators().front());
    bool sub = is_borel_type(Subquotient(l, j)).is_borel();
    bool top = is_borel_type(Subquotient(i, l)).is_borel();
    if (borel && !sub) return {false, "submodule heredity on " + show(m)};
    if (sub && top && !borel) return {false, "two-out-of-three on " + show(m)};

    bool jb = ideal_is_borel_type(j);
    if (jb && !borel) return {false, "J Borel but I/J not on " + show(m)};
    if (!i.is_unit() && borel && ideal_is_borel_type(i) && !jb) {
      return {false, "I and I/J Borel but J not on " + show(m)};
    }

    auto e = truncation_borel_criterion(m, default_truncation_bound(m));
    if (e && !borel) return {false, "truncation implication on " + show(m)};
    if (borel) {
      auto g = gamma_identity_suite(m);
      if (!g.passed) return {false, "gamma identity " + g.counterexample + " on " + show(m)};
      checks += g.checks;
    }
    checks += 5;
  }
  return {true, std::to_string(checks) + " checks over " + std::to_string(c.mixed.size()) + " modules"};
}

Outcome determinism() {
  for (auto gen : {FuzzGenerator::borel, FuzzGenerator::random}) {
    FuzzSpec spec;
    spec.seed = 4242;
    spec.count = 30;
    spec.generator = gen;
    spec.nvars = 3;
    spec.max_deg = 3;
    auto a = run_fuzz(spec).report.dump(2);
    auto b = run_fuzz(spec).report.dump(2);
    if (a != b) return {false, "fuzz JSON differs between runs"};
  }
  auto m = Subquotient::cyclic(testing::ideal(3, {"x1^2", "x1*x2", "x2^3"}));
  if (run_check(m, {}).report.dump(2) != run_check(m, {}).report.dump(2)) {
    return {false, "check JSON differs between runs"};
  }
  return {true, "identical JSON across repeated runs"};
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const Corpus corpus = build_corpus();

  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "regularity via chain equals oracle", [&] { return regularity_vs_oracle(corpus); }},
      {2, "three Borel criteria agree", [&] { return criteria_agree(corpus); }},
      {3, "sequential chain invariants", [&] { return chain_invariants(corpus); }},
      {4, "dimension filtration equals gamma ladder", [&] { return dimension_filtration(corpus); }},
      {5, "pretty clean filtration", [&] { return pretty_clean(corpus); }},
      {6, "depth equals oracle depth", [&] { return depth_vs_oracle(corpus); }},
      {7, "golden examples", [] { return golden(); }},
      {8, "property suites on fuzz corpus", [&] { return property_suites(corpus); }},
      {9, "deterministic JSON", [] { return determinism(); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("criterion %d [PRIMARY] %s: %s (%s)\n", c.id, o.pass ? "PASS" : "FAIL", c.name,
                o.detail.c_str());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%zu/%zu criteria passed in %.1f s\n", criteria.size() - failed, criteria.size(), secs);
  return failed == 0 ? 0 : 1;
}
