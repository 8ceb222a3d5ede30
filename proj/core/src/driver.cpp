#include "borel/driver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "borel/errors.hpp"

namespace borel {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string field_name(Field f) { return f == Field::f2 ? "f2" : "q"; }

std::string verdict_name(const BorelVerdict& v) {
  if (v.zero_module) return "zero module";
  return v.is_borel() ? "Borel type" : "not Borel type";
}

json prime_list(const std::vector<MonomialPrime>& primes) {
  json out = json::array();
  for (const auto& p : primes) out.push_back(to_json(p));
  return out;
}

std::uint64_t draw(FuzzRng& rng, std::uint64_t bound) { return rng() % bound; }

Monomial random_monomial(FuzzRng& rng, std::size_t n, Exponent min_deg, Exponent max_deg) {
  const auto span = static_cast<std::uint64_t>(max_deg - min_deg + 1);
  const auto degree = min_deg + static_cast<Exponent>(draw(rng, span));
  std::vector<Exponent> e(n, 0);
  for (Exponent k = 0; k < degree; ++k) ++e[draw(rng, n)];
  return Monomial(std::move(e));
}

// Collects check outcomes and tracks the worst status seen.
class CheckLog {
 public:
  void pass(const std::string& name, json detail = json::object()) {
    detail["status"] = "pass";
    checks_[name] = std::move(detail);
  }
  void fail(const std::string& name, json detail = json::object()) {
    detail["status"] = "fail";
    checks_[name] = std::move(detail);
    exit_ = std::max<int>(exit_, kExitCheckFailed);
  }
  void expect(const std::string& name, bool ok, json detail = json::object()) {
    ok ? pass(name, std::move(detail)) : fail(name, std::move(detail));
  }
  void note(const std::string& name, const std::string& status) {
    checks_[name] = json{{"status", status}};
  }
  void inconsistent(const std::string& name, const std::string& what) {
    checks_[name] = json{{"status", "inconsistent"}, {"error", what}};
    exit_ = kExitInconsistent;
  }

  int exit_code() const noexcept { return exit_; }
  json& checks() noexcept { return checks_; }

 private:
  json checks_ = json::object();
  int exit_ = kExitOk;
};

void run_borel_checks(const Subquotient& m, const CheckOptions& o, CheckLog& log) {
  const std::size_t n = m.nvars();
  const int ni = static_cast<int>(n);

  SequentialChain chain = build_chain(m);
  SeqCmReport cm = seq_cm_report(chain);
  json chain_detail{{"n", json::array()}, {"d", cm.dims}};
  for (const auto& s : chain.steps) chain_detail["n"].push_back(s.index);
  log.expect("chain_invariants", cm.ok(), chain_detail);

  std::vector<MonomialIdeal> chain_ideals;
  for (const auto& s : chain.steps) chain_ideals.push_back(s.ideal);
  log.expect("chain_matches_gamma_ladder", gamma_ladder(m) == chain_ideals);
  if (m.is_cyclic()) {
    log.expect("chain_matches_ideal_chain",
               ideal_sequential_chain(m.denominator()) == chain_ideals);
    log.expect("dimension_filtration", dimension_filtration_check(m.denominator()).all_equal());
  }

  auto identities = gamma_identity_suite(m);
  log.expect("gamma_identities", identities.passed,
             json{{"checks", identities.checks}, {"counterexample", identities.counterexample}});

  RegularityReport reg = regularity_borel(m, {o.degree_ceiling});
  log.expect("regularity_report",
             reg.depth == cm.depth && reg.dim == cm.dim && reg.depth <= reg.dim &&
                 reg.depth == ni - static_cast<int>(chain.steps.front().index),
             json{{"reg", reg.reg}, {"dim", reg.dim}, {"depth", reg.depth}});

  try {
    PrimeFiltration f = build_pretty_clean(m);
    FiltrationVerification fv = verify_filtration(f);
    log.expect("pretty_clean_filtration", fv.ok(),
               json{{"steps", f.steps.size()}, {"clean", fv.clean}});
    FiltrationLengthReport len = filtration_length_check(f, chain, o.degree_ceiling);
    log.expect("filtration_length", len.ok(),
               json{{"step_counts", len.step_counts}, {"reduced_dims", len.reduced_dims}});
  } catch (const WitnessExhausted& e) {
    log.fail("pretty_clean_filtration", json{{"error", e.what()}});
  }

  if (m.is_cyclic()) {
    if (lcm_box_size(m.denominator()) > o.oracle_guard) {
      log.note("oracle_regularity", "skipped: guard");
      log.note("oracle_depth", "skipped: guard");
    } else {
      auto inv = oracle_invariants(betti_table(m.denominator(), {o.field, o.oracle_guard}));
      log.expect("oracle_regularity", inv.reg == reg.reg,
                 json{{"chain", reg.reg}, {"oracle", inv.reg}});
      log.expect("oracle_depth", inv.depth == reg.depth,
                 json{{"chain", reg.depth}, {"oracle", inv.depth}});
    }
  }
}

}  // namespace

Subquotient parse_module_file(std::string_view text) {
  enum class Block { header, numerator, denominator } block = Block::header;
  std::optional<std::size_t> nvars;
  std::vector<Monomial> num;
  std::vector<Monomial> den;
  bool num_unit = false;
  bool saw_num = false;
  bool saw_den = false;

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.starts_with("vars:")) {
      if (nvars) throw ParseError(line_no, "duplicate vars header");
      std::string digits(trim(line.substr(5)));
      std::size_t value = 0;
      try {
        std::size_t used = 0;
        value = std::stoul(digits, &used);
        if (used != digits.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError(line_no, "bad variable count '" + digits + "'");
      }
      if (value < 2) throw ParseError(line_no, "need at least 2 variables");
      nvars = value;
      continue;
    }
    if (line == "numerator:") {
      if (!nvars) throw ParseError(line_no, "numerator before vars header");
      if (saw_num) throw ParseError(line_no, "duplicate numerator block");
      block = Block::numerator;
      saw_num = true;
      continue;
    }
    if (line == "denominator:") {
      if (!nvars) throw ParseError(line_no, "denominator before vars header");
      if (saw_den) throw ParseError(line_no, "duplicate denominator block");
      block = Block::denominator;
      saw_den = true;
      continue;
    }
    if (block == Block::header) throw ParseError(line_no, "expected a block header");
    if (line == "unit") {
      if (block != Block::numerator) throw ParseError(line_no, "'unit' outside numerator");
      num_unit = true;
      continue;
    }
    try {
      (block == Block::numerator ? num : den).push_back(parse_monomial(line, *nvars));
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!nvars) throw ParseError(line_no, "missing vars header");
  if (!saw_num) throw ParseError(line_no, "missing numerator block");
  if (!saw_den) throw ParseError(line_no, "missing denominator block");
  if (num_unit) num.push_back(Monomial::unit(*nvars));
  return Subquotient(MonomialIdeal(*nvars, std::move(num)), MonomialIdeal(*nvars, std::move(den)));
}

std::string format_module_file(const Subquotient& m) {
  std::string out = "vars: " + std::to_string(m.nvars()) + "\nnumerator:\n";
  out += m.numerator().is_unit() ? "unit\n" : to_string(m.numerator());
  out += "denominator:\n";
  out += to_string(m.denominator());
  return out;
}

json options_json(const CheckOptions& o) {
  return json{{"emax", o.e_max ? json(*o.e_max) : json(nullptr)},
              {"ceiling", o.degree_ceiling},
              {"oracle_guard", o.oracle_guard},
              {"field", field_name(o.field)}};
}

json to_json(const MonomialIdeal& ideal) {
  json out = json::array();
  for (const auto& g : ideal.generators()) out.push_back(to_string(g));
  return out;
}

json to_json(const MonomialPrime& p) { return to_string(p); }

json to_json(const BorelVerdict& v) {
  json out{{"verdict", verdict_name(v)},
           {"by_saturation", v.by_saturation},
           {"by_pairwise", v.by_pairwise},
           {"by_ass", v.by_ass},
           {"associated_primes", prime_list(v.associated_primes)}};
  if (v.saturation_failure) out["saturation_failure"] = *v.saturation_failure;
  if (v.pairwise_failure) {
    out["pairwise_failure"] = {v.pairwise_failure->first, v.pairwise_failure->second};
  }
  if (v.offending_prime) out["offending_prime"] = to_json(*v.offending_prime);
  return out;
}

json to_json(const RegularityReport& r) {
  json steps = json::array();
  for (const auto& s : r.steps) {
    steps.push_back({{"n", s.index}, {"s", s.s}, {"a", s.a_invariant}, {"d", s.dim}});
  }
  return json{{"reg", r.reg}, {"dim", r.dim}, {"depth", r.depth}, {"steps", steps}};
}

json to_json(const FiltrationVerification& v) {
  json out{{"structure_ok", v.structure_ok},
           {"pretty_clean", v.pretty_clean},
           {"supp_equals_ass", v.supp_equals_ass},
           {"clean", v.clean},
           {"supp", prime_list(v.support)},
           {"ass", prime_list(v.associated)},
           {"min", prime_list(v.minimal)}};
  if (v.failing_step) {
    out["failing_step"] = *v.failing_step;
    out["failure"] = v.failure;
  }
  return out;
}

json to_json(const PrimeFiltration& f) {
  json steps = json::array();
  for (const auto& s : f.steps) {
    steps.push_back({{"generators", to_json(s.ideal)},
                     {"witness", to_string(s.witness)},
                     {"prime", to_json(s.prime)}});
  }
  return steps;
}

json analyze_report(const Subquotient& m, const CheckOptions& o) {
  BorelVerdict v = is_borel_type(m);
  json out{{"module", format_module_file(m)}, {"options", options_json(o)}, {"borel", to_json(v)}};
  if (m.is_zero()) return out;
  out["krull_dim"] = krull_dim(m);
  out["minimal_primes"] = prime_list(minimal_primes(v.associated_primes));
  out["strongly_stable"] = is_strongly_stable_module(m);
  const Exponent e_max = o.e_max.value_or(default_truncation_bound(m));
  auto e = truncation_borel_criterion(m, e_max);
  out["truncation"] = {{"emax", e_max}, {"e", e ? json(*e) : json(nullptr)}};
  if (m.is_cyclic()) {
    out["ideal_borel_type"] = ideal_is_borel_type(m.denominator());
    out["ideal_strongly_stable"] = is_strongly_stable_ideal(m.denominator());
  }
  return out;
}

json chain_report(const Subquotient& m, const CheckOptions& o) {
  SequentialChain c = build_chain(m);
  SeqCmReport cm = seq_cm_report(c);
  const auto quotients = chain_quotients(c);
  json steps = json::array();
  for (std::size_t l = 0; l < c.length(); ++l) {
    steps.push_back({{"n", c.steps[l].index},
                     {"generators", to_json(c.steps[l].ideal)},
                     {"d", cm.dims[l]},
                     {"reduced_hilbert", artinian_hilbert_table(quotients[l].reduced,
                                                                o.degree_ceiling)}});
  }
  return json{{"module", format_module_file(m)},
              {"options", options_json(o)},
              {"steps", steps},
              {"dim", cm.dim},
              {"depth", cm.depth},
              {"sequentially_cm", cm.ok()}};
}

json regularity_report(const Subquotient& m, const CheckOptions& o) {
  RegularityReport r = regularity_borel(m, {o.degree_ceiling});
  json out = to_json(r);
  out["module"] = format_module_file(m);
  out["options"] = options_json(o);
  if (m.is_cyclic()) out["ideal_reg"] = r.reg + 1;  // reg(I) = reg(S/I) + 1
  return out;
}

json betti_report(const Subquotient& m, const CheckOptions& o) {
  if (!m.is_cyclic()) throw InvalidArgument("Betti oracle handles cyclic modules S/I only");
  BettiTable t = betti_table(m.denominator(), {o.field, o.oracle_guard});
  OracleInvariants inv = oracle_invariants(t);
  json entries = json::array();
  for (const auto& [key, rank] : t.entries) {
    int degree = 0;
    for (Exponent e : key.second) degree += e;
    entries.push_back({{"i", key.first}, {"degree", degree}, {"multidegree", key.second},
                       {"rank", rank}});
  }
  return json{{"module", format_module_file(m)},
              {"options", options_json(o)},
              {"reg", inv.reg},
              {"pd", inv.pd},
              {"depth", inv.depth},
              {"entries", entries}};
}

json filtration_report(const Subquotient& m, const CheckOptions& o) {
  PrimeFiltration f = build_pretty_clean(m);
  json out = to_json(verify_filtration(f));
  out["steps"] = to_json(f);
  out["module"] = format_module_file(m);
  out["options"] = options_json(o);
  return out;
}

std::string betti_csv(const BettiTable& table) {
  std::ostringstream out;
  out << "i,total_degree,multidegree,rank\n";
  for (const auto& [key, rank] : table.entries) {
    int degree = 0;
    std::string multi;
    for (Exponent e : key.second) {
      degree += e;
      if (!multi.empty()) multi += ' ';
      multi += std::to_string(e);
    }
    out << key.first << ',' << degree << ',' << multi << ',' << rank << '\n';
  }
  return out.str();
}

CheckResult run_check(const Subquotient& m, const CheckOptions& o) {
  CheckLog log;
  json report{{"module", format_module_file(m)}, {"options", options_json(o)}};

  BorelVerdict verdict;
  try {
    verdict = is_borel_type(m);
  } catch (const InternalInconsistency& e) {
    log.inconsistent("borel_criteria", e.what());
    report["checks"] = log.checks();
    report["exit_code"] = log.exit_code();
    return {log.exit_code(), report};
  }
  report["verdict"] = verdict_name(verdict);
  report["borel"] = to_json(verdict);

  if (verdict.zero_module) {
    log.note("borel_criteria", "vacuous");
    report["checks"] = log.checks();
    report["exit_code"] = log.exit_code();
    return {log.exit_code(), report};
  }
  log.pass("borel_criteria");

  try {
    const bool borel = verdict.is_borel();
    if (m.is_cyclic()) {
      const auto& ideal = m.denominator();
      log.expect("ideal_property_star", ideal_is_borel_type(ideal) == borel);
      log.expect("strongly_stable_ideal_vs_module",
                 is_strongly_stable_ideal(ideal) == is_strongly_stable_module(m));
      log.expect("ass_cyclic_vs_witness",
                 associated_primes_cyclic(ideal) == verdict.associated_primes);
    }
    log.expect("strongly_stable_implies_borel", !is_strongly_stable_module(m) || borel);

    const Exponent e_max = o.e_max.value_or(default_truncation_bound(m));
    auto e = truncation_borel_criterion(m, e_max);
    log.pass("truncation_criterion",
             json{{"emax", e_max}, {"e", e ? json(*e) : json(nullptr)}});

    if (borel) {
      run_borel_checks(m, o, log);
    } else {
      for (const char* name : {"chain_invariants", "regularity_report", "pretty_clean_filtration"}) {
        log.note(name, "inapplicable");
      }
    }
  } catch (const InternalInconsistency& e) {
    log.inconsistent("internal", e.what());
  } catch (const Error& e) {
    log.fail("error", json{{"error", e.what()}});
  }

  report["checks"] = log.checks();
  report["exit_code"] = log.exit_code();
  return {log.exit_code(), report};
}

MonomialIdeal random_borel_fixed_ideal(FuzzRng& rng, std::size_t nvars, Exponent max_deg) {
  const std::size_t seeds = 1 + draw(rng, 3);
  std::set<Monomial> closure;
  std::vector<Monomial> frontier;
  for (std::size_t k = 0; k < seeds; ++k) {
    Monomial m = random_monomial(rng, nvars, std::max<Exponent>(1, (max_deg + 1) / 2), max_deg);
    if (closure.insert(m).second) frontier.push_back(std::move(m));
  }
  while (!frontier.empty()) {
    Monomial u = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t i = 2; i <= nvars; ++i) {
      if (u[i - 1] == 0) continue;
      Monomial lowered = divide(u, Monomial::variable(nvars, i));
      for (std::size_t j = 1; j < i; ++j) {
        Monomial moved = multiply(lowered, Monomial::variable(nvars, j));
        if (closure.insert(moved).second) frontier.push_back(std::move(moved));
      }
    }
  }
  return MonomialIdeal(nvars, {closure.begin(), closure.end()});
}

Subquotient random_monomial_module(FuzzRng& rng, std::size_t nvars, Exponent max_deg) {
  MonomialIdeal den;
  if (draw(rng, 4) == 0) {
    den = random_borel_fixed_ideal(rng, nvars, max_deg);
  } else {
    std::vector<Monomial> gens;
    const std::size_t k = 1 + draw(rng, 3);
    for (std::size_t i = 0; i < k; ++i) gens.push_back(random_monomial(rng, nvars, 1, max_deg));
    den = MonomialIdeal(nvars, std::move(gens));
  }
  if (draw(rng, 3) == 0) return Subquotient::cyclic(std::move(den));
  std::vector<Monomial> extra;
  const std::size_t k = 1 + draw(rng, 2);
  for (std::size_t i = 0; i < k; ++i) extra.push_back(random_monomial(rng, nvars, 0, max_deg));
  MonomialIdeal num = den + MonomialIdeal(nvars, std::move(extra));
  return Subquotient(std::move(num), std::move(den));
}

Subquotient generate_instance(FuzzRng& rng, FuzzGenerator gen, std::size_t nvars,
                              Exponent max_deg) {
  if (nvars < 2) throw InvalidArgument("fuzzing needs at least 2 variables");
  if (max_deg < 1) throw InvalidArgument("fuzzing needs max degree >= 1");
  if (gen == FuzzGenerator::borel) {
    return Subquotient::cyclic(random_borel_fixed_ideal(rng, nvars, max_deg));
  }
  return random_monomial_module(rng, nvars, max_deg);
}

FuzzResult run_fuzz(const FuzzSpec& spec) {
  FuzzRng rng(spec.seed);
  FuzzResult result;
  json instances = json::array();
  std::size_t passed = 0, failed = 0, inconsistent = 0, borel = 0;
  for (std::size_t k = 0; k < spec.count; ++k) {
    Subquotient m = generate_instance(rng, spec.generator, spec.nvars, spec.max_deg);
    CheckResult check = run_check(m, spec.check);
    if (check.report.value("verdict", "") == "Borel type") ++borel;
    switch (check.exit_code) {
      case kExitOk: ++passed; break;
      case kExitInconsistent: ++inconsistent; break;
      default: ++failed; break;
    }
    result.exit_code = std::max(result.exit_code, check.exit_code);
    check.report["index"] = k;
    instances.push_back(std::move(check.report));
    result.corpus.push_back(std::move(m));
  }
  result.report = json{
      {"spec",
       {{"seed", spec.seed},
        {"count", spec.count},
        {"gen", spec.generator == FuzzGenerator::borel ? "borel" : "random"},
        {"vars", spec.nvars},
        {"maxdeg", spec.max_deg},
        {"options", options_json(spec.check)}}},
      {"summary",
       {{"passed", passed}, {"failed", failed}, {"inconsistent", inconsistent}, {"borel", borel}}},
      {"instances", instances},
      {"exit_code", result.exit_code}};
  return result;
}

}  // namespace borel
