#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "borel/borel_analysis.hpp"
#include "borel/filtration.hpp"
#include "borel/hochster.hpp"
#include "borel/regularity.hpp"

namespace borel {

// Process exit codes shared by `check` and `fuzz`.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitInconsistent = 2,
  kExitInputError = 3,
};

// Module file grammar:
//
//   vars: 3
//   numerator:
//   unit
//   denominator:
//   x1^2
//   x1*x2
//
// Blank lines and `#` comments are ignored. The numerator block holds `unit`
// or generator lines; an empty block is the zero ideal.
Subquotient parse_module_file(std::string_view text);
std::string format_module_file(const Subquotient& m);

struct CheckOptions {
  std::optional<Exponent> e_max;  // default: default_truncation_bound(M)
  Exponent degree_ceiling = 40;
  std::size_t oracle_guard = std::size_t{1} << 16;
  Field field = Field::rationals;
};

nlohmann::json options_json(const CheckOptions& o);

nlohmann::json to_json(const MonomialIdeal& ideal);
nlohmann::json to_json(const MonomialPrime& p);
nlohmann::json to_json(const BorelVerdict& v);
nlohmann::json to_json(const RegularityReport& r);
nlohmann::json to_json(const FiltrationVerification& v);
nlohmann::json to_json(const PrimeFiltration& f);

// Report bodies for the single-module CLI commands.
nlohmann::json analyze_report(const Subquotient& m, const CheckOptions& o);
nlohmann::json chain_report(const Subquotient& m, const CheckOptions& o);
nlohmann::json regularity_report(const Subquotient& m, const CheckOptions& o);
nlohmann::json betti_report(const Subquotient& m, const CheckOptions& o);
nlohmann::json filtration_report(const Subquotient& m, const CheckOptions& o);

// `i,total_degree,multidegree,rank` with the multidegree space-separated.
std::string betti_csv(const BettiTable& table);

struct CheckResult {
  int exit_code = kExitOk;
  nlohmann::json report;
};

// Runs every applicable cross-check. Exit 0 when all pass (or are skipped by
// a guard), 1 when a cross-check fails, 2 on an internal inconsistency.
CheckResult run_check(const Subquotient& m, const CheckOptions& o);

enum class FuzzGenerator { borel, random };

struct FuzzSpec {
  std::uint64_t seed = 1;
  std::size_t count = 1;
  FuzzGenerator generator = FuzzGenerator::borel;
  std::size_t nvars = 3;
  Exponent max_deg = 3;
  CheckOptions check;
};

using FuzzRng = std::mt19937_64;

// Strongly stable ideal: exchange closure of one to three random monomials
// with degrees in the upper half of 1..max_deg.
MonomialIdeal random_borel_fixed_ideal(FuzzRng& rng, std::size_t nvars, Exponent max_deg);
// Random monomial module I/J; may or may not be of Borel type.
Subquotient random_monomial_module(FuzzRng& rng, std::size_t nvars, Exponent max_deg);
Subquotient generate_instance(FuzzRng& rng, FuzzGenerator gen, std::size_t nvars,
                              Exponent max_deg);

struct FuzzResult {
  int exit_code = kExitOk;
  std::vector<Subquotient> corpus;
  nlohmann::json report;
};

FuzzResult run_fuzz(const FuzzSpec& spec);

}  // namespace borel
