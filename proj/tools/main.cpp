// borel: command-line front end for the Borel-type module toolkit.
//
//   borel analyze <file>       Borel verdict, Ass, strong stability, truncation
//   borel chain <file>         sequential chain with reduced Hilbert tables
//   borel reg <file>           regularity from the sequential chain
//   borel betti <file>         Betti table of S/I from the simplicial oracle
//   borel filtration <file>    pretty clean prime filtration and its verdicts
//   borel check <file>         every cross-check; exit code per contract
//   borel fuzz --seed S --count N --gen {borel|random} --vars n --maxdeg d

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "borel/driver.hpp"
#include "borel/errors.hpp"

namespace {

using borel::CheckOptions;
using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw borel::InvalidArgument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const json& report, const std::string& json_path) {
  const std::string text = report.dump(2) + "\n";
  std::cout << text;
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw borel::InvalidArgument("cannot write " + json_path);
    out << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Borel-type monomial modules: chains, regularity, filtrations"};
  app.require_subcommand(1);

  CheckOptions opts;
  std::optional<borel::Exponent> emax;
  std::string field = "q";
  std::string json_path;
  app.add_option("--emax", emax, "Largest truncation degree scanned")->check(CLI::NonNegativeNumber);
  app.add_option("--ceiling", opts.degree_ceiling, "Degree ceiling for Artinian scans")
      ->check(CLI::PositiveNumber);
  app.add_option("--oracle-guard", opts.oracle_guard, "Largest lcm box for the Betti oracle");
  app.add_option("--field", field, "Oracle coefficient field")->check(CLI::IsMember({"q", "f2"}));
  app.add_option("--json", json_path, "Also write the JSON report to this file");

  std::string input;
  std::string csv_path;
  using Command = std::function<json(const borel::Subquotient&, const CheckOptions&)>;
  const std::map<std::string, Command> module_commands = {
      {"analyze", borel::analyze_report},       {"chain", borel::chain_report},
      {"reg", borel::regularity_report},        {"betti", borel::betti_report},
      {"filtration", borel::filtration_report}, {"check", nullptr},
  };
  const std::map<std::string, std::string> blurbs = {
      {"analyze", "Borel verdict and associated primes"},
      {"chain", "Sequential chain and sequentially CM report"},
      {"reg", "Regularity via the sequential chain"},
      {"betti", "Multigraded Betti table of the denominator"},
      {"filtration", "Pretty clean filtration and its verification"},
      {"check", "Run every consistency check"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, _] : module_commands) {
    auto* sub = app.add_subcommand(name, blurbs.at(name));
    sub->add_option("file", input, "Module file")->required();
    subs[name] = sub;
  }
  subs["betti"]->add_option("--csv", csv_path, "Write the Betti table as CSV");

  borel::FuzzSpec fuzz;
  std::string gen = "borel";
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Seeded cross-validation corpus");
  fuzz_cmd->add_option("--seed", fuzz.seed, "RNG seed");
  fuzz_cmd->add_option("--count", fuzz.count, "Number of instances");
  fuzz_cmd->add_option("--gen", gen, "Instance generator")->check(CLI::IsMember({"borel", "random"}));
  fuzz_cmd->add_option("--vars", fuzz.nvars, "Number of variables")->check(CLI::Range(2, 16));
  fuzz_cmd->add_option("--maxdeg", fuzz.max_deg, "Maximum generator degree")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : borel::kExitInputError;
  }
  opts.e_max = emax;
  opts.field = field == "f2" ? borel::Field::f2 : borel::Field::rationals;

  try {
    if (fuzz_cmd->parsed()) {
      fuzz.generator = gen == "random" ? borel::FuzzGenerator::random : borel::FuzzGenerator::borel;
      fuzz.check = opts;
      auto result = borel::run_fuzz(fuzz);
      emit(result.report, json_path);
      return result.exit_code;
    }

    borel::Subquotient module = [&] {
      try {
        return borel::parse_module_file(read_file(input));
      } catch (const borel::Error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        std::exit(borel::kExitInputError);
      }
    }();

    for (const auto& [name, command] : module_commands) {
      if (!subs.at(name)->parsed()) continue;
      if (name == "check") {
        auto result = borel::run_check(module, opts);
        emit(result.report, json_path);
        return result.exit_code;
      }
      emit(command(module, opts), json_path);
      if (name == "betti" && !csv_path.empty()) {
        std::ofstream out(csv_path, std::ios::binary);
        out << borel::betti_csv(borel::betti_table(module.denominator(), {opts.field, opts.oracle_guard}));
      }
      return borel::kExitOk;
    }
  } catch (const borel::InternalInconsistency& e) {
    emit(json{{"error", e.what()}, {"kind", "internal inconsistency"}}, json_path);
    return borel::kExitInconsistent;
  } catch (const borel::Error& e) {
    emit(json{{"error", e.what()}}, json_path);
    return borel::kExitCheckFailed;
  }
  return borel::kExitOk;
}
