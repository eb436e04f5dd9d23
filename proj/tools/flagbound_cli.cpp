#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "flagbound/errors.hpp"
#include "flagbound/oracle_suite.hpp"
#include "render.hpp"

namespace {

using flagbound::Json;
using namespace flagbound::cli;

Json integer_list(const std::vector<std::string>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v);
  return out;
}

int report_error(const Json& input) {
  const CommandResult result = describe_error(input);
  std::cerr << "error: " << result.body.at("error").get<std::string>() << '\n'
            << "input: " << input.dump() << '\n';
  return result.status;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::vector<std::string> lines;
  std::ifstream file;
  if (path != "-") {
    file.open(path);
    if (!file) throw flagbound::ValidationError("cannot open batch input \"" + path + "\"");
  }
  std::istream& in = path == "-" ? std::cin : file;
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  }
  return lines;
}

int run_batch(const std::string& path, unsigned jobs, const Settings& settings) {
  const auto lines = read_lines(path);
  std::vector<CommandResult> results(lines.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) {
      Json record;
      try {
        record = Json::parse(lines[i]);
      } catch (const Json::parse_error& e) {
        results[i] = {Json{{"error", std::string("malformed record: ") + e.what()}, {"input", lines[i]}}, kValidation};
        continue;
      }
      results[i] = run_record(record, settings);
    }
  };
  std::vector<std::thread> pool;
  const unsigned count = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(lines.size())));
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& thread : pool) thread.join();
  int status = kOk;
  for (const auto& result : results) {
    std::cout << result.body.dump() << '\n';
    status = std::max(status, result.status);
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact genus bounds for space curves under flag conditions", "flagbound"};
  app.require_subcommand(1);

  std::string format = "table";
  int digits = 20;
  std::size_t digitBudget = flagbound::RadicalOptions{}.digitBudget;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--digits", digits, "Significant digits of decimal approximations")->check(CLI::Range(1, 10000));
  app.add_option("--digit-budget", digitBudget, "Largest exact power, in decimal digits, before interval fallback");

  Json args = Json::object();
  std::function<CommandResult(const Json&, const Settings&)> command;

  std::string n, deg;
  auto* castelnuovo = app.add_subcommand("castelnuovo", "Castelnuovo bound for degree DEG in P^N");
  castelnuovo->add_option("N", n)->required();
  castelnuovo->add_option("DEG", deg)->required();
  castelnuovo->callback([&] {
    args = {{"N", n}, {"deg", deg}};
    command = run_castelnuovo;
  });

  std::string r, d, s, pi;
  std::vector<std::string> degrees;
  bool report = false;
  auto* flag = app.add_subcommand("flag", "Genus interval for a flag condition (R; S1 >= S2 >= ...)");
  flag->add_option("R", r)->required();
  flag->add_option("DEGREES", degrees, "S1 [S2 ...]")->required();
  flag->add_flag("--report", report, "Include the separation hypothesis checks");
  flag->callback([&] {
    args = {{"r", r}, {"degrees", integer_list(degrees)}, {"report", report}};
    command = run_flag;
  });

  std::string inputPath;
  bool allowSmallDegree = false;
  auto* lemma = app.add_subcommand("lemma", "Evaluate the genus identity for a JSON input bundle");
  lemma->add_option("--input", inputPath, "LemmaInput JSON file")->required();
  lemma->add_flag("--allow-small-degree", allowSmallDegree, "Skip the degree truncation checks");
  lemma->callback([&] {
    args = {{"input", flagbound::load_json_file(inputPath)}, {"allowSmallDegree", allowSmallDegree}};
    command = run_lemma;
  });

  auto* corollary = app.add_subcommand("corollary", "Degree-s surface dichotomy for (R, D, S, PI)");
  corollary->add_option("R", r)->required();
  corollary->add_option("D", d)->required();
  corollary->add_option("S", s)->required();
  corollary->add_option("PI", pi)->required();
  corollary->callback([&] {
    args = {{"r", r}, {"d", d}, {"s", s}, {"pi", pi}};
    command = run_corollary;
  });

  auto* speciality = app.add_subcommand("speciality", "Speciality bound for (D, S, PI)");
  speciality->add_option("D", d)->required();
  speciality->add_option("S", s)->required();
  speciality->add_option("PI", pi)->required();
  speciality->callback([&] {
    args = {{"d", d}, {"s", s}, {"pi", pi}};
    command = run_speciality;
  });

  auto* hypotheses = app.add_subcommand("hypotheses", "Itemized hypothesis checks");
  hypotheses->require_subcommand(1);
  auto* hypFlag = hypotheses->add_subcommand("flag", "Separation conditions of a flag");
  hypFlag->add_option("R", r)->required();
  hypFlag->add_option("DEGREES", degrees)->required();
  hypFlag->callback([&] {
    args = {{"kind", "flag"}, {"r", r}, {"degrees", integer_list(degrees)}};
    command = run_hypotheses;
  });
  for (const char* kind : {"corollary", "lemma"}) {
    auto* sub = hypotheses->add_subcommand(kind, std::string("Degree conditions of the ") + kind);
    sub->add_option("R", r)->required();
    sub->add_option("D", d)->required();
    sub->add_option("S", s)->required();
    sub->callback([&, kind] {
      args = {{"kind", kind}, {"r", r}, {"d", d}, {"s", s}};
      command = run_hypotheses;
    });
  }

  std::vector<long> grid;
  std::size_t seeds = flagbound::VerificationOptions{}.seeds;
  auto* verify = app.add_subcommand("verify", "Run the oracle battery");
  verify->add_option("--grid", grid, "rMax,sMax")->delimiter(',')->expected(2);
  verify->add_option("--seeds", seeds, "Random lemma inputs to check");
  verify->callback([&] {
    args = {{"seeds", seeds}};
    if (grid.size() == 2) {
      args["rMax"] = grid[0];
      args["sMax"] = grid[1];
    }
    command = run_verify;
  });

  std::string batchPath = "-";
  unsigned jobs = 1;
  auto* batch = app.add_subcommand("batch", "Evaluate NDJSON records, one result line per record");
  batch->add_option("--input", batchPath, "NDJSON file, or - for stdin");
  batch->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  for (auto* sub : {castelnuovo, flag, lemma, corollary, speciality, hypotheses, verify, batch}) {
    sub->fallthrough();
  }
  hypFlag->fallthrough();
  for (auto* sub : hypotheses->get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kValidation;
  } catch (...) {
    return report_error(args);
  }

  Settings settings;
  settings.digits = digits;
  settings.radical.digitBudget = digitBudget;
  if (const char* env = std::getenv("FLAGBOUND_DIGIT_BUDGET"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (*end != '\0' || value == 0 || env[0] == '-') {
      std::cerr << "error: FLAGBOUND_DIGIT_BUDGET must be a positive integer, got \"" << env << "\"\n";
      return kValidation;
    }
    settings.radical.digitBudget = static_cast<std::size_t>(value);
  }
  const Format output = format == "json" ? Format::json : (format == "csv" ? Format::csv : Format::table);

  try {
    if (batch->parsed()) return run_batch(batchPath, jobs, settings);
    const CommandResult result = command(args, settings);
    render(std::cout, result.body, output);
    return result.status;
  } catch (...) {
    return report_error(args);
  }
}
