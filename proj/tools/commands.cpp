#include "commands.hpp"

#include <exception>

#include "flagbound/castelnuovo.hpp"
#include "flagbound/errors.hpp"
#include "flagbound/flag_recurrence.hpp"
#include "flagbound/hypothesis_checker.hpp"
#include "flagbound/lemma_engine.hpp"
#include "flagbound/oracle_suite.hpp"

namespace flagbound::cli {

namespace {

const Json& arg(const Json& args, const char* name) {
  if (!args.contains(name)) {
    throw ValidationError(std::string("missing argument \"") + name + "\"");
  }
  return args.at(name);
}

Integer integer_arg(const Json& args, const char* name) { return integer_from_json(arg(args, name)); }

long small_arg(const Json& args, const char* name) {
  const Integer value = integer_arg(args, name);
  if (!value.fits_slong_p() || value > 1'000'000 || value < -1'000'000) {
    throw ValidationError(std::string(name) + " is out of range: " + value.get_str());
  }
  return value.get_si();
}

std::vector<Integer> degrees_arg(const Json& args) {
  const Json& list = arg(args, "degrees");
  if (!list.is_array()) {
    throw ValidationError("degrees must be an array");
  }
  std::vector<Integer> out;
  for (const auto& entry : list) {
    out.push_back(integer_from_json(entry));
  }
  return out;
}

int status_of(Verdict verdict) { return verdict == Verdict::undecided ? kUndecided : kOk; }

}  // namespace

CommandResult run_castelnuovo(const Json& args, const Settings&) {
  return {Json{{"genus", to_json(castelnuovo_bound(small_arg(args, "N"), integer_arg(args, "deg")))}}, kOk};
}

CommandResult run_flag(const Json& args, const Settings& settings) {
  const FlagCondition flag(small_arg(args, "r"), degrees_arg(args));
  const Interval bounds = flag_genus_bounds(flag);
  GenusInterval interval{bounds, true};
  int status = kOk;
  Json report;
  if (flag.length() >= 2) {
    const HypothesisReport hypotheses = check_flag_separation(flag, settings.radical);
    interval.hypothesesVerified = hypotheses.passed();
    status = status_of(hypotheses.overall());
    report = to_json(hypotheses, settings.digits);
  }
  Json body = to_json(interval);
  if (args.value("report", false) && !report.is_null()) {
    body["hypotheses"] = std::move(report);
  }
  return {std::move(body), status};
}

CommandResult run_lemma(const Json& args, const Settings&) {
  const LemmaInput input = lemma_input_from_json(args.contains("input") ? args.at("input") : args);
  const LemmaOptions options{.allowSmallDegree = args.value("allowSmallDegree", false)};
  const LemmaEvaluation evaluation = evaluate_lemma(input, options);
  Json body = to_json(evaluation);
  const bool ok = evaluation.identityHolds && evaluation.withinEnvelope;
  return {std::move(body), ok ? kOk : kViolation};
}

CommandResult run_corollary(const Json& args, const Settings& settings) {
  const long r = small_arg(args, "r");
  const Integer d = integer_arg(args, "d");
  const Integer s = integer_arg(args, "s");
  const Integer pi = integer_arg(args, "pi");
  const HypothesisReport hypotheses = check_corollary_degree(r, d, s, settings.radical);
  const CorollaryReport report = corollary_dichotomy(r, d, s, pi, false, settings.radical);
  Json body{{"bound", to_json(report.bindingBound)},
            {"alternativeBound", to_json(report.alternativeBound)},
            {"alternativeBelow", report.alternativeBelow},
            {"regime", std::string(to_string(report.regime))},
            {"hypotheses", std::string(to_string(hypotheses.overall()))}};
  return {std::move(body), status_of(hypotheses.overall())};
}

CommandResult run_speciality(const Json& args, const Settings&) {
  return {Json{{"bound", to_json(speciality_bound(integer_arg(args, "d"), integer_arg(args, "s"), integer_arg(args, "pi")))}},
          kOk};
}

CommandResult run_hypotheses(const Json& args, const Settings& settings) {
  const std::string kind = arg(args, "kind").get<std::string>();
  HypothesisReport report;
  if (kind == "flag") {
    report = check_flag_separation(FlagCondition(small_arg(args, "r"), degrees_arg(args)), settings.radical);
  } else if (kind == "corollary") {
    report = check_corollary_degree(small_arg(args, "r"), integer_arg(args, "d"), integer_arg(args, "s"), settings.radical);
  } else if (kind == "lemma") {
    report = check_lemma_degree(small_arg(args, "r"), integer_arg(args, "d"), integer_arg(args, "s"));
  } else {
    throw ValidationError("unknown hypothesis kind \"" + kind + "\" (expected flag, corollary or lemma)");
  }
  return {to_json(report, settings.digits), status_of(report.overall())};
}

CommandResult run_verify(const Json& args, const Settings&) {
  VerificationOptions options;
  options.rMax = args.contains("rMax") ? small_arg(args, "rMax") : options.rMax;
  options.sMax = args.contains("sMax") ? small_arg(args, "sMax") : options.sMax;
  options.seeds = args.contains("seeds") ? static_cast<std::size_t>(small_arg(args, "seeds")) : options.seeds;
  if (options.rMax < 3 || options.sMax < 2) {
    throw ValidationError("verify grid needs rMax >= 3 and sMax >= 2");
  }
  const auto rows = run_verification(options);
  Json checks = Json::array();
  bool passed = true;
  for (const auto& row : rows) {
    passed = passed && row.passed();
    checks.push_back(Json{{"check", row.name},
                          {"cases", row.cases},
                          {"failures", row.failures},
                          {"status", row.passed() ? "pass" : "FAIL"},
                          {"detail", row.detail}});
  }
  return {Json{{"passed", passed}, {"checks", std::move(checks)}}, passed ? kOk : kViolation};
}

CommandResult describe_error(const Json& input) {
  try {
    throw;
  } catch (const UndecidedComparison& e) {
    return {Json{{"error", e.what()}, {"input", input}}, kUndecided};
  } catch (const IdentityViolation& e) {
    return {Json{{"error", e.what()}, {"input", input}}, kViolation};
  } catch (const EnvelopeViolation& e) {
    return {Json{{"error", e.what()}, {"input", input}}, kViolation};
  } catch (const ValidationError& e) {
    return {Json{{"error", e.what()}, {"input", input}}, kValidation};
  } catch (const nlohmann::json::exception& e) {
    return {Json{{"error", std::string("malformed record: ") + e.what()}, {"input", input}}, kValidation};
  }
}

CommandResult run_record(const Json& record, const Settings& settings) {
  try {
    if (!record.is_object()) {
      throw ValidationError("batch records must be JSON objects");
    }
    const std::string op = arg(record, "op").get<std::string>();
    if (op == "castelnuovo") return run_castelnuovo(record, settings);
    if (op == "flag") return run_flag(record, settings);
    if (op == "lemma") return run_lemma(record, settings);
    if (op == "corollary") return run_corollary(record, settings);
    if (op == "speciality") return run_speciality(record, settings);
    if (op == "hypotheses") return run_hypotheses(record, settings);
    throw ValidationError("unknown op \"" + op + "\"");
  } catch (...) {
    return describe_error(record);
  }
}

}  // namespace flagbound::cli
