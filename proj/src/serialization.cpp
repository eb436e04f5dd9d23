#include "flagbound/serialization.hpp"

#include <fstream>
#include <sstream>

#include "flagbound/errors.hpp"

namespace flagbound {

namespace {

std::int64_t int64_from_json(const Json& value, const char* field) {
  const Integer x = integer_from_json(value);
  if (!x.fits_slong_p()) {
    throw ValidationError(std::string(field) + " is out of range: " + x.get_str());
  }
  return x.get_si();
}

std::vector<std::int64_t> int64_array(const Json& value, const char* field) {
  if (!value.is_array()) {
    throw ValidationError(std::string(field) + " must be an array, got " + value.dump());
  }
  std::vector<std::int64_t> out;
  out.reserve(value.size());
  for (const auto& entry : value) {
    out.push_back(int64_from_json(entry, field));
  }
  return out;
}

const Json& field(const Json& object, const char* name) {
  if (!object.is_object() || !object.contains(name)) {
    throw ValidationError(std::string("missing field \"") + name + "\" in " + object.dump());
  }
  return object.at(name);
}

}  // namespace

Json to_json(const Rational& value) { return value.to_string(); }

Json to_json(const Integer& value) { return value.get_str(); }

Rational rational_from_json(const Json& value) {
  if (value.is_string()) {
    return Rational::parse(value.get<std::string>());
  }
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Rational(Integer(value.get<unsigned long>()))
                                      : Rational(value.get<long>());
  }
  throw ValidationError("expected an exact rational, got " + value.dump());
}

Integer integer_from_json(const Json& value) {
  const Rational x = rational_from_json(value);
  if (!x.is_integer()) {
    throw ValidationError("expected an integer, got " + value.dump());
  }
  return x.numerator();
}

Json to_json(const HilbertProfile& profile) {
  return Json{{"stable", profile.stable_value()}, {"values", profile.values()}};
}

HilbertProfile profile_from_json(const Json& value) {
  return HilbertProfile(int64_from_json(field(value, "stable"), "stable"), int64_array(field(value, "values"), "values"));
}

DeltaSequence deltas_from_json(const Json& value) {
  if (value.is_object()) {
    return DeltaSequence(int64_array(field(value, "deltas"), "deltas"));
  }
  return DeltaSequence(int64_array(value, "deltas"));
}

LemmaInput lemma_input_from_json(const Json& value) {
  LemmaInput input;
  input.r = static_cast<long>(int64_from_json(field(value, "r"), "r"));
  input.d = int64_from_json(field(value, "d"), "d");
  input.s = int64_from_json(field(value, "s"), "s");
  input.pointProfile = profile_from_json(field(value, "pointProfile"));
  input.deltas = value.contains("deltas") ? deltas_from_json(value.at("deltas")) : DeltaSequence();
  input.tail = value.contains("tail") ? int64_array(value.at("tail"), "tail") : std::vector<std::int64_t>{};
  return input;
}

Json to_json(const LemmaInput& input) {
  return Json{{"r", input.r},
              {"d", input.d},
              {"s", input.s},
              {"pointProfile", to_json(input.pointProfile)},
              {"deltas", input.deltas.values()},
              {"tail", input.tail}};
}

Json to_json(const GenusInterval& interval) {
  return Json{{"lo", to_json(interval.lo())}, {"hi", to_json(interval.hi())}, {"hypothesesVerified", interval.hypothesesVerified}};
}

Json to_json(const RDecomposition& remainder) {
  return Json{{"epsilonTerm", to_json(remainder.epsilonTerm)},
              {"pointSumTerm", to_json(remainder.pointSumTerm)},
              {"deltaSumTerm", to_json(remainder.deltaSumTerm)},
              {"tailTerm", to_json(remainder.tailTerm)},
              {"R", to_json(remainder.total)}};
}

Json to_json(const LemmaEvaluation& evaluation) {
  Json out{{"m", to_json(evaluation.quantities.m())},
           {"epsilon", to_json(evaluation.quantities.epsilon())},
           {"w", to_json(evaluation.quantities.w())},
           {"v", to_json(evaluation.quantities.v())},
           {"pi", to_json(evaluation.quantities.pi)}};
  const Json remainder = to_json(evaluation.remainder);
  for (const auto& [key, value] : remainder.items()) {
    out[key] = value;
  }
  out["genus"] = to_json(evaluation.genus);
  out["mainBound"] = to_json(evaluation.mainBound);
  out["identityHolds"] = evaluation.identityHolds;
  out["withinEnvelope"] = evaluation.withinEnvelope;
  return out;
}

Json to_json(const HypothesisReport& report, int digits) {
  Json checks = Json::array();
  for (const auto& check : report.checks) {
    checks.push_back(Json{{"index", check.index},
                          {"label", check.label},
                          {"value", to_json(check.value)},
                          {"relation", check.relation},
                          {"threshold", threshold_expression(check.threshold)},
                          {"thresholdApprox", threshold_approximation(check.threshold, digits)},
                          {"approximate", true},
                          {"verdict", std::string(to_string(check.verdict))},
                          {"exact", check.exact}});
  }
  return Json{{"subject", std::string(to_string(report.subject))},
              {"overall", std::string(to_string(report.overall()))},
              {"checks", std::move(checks)}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open " + path);
  }
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("cannot parse " + path + ": " + e.what());
  }
}

}  // namespace flagbound
