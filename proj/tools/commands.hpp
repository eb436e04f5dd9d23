#pragma once

#include <string>

#include "flagbound/exact_arith.hpp"
#include "flagbound/serialization.hpp"

namespace flagbound::cli {

enum ExitStatus : int {
  kOk = 0,
  kValidation = 1,
  kViolation = 2,
  kUndecided = 3,
};

struct Settings {
  RadicalOptions radical;
  int digits = 20;
};

struct CommandResult {
  Json body;
  int status = kOk;
};

/// Every operation takes its arguments as a JSON object, so the subcommands
/// and the batch records share one code path.
CommandResult run_castelnuovo(const Json& args, const Settings& settings);
CommandResult run_flag(const Json& args, const Settings& settings);
CommandResult run_lemma(const Json& args, const Settings& settings);
CommandResult run_corollary(const Json& args, const Settings& settings);
CommandResult run_speciality(const Json& args, const Settings& settings);
CommandResult run_hypotheses(const Json& args, const Settings& settings);
CommandResult run_verify(const Json& args, const Settings& settings);

/// Dispatches on args["op"]. Library errors become {"error": ..., "input": ...}
/// with the matching exit status instead of propagating.
CommandResult run_record(const Json& record, const Settings& settings);

/// Maps an in-flight exception to an exit status and error body.
CommandResult describe_error(const Json& input);

}  // namespace flagbound::cli
