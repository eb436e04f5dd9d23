#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "flagbound/exact_arith.hpp"
#include "flagbound/flag_recurrence.hpp"

namespace flagbound {

enum class Verdict { pass, fail, undecided };
enum class HypothesisSubject { flagSeparation, corollaryDegree, lemmaDegree };

std::string_view to_string(Verdict verdict);
std::string_view to_string(HypothesisSubject subject);

using Threshold = std::variant<Rational, RadicalProduct>;

std::string threshold_expression(const Threshold& threshold);
std::string threshold_approximation(const Threshold& threshold, int digits = 20);

/// One inequality `value relation threshold`.
struct HypothesisCheck {
  std::string label;
  /// Position i in the flag for separation checks, 0 otherwise.
  std::size_t index = 0;
  Integer value;
  /// ">" or ">=".
  std::string relation;
  Threshold threshold;
  Verdict verdict = Verdict::undecided;
  bool exact = true;
};

struct HypothesisReport {
  HypothesisSubject subject = HypothesisSubject::lemmaDegree;
  std::vector<HypothesisCheck> checks;

  /// fail if any check fails, else undecided if any is undecided, else pass.
  Verdict overall() const;
  bool passed() const { return overall() == Verdict::pass; }
};

/// The four separation inequalities between s_i and s_{i+1}, i = 1..l-1.
/// Requires l >= 2.
HypothesisReport check_flag_separation(const FlagCondition& flag, const RadicalOptions& options = {});

/// d > 2(s+1)/(r-2) prod_{i=1}^{r-2} [(r-1)!(s+1)]^(1/(r-1-i))  and  d > 6(s+1)^3/(r-2).
HypothesisReport check_corollary_degree(long r, const Integer& d, const Integer& s,
                                        const RadicalOptions& options = {});

/// d >= s^2 + s(r-4)^2 for 3 <= r <= 4, d > s^2 - s for r >= 5.
HypothesisReport check_lemma_degree(long r, const Integer& d, const Integer& s);

}  // namespace flagbound
