#include "flagbound/hypothesis_checker.hpp"

#include <string>

#include "flagbound/errors.hpp"

namespace flagbound {

namespace {

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Verdict decide(Ordering ordering, bool strict) {
  switch (ordering) {
    case Ordering::greater: return Verdict::pass;
    case Ordering::equal: return strict ? Verdict::fail : Verdict::pass;
    case Ordering::less: return Verdict::fail;
    case Ordering::undecided: return Verdict::undecided;
  }
  return Verdict::undecided;
}

HypothesisCheck rational_check(std::string label, std::size_t index, const Integer& value, bool strict,
                               Rational threshold) {
  const Rational lhs(value);
  const Ordering ordering =
      lhs < threshold ? Ordering::less : (lhs == threshold ? Ordering::equal : Ordering::greater);
  return {std::move(label), index, value, strict ? ">" : ">=", std::move(threshold), decide(ordering, strict), true};
}

HypothesisCheck radical_check(std::string label, std::size_t index, const Integer& value, RadicalProduct threshold,
                              const RadicalOptions& options) {
  const RadicalComparison result = compare_radical(value, threshold, options);
  return {std::move(label), index, value, ">", std::move(threshold), decide(result.ordering, true), result.exact};
}

}  // namespace

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::undecided: return "undecided";
  }
  return "undecided";
}

std::string_view to_string(HypothesisSubject subject) {
  switch (subject) {
    case HypothesisSubject::flagSeparation: return "flagSeparation";
    case HypothesisSubject::corollaryDegree: return "corollaryDegree";
    case HypothesisSubject::lemmaDegree: return "lemmaDegree";
  }
  return "lemmaDegree";
}

std::string threshold_expression(const Threshold& threshold) {
  return std::visit([](const auto& t) { return t.to_string(); }, threshold);
}

std::string threshold_approximation(const Threshold& threshold, int digits) {
  if (const auto* rational = std::get_if<Rational>(&threshold)) {
    return rational->to_decimal(digits);
  }
  return std::get<RadicalProduct>(threshold).approximate(digits);
}

Verdict HypothesisReport::overall() const {
  bool undecided = false;
  for (const auto& check : checks) {
    if (check.verdict == Verdict::fail) {
      return Verdict::fail;
    }
    undecided = undecided || check.verdict == Verdict::undecided;
  }
  return undecided ? Verdict::undecided : Verdict::pass;
}

HypothesisReport check_flag_separation(const FlagCondition& flag, const RadicalOptions& options) {
  const std::size_t l = flag.length();
  if (l < 2) {
    throw ValidationError("flag separation needs at least two degrees (r=" + std::to_string(flag.r()) + ")");
  }
  const long r = flag.r();
  HypothesisReport report;
  report.subject = HypothesisSubject::flagSeparation;
  for (std::size_t i = 1; i < l; ++i) {
    const Integer& current = flag.degree(i);
    const Integer next = flag.degree(i + 1) + 1;  // s_{i+1} + 1
    const long k = r - static_cast<long>(i) - 1;  // >= 1 because l <= r - 1
    const long a = static_cast<long>(l - i + 1);
    const Integer cube = next * next * next;

    report.checks.push_back(rational_check("cubic separation", i, current, false,
                                           Rational(Integer(8 * static_cast<long>(l - 1) * (a * a + 2 * a + 9)) * cube,
                                                    Integer(k))));
    report.checks.push_back(rational_check("quadratic separation", i, current, true,
                                           Rational(next * next, Integer(k)) + Rational(Integer(2 * r - 2) * next)));

    const Integer base = factorial(static_cast<unsigned long>(r - static_cast<long>(i))) * next;
    std::vector<RadicalFactor> factors;
    for (long j = 1; j <= r - 1 - static_cast<long>(i); ++j) {
      factors.push_back({base, static_cast<unsigned long>(r - static_cast<long>(i) - j)});
    }
    report.checks.push_back(radical_check("radical separation", i, current,
                                          RadicalProduct(Rational(2 * next, Integer(k)), std::move(factors)), options));

    const Integer s = flag.degree(i + 1);
    report.checks.push_back(rational_check("quartic separation", i, current, true, Rational(2 * s * s * s * s, Integer(k))));
  }
  return report;
}

HypothesisReport check_corollary_degree(long r, const Integer& d, const Integer& s, const RadicalOptions& options) {
  if (r < 3 || s < r - 1) {
    throw ValidationError("corollary degree check needs r >= 3 and s >= r-1 (r=" + std::to_string(r) +
                          ", s=" + s.get_str() + ")");
  }
  const Integer next = s + 1;
  const Integer base = factorial(static_cast<unsigned long>(r - 1)) * next;
  std::vector<RadicalFactor> factors;
  for (long i = 1; i <= r - 2; ++i) {
    factors.push_back({base, static_cast<unsigned long>(r - 1 - i)});
  }
  HypothesisReport report;
  report.subject = HypothesisSubject::corollaryDegree;
  report.checks.push_back(
      radical_check("radical degree", 0, d, RadicalProduct(Rational(2 * next, Integer(r - 2)), std::move(factors)), options));
  report.checks.push_back(rational_check("cubic degree", 0, d, true, Rational(6 * next * next * next, Integer(r - 2))));
  return report;
}

HypothesisReport check_lemma_degree(long r, const Integer& d, const Integer& s) {
  if (r < 3) {
    throw ValidationError("lemma degree check needs r >= 3, got r=" + std::to_string(r));
  }
  HypothesisReport report;
  report.subject = HypothesisSubject::lemmaDegree;
  if (r <= 4) {
    report.checks.push_back(rational_check("lemma degree", 0, d, false, Rational(s * s + s * (r - 4) * (r - 4))));
  } else {
    report.checks.push_back(rational_check("lemma degree", 0, d, true, Rational(s * s - s)));
  }
  return report;
}

}  // namespace flagbound
