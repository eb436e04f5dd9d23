#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "flagbound/exact_arith.hpp"
#include "flagbound/lemma_engine.hpp"

namespace flagbound {

/// sum_{i>=1} (s - min{s, i(r-2)+1}) by direct summation, checked against
/// C(w,2)(r-2) + wv. Throws IdentityViolation on mismatch.
Integer oracle_point_deficiency_sum(long r, std::int64_t s);

/// sum_{i>=1} (i-1)(s - min{s, i(r-2)+1}) by direct summation, checked against
/// C(w,3)(r-2) + C(w,2)v and against s^3/(3(r-2)^2).
Integer oracle_weighted_deficiency_sum(long r, std::int64_t s);

struct LemmaChainCheck {
  bool holds = false;
  Integer lhs;   ///< sum_{i=1}^{m} (d - h_{S^(1)}(i))
  Rational rhs;  ///< (ms/2)(m-1) + m eps + m pi - sum (i-1)(s - h0(i) - delta_i)
  std::string diff;
};

/// Recomputes both sides of the lemma's summation chain from raw input data.
/// Requires m >= w+1 and m >= s-r+2 (HypothesisFailure otherwise).
LemmaChainCheck oracle_lemma_chain(const LemmaInput& input);

struct EnvelopeWitness {
  long r = 0;
  Integer s;
};

struct EnvelopeScanReport {
  std::size_t cases = 0;
  /// max(|aggregate.lo|, |aggregate.hi|) / (s^3/(r-2)) over the scan.
  Rational tightestRatio;
  EnvelopeWitness tightestAt;
  std::vector<EnvelopeWitness> violations;

  bool passed() const { return violations.empty(); }
};

/// Checks the aggregate term estimates against |R| <= s^3/(r-2) for
/// 4 <= r <= rMax, r-1 <= s <= sMax. Requires rMax >= 4.
EnvelopeScanReport oracle_envelope_scan(long rMax, std::int64_t sMax);

struct GeneratorBounds {
  long rMin = 3;
  long rMax = 10;
  std::int64_t sMax = 40;
  /// d is drawn from [dMin, dMin + extraDegree], dMin the lemma's degree threshold.
  std::int64_t extraDegree = 400;
};

/// Random LemmaInput satisfying every invariant: point profile above
/// min{s, i(r-2)+1}, deltas vanishing from index s-r+2 on with sum at most
/// the point deficiency, and a nonincreasing tail inside the w-window and cap.
LemmaInput random_admissible_input(std::mt19937_64& rng, const GeneratorBounds& bounds = {});

struct VerificationRow {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string detail;

  bool passed() const { return failures == 0; }
};

struct VerificationOptions {
  long rMax = 10;
  std::int64_t sMax = 200;
  std::size_t seeds = 1000;
  std::uint64_t seed = 20240601;
};

/// Runs every oracle over the configured grid.
std::vector<VerificationRow> run_verification(const VerificationOptions& options);

}  // namespace flagbound
