#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "flagbound/euclid_forms.hpp"
#include "flagbound/exact_arith.hpp"
#include "flagbound/hilbert_profiles.hpp"

namespace flagbound {

/// Data of a curve C of degree d on a surface S of degree s in P^r:
/// the Hilbert function of S's point section, the delta sequence, and the
/// deficiencies t_i = d - h_Gamma(i) for i = m+1, ..., m+len (len <= w).
struct LemmaInput {
  long r = 3;
  std::int64_t d = 1;
  std::int64_t s = 1;
  HilbertProfile pointProfile{1, {1}};
  DeltaSequence deltas;
  std::vector<std::int64_t> tail;
};

struct LemmaOptions {
  /// Admit degrees below the lemma's degree condition. The Bezout
  /// truncation h_Gamma = h_{S^(1)} up to m may then fail.
  bool allowSmallDegree = false;
};

/// Quantities every lemma computation derives from the input.
struct LemmaQuantities {
  DivisionForm mEpsilon;  ///< d - 1 = m s + eps
  DivisionForm wv;        ///< s - 1 = w (r-2) + v
  Integer pi;             ///< sectional genus from the point-section deficiencies

  const Integer& m() const { return mEpsilon.quotient; }
  const Integer& epsilon() const { return mEpsilon.remainder; }
  const Integer& w() const { return wv.quotient; }
  const Integer& v() const { return wv.remainder; }
};

/// Checks every LemmaInput invariant and returns the derived quantities.
/// Throws ValidationError (or InconsistentDataError) naming the violated condition.
LemmaQuantities validate_lemma_input(const LemmaInput& input, const LemmaOptions& options = {});

/// The four terms of R(C) and their signed total
///   total = epsilonTerm - pointSumTerm + deltaSumTerm + tailTerm.
struct RDecomposition {
  Rational epsilonTerm;
  Rational pointSumTerm;
  Rational deltaSumTerm;
  Rational tailTerm;
  Rational total;
};

RDecomposition compute_R(const LemmaInput& input, const LemmaOptions& options = {});

/// d^2/(2s) + (d/(2s))(2 pi - 2 - s) + R.
Rational main_bound(const Integer& d, const Integer& s, const Integer& pi, const Rational& R);

/// sum_{i=1}^{m} (d - h_{S^(1)}(i)) + sum of the tail deficiencies.
/// Throws InconsistentDataError when h_{S^(1)}(m) > d.
Integer genus_from_lemma_input(const LemmaInput& input, const LemmaOptions& options = {});

/// Estimates for the four R(C) terms, for r >= 4 and s >= r - 1.
struct TermEstimates {
  Interval epsilonTerm;   ///< [-s^2/(2(r-2)), (s+1)/2]
  Interval pointSumTerm;  ///< [0, s^3/(3(r-2)^2)]
  Interval deltaSumTerm;  ///< [0, s^2(s-1)/(2(r-2))]
  Interval tailTerm;      ///< [0, s^3/(2(r-2)^2)]
  Interval aggregate;     ///< signs as in R(C)
  Interval envelope;      ///< [-s^3/(r-2), s^3/(r-2)]
};

TermEstimates term_estimate_intervals(long r, const Integer& s);

/// (1+eps)(s+1-eps-2 pi)/(2s) - p_a(S) + sum(tail): R(C) when every delta vanishes.
Rational acm_R(const Integer& epsilon, const Integer& s, const Integer& pi, const Integer& surfaceGenus,
               std::span<const std::int64_t> tail);

/// w (eps + pi) = w (d - h_Gamma(m)), the cap on the tail deficiencies.
Integer tail_cap(long r, const Integer& s, const Integer& d, const Integer& pi);

/// Everything the lemma says about one input.
struct LemmaEvaluation {
  LemmaQuantities quantities;
  RDecomposition remainder;
  Integer genus;
  Rational mainBound;
  bool identityHolds = false;
  /// |R| <= s^3/(r-2).
  bool withinEnvelope = false;
};

LemmaEvaluation evaluate_lemma(const LemmaInput& input, const LemmaOptions& options = {});

}  // namespace flagbound
