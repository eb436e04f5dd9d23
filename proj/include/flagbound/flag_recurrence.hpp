#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "flagbound/exact_arith.hpp"

namespace flagbound {

/// Ambient dimension r and degree chain (s_1, ..., s_l) of a flag condition:
/// a degree s_1 curve in P^r lying on no i-dimensional variety of degree < s_i.
///
/// Invariants: 1 <= l <= r - 1, s_i >= r - i + 1, s_i >= s_{i+1}.
class FlagCondition {
 public:
  FlagCondition(long r, std::vector<Integer> degrees);

  long r() const { return r_; }
  std::size_t length() const { return degrees_.size(); }
  const std::vector<Integer>& degrees() const { return degrees_; }
  /// s_i, 1-based.
  const Integer& degree(std::size_t i) const { return degrees_.at(i - 1); }

  /// (r-1; s_2, ..., s_l). Requires length() >= 2.
  FlagCondition inner() const;

 private:
  long r_;
  std::vector<Integer> degrees_;
};

/// Bounds on G(r; s_1, ..., s_l). A point interval for l = 1.
struct GenusInterval {
  Interval bounds;
  /// True when every separation inequality needed by the recurrence holds.
  bool hypothesesVerified = true;

  const Rational& lo() const { return bounds.lo; }
  const Rational& hi() const { return bounds.hi; }
};

/// G via the recurrence
///   G(r; s_1..s_l) = s_1^2/(2 s_2) + (s_1/(2 s_2)) [2 G(r-1; s_2..s_l) - 2 - s_2] + R,
///   |R| <= s_2^3/(r-2),
/// with the Castelnuovo bound as the l = 1 base case. Computed
/// unconditionally; hypothesesVerified reports whether the separation checks pass.
GenusInterval flag_genus_interval(const FlagCondition& flag, const RadicalOptions& options = {});

/// Same recurrence without running the separation checks (hypothesesVerified is left true).
Interval flag_genus_bounds(const FlagCondition& flag);

/// d^2/(2s) + (d/(2s))(2 pi - 2 - s) + s^3/(r-2).
Rational corollary_bound(long r, const Integer& d, const Integer& s, const Integer& pi);

/// The competing bound for curves on no surface of degree <= s:
/// d^2/(2(s+1)) + (d/(2(s+1)))(2G - 2 - (s+1)) + (s+1)^3/(r-2), G = castelnuovo_bound(r-1, s+1).
Rational corollary_alternative_bound(long r, const Integer& d, const Integer& s);

enum class CorollaryRegime { onSmallSurface, notOnDegreeS };

std::string_view to_string(CorollaryRegime regime);

struct CorollaryReport {
  /// onSmallSurface when the alternative bound is strictly below the corollary
  /// bound, i.e. the degree-s surface case is the binding one.
  CorollaryRegime regime = CorollaryRegime::onSmallSurface;
  Rational bindingBound;
  Rational alternativeBound;
  bool alternativeBelow = true;
};

/// Evaluates both corollary bounds and their exact comparison. With
/// `requireHypotheses` the degree conditions must pass (HypothesisFailure otherwise).
CorollaryReport corollary_dichotomy(long r, const Integer& d, const Integer& s, const Integer& pi,
                                    bool requireHypotheses = true, const RadicalOptions& options = {});

/// d/s + (2 pi - 2 - s)/s.
Rational speciality_bound(const Integer& d, const Integer& s, const Integer& pi);

}  // namespace flagbound
