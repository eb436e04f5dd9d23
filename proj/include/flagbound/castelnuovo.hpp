#pragma once

#include <cstdint>

#include "flagbound/exact_arith.hpp"

namespace flagbound {

/// A nondegenerate curve of `degree` in P^projectiveDimension.
struct AmbientSpec {
  long projectiveDimension = 2;
  Integer degree = 2;

  /// Throws ValidationError unless projectiveDimension >= 2 and degree >= projectiveDimension.
  void validate() const;
};

/// Lower bound min{deg, i*N + 1} for the Hilbert function of deg points in
/// uniform position spanning P^N. N >= 1 is accepted so that points on a line
/// (the r = 3 surface case) share the same code path.
std::int64_t min_point_hilbert(long N, std::int64_t deg, std::int64_t i);

/// Castelnuovo's bound C(m,2)(N-1) + m*eps, deg - 1 = m(N-1) + eps.
Integer castelnuovo_bound(long N, const Integer& deg);
Integer castelnuovo_bound(const AmbientSpec& ambient);

/// The defining sum  sum_{i>=1} (deg - min{deg, i(N-1)+1}),  evaluated term by term.
Integer castelnuovo_deficiency_sum(long N, std::int64_t deg);

/// s^2 / (2(r-2)), the quadratic envelope of castelnuovo_bound(r-1, s).
Rational castelnuovo_quadratic_envelope(const Integer& s, long r);

}  // namespace flagbound
