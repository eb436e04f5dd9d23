#include "flagbound/castelnuovo.hpp"

#include <algorithm>
#include <string>

#include "flagbound/errors.hpp"
#include "flagbound/euclid_forms.hpp"

namespace flagbound {

void AmbientSpec::validate() const {
  if (projectiveDimension < 2) {
    throw ValidationError("ambient dimension must be >= 2, got " + std::to_string(projectiveDimension));
  }
  if (degree < projectiveDimension) {
    throw ValidationError("nondegenerate curve in P^" + std::to_string(projectiveDimension) +
                          " needs degree >= " + std::to_string(projectiveDimension) + ", got " + degree.get_str());
  }
}

std::int64_t min_point_hilbert(long N, std::int64_t deg, std::int64_t i) {
  if (N < 1 || deg < 1 || i < 0) {
    throw ValidationError("min_point_hilbert needs N >= 1, deg >= 1, i >= 0 (N=" + std::to_string(N) +
                          ", deg=" + std::to_string(deg) + ", i=" + std::to_string(i) + ")");
  }
  // i*N + 1 >= deg as soon as i >= deg, so clamp to avoid overflow.
  const std::int64_t step = std::min<std::int64_t>(i, deg);
  return std::min<std::int64_t>(deg, step * N + 1);
}

Integer castelnuovo_bound(long N, const Integer& deg) {
  AmbientSpec{N, deg}.validate();
  // Same division as d - 1 = m s + eps, with modulus N - 1.
  const DivisionForm split = split_m_epsilon(deg, Integer(N - 1));
  return binomial(split.quotient, 2) * (N - 1) + split.quotient * split.remainder;
}

Integer castelnuovo_bound(const AmbientSpec& ambient) {
  return castelnuovo_bound(ambient.projectiveDimension, ambient.degree);
}

Integer castelnuovo_deficiency_sum(long N, std::int64_t deg) {
  AmbientSpec{N, Integer(static_cast<long>(deg))}.validate();
  Integer total = 0;
  for (std::int64_t i = 1;; ++i) {
    const std::int64_t h = min_point_hilbert(N - 1, deg, i);
    if (h == deg) {
      break;
    }
    total += static_cast<long>(deg - h);
  }
  return total;
}

Rational castelnuovo_quadratic_envelope(const Integer& s, long r) {
  if (r < 3) {
    throw ValidationError("castelnuovo_quadratic_envelope needs r >= 3, got " + std::to_string(r));
  }
  return Rational(s * s, Integer(2 * (r - 2)));
}

}  // namespace flagbound
