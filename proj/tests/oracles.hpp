#pragma once

// Brute-force reference computations for the test suites. Nothing here calls
// into the library's closed forms.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

namespace flagbound::reference {

/// sum_{i>=1} (deg - min{deg, i*step + 1}), one term at a time.
inline std::int64_t deficiency_sum(std::int64_t step, std::int64_t deg) {
  std::int64_t total = 0;
  for (std::int64_t i = 1; i <= deg; ++i) {
    total += deg - std::min(deg, i * step + 1);
  }
  return total;
}

/// sum_{i>=1} (i-1)(deg - min{deg, i*step + 1}).
inline std::int64_t weighted_deficiency_sum(std::int64_t step, std::int64_t deg) {
  std::int64_t total = 0;
  for (std::int64_t i = 1; i <= deg; ++i) {
    total += (i - 1) * (deg - std::min(deg, i * step + 1));
  }
  return total;
}

/// Curve genus sum_{i=1}^{m} (d - h1(i)) + sum(tail) straight from raw section data,
/// with h1(i) = sum_{j<=i} (h0(j) + delta_j), h0 padded with `stable`.
inline std::int64_t raw_section_genus(std::int64_t d, std::int64_t stable, const std::vector<std::int64_t>& h0,
                                      const std::vector<std::int64_t>& deltas, const std::vector<std::int64_t>& tail) {
  const std::int64_t m = (d - 1) / stable;
  std::int64_t h1 = 0;
  std::int64_t genus = 0;
  for (std::int64_t j = 0; j <= m; ++j) {
    const std::int64_t h = j < static_cast<std::int64_t>(h0.size()) ? h0[static_cast<std::size_t>(j)] : stable;
    const std::int64_t delta =
        (j >= 1 && j <= static_cast<std::int64_t>(deltas.size())) ? deltas[static_cast<std::size_t>(j - 1)] : 0;
    h1 += h + delta;
    if (j >= 1) {
      genus += d - h1;
    }
  }
  for (const auto t : tail) {
    genus += t;
  }
  return genus;
}

enum class Enclosure { below, above, inconclusive };

/// Encloses scalar * prod base^(1/e) at `digits` significant digits through
/// logarithms: exp(log p - log q + sum log(base)/e), every step rounded
/// outward, and locates `lhs` relative to the enclosure.
inline Enclosure log_domain_locate(const mpz_class& lhs, const mpq_class& scalar,
                                   const std::vector<std::pair<mpz_class, unsigned long>>& factors, int digits = 200) {
  const auto precision = static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
  mpfr_t lo, hi, term, tmp;
  mpfr_inits2(precision, lo, hi, term, tmp, static_cast<mpfr_ptr>(nullptr));

  const auto log_of = [&](const mpz_class& x, mpfr_rnd_t rnd, mpfr_t out) {
    mpfr_set_z(out, x.get_mpz_t(), rnd);
    mpfr_log(out, out, rnd);
  };
  log_of(scalar.get_num(), MPFR_RNDD, lo);
  log_of(scalar.get_den(), MPFR_RNDU, tmp);
  mpfr_sub(lo, lo, tmp, MPFR_RNDD);
  log_of(scalar.get_num(), MPFR_RNDU, hi);
  log_of(scalar.get_den(), MPFR_RNDD, tmp);
  mpfr_sub(hi, hi, tmp, MPFR_RNDU);
  for (const auto& [base, e] : factors) {
    log_of(base, MPFR_RNDD, term);
    mpfr_div_ui(term, term, e, MPFR_RNDD);
    mpfr_add(lo, lo, term, MPFR_RNDD);
    log_of(base, MPFR_RNDU, term);
    mpfr_div_ui(term, term, e, MPFR_RNDU);
    mpfr_add(hi, hi, term, MPFR_RNDU);
  }
  mpfr_exp(lo, lo, MPFR_RNDD);
  mpfr_exp(hi, hi, MPFR_RNDU);

  Enclosure out = Enclosure::inconclusive;
  if (mpfr_cmp_z(lo, lhs.get_mpz_t()) > 0) {
    out = Enclosure::below;
  } else if (mpfr_cmp_z(hi, lhs.get_mpz_t()) < 0) {
    out = Enclosure::above;
  }
  mpfr_clears(lo, hi, term, tmp, static_cast<mpfr_ptr>(nullptr));
  return out;
}

}  // namespace flagbound::reference
