#include "flagbound/lemma_engine.hpp"

#include <string>

#include "flagbound/errors.hpp"
#include "flagbound/hypothesis_checker.hpp"

namespace flagbound {

namespace {

Integer big(std::int64_t value) { return Integer(static_cast<long>(value)); }

std::string describe(const LemmaInput& input) {
  return "(r=" + std::to_string(input.r) + ", d=" + std::to_string(input.d) + ", s=" + std::to_string(input.s) + ")";
}

Rational epsilon_term(const Integer& epsilon, const Integer& s, const Integer& pi) {
  return Rational((1 + epsilon) * (s + 1 - epsilon - 2 * pi), 2 * s);
}

}  // namespace

LemmaQuantities validate_lemma_input(const LemmaInput& input, const LemmaOptions& options) {
  const std::string where = describe(input);
  if (input.r < 3) {
    throw ValidationError("lemma input needs r >= 3 " + where);
  }
  if (input.s < input.r - 1) {
    throw ValidationError("lemma input needs s >= r-1 " + where);
  }
  if (input.d < 1) {
    throw ValidationError("lemma input needs d >= 1 " + where);
  }
  if (input.pointProfile.stable_value() != input.s) {
    throw ValidationError("point profile stabilizes at " + std::to_string(input.pointProfile.stable_value()) +
                          ", expected s " + where);
  }
  if (!options.allowSmallDegree && !check_lemma_degree(input.r, big(input.d), big(input.s)).passed()) {
    throw HypothesisFailure("degree below the lemma's degree condition " + where);
  }
  input.deltas.validate_vanishing(input.r, input.s);

  LemmaQuantities q{split_m_epsilon(big(input.d), big(input.s)), split_w_v(big(input.s), input.r),
                    sectional_genus_from_ciliberto(input.pointProfile, input.deltas)};

  if (!options.allowSmallDegree) {
    if (q.m() < input.pointProfile.saturation_index() || q.m() < input.deltas.support_end()) {
      throw ValidationError("m = " + q.m().get_str() + " is below the point profile saturation or the delta support " +
                            where);
    }
  }

  if (q.w() < static_cast<long>(input.tail.size())) {
    throw ValidationError("tail has " + std::to_string(input.tail.size()) + " entries but the window is w = " +
                          q.w().get_str() + " " + where);
  }
  for (std::size_t i = 0; i < input.tail.size(); ++i) {
    if (input.tail[i] < 0) {
      throw ValidationError("tail deficiencies must be >= 0 " + where);
    }
    if (i > 0 && input.tail[i] > input.tail[i - 1]) {
      throw ValidationError("tail deficiencies must be nonincreasing " + where);
    }
  }
  // d - h_Gamma(m) = d - (ms + 1 - pi) = eps + pi.
  if (!input.tail.empty() && big(input.tail.front()) > q.epsilon() + q.pi) {
    throw ValidationError("first tail deficiency " + std::to_string(input.tail.front()) +
                          " exceeds d - h_Gamma(m) = " + Integer(q.epsilon() + q.pi).get_str() + " " + where);
  }
  return q;
}

RDecomposition compute_R(const LemmaInput& input, const LemmaOptions& options) {
  const LemmaQuantities q = validate_lemma_input(input, options);
  const Integer s = big(input.s);

  Integer pointSum = 0;
  const auto& h = input.pointProfile.values();
  for (std::size_t i = 1; i < h.size(); ++i) {
    pointSum += Integer(static_cast<unsigned long>(i - 1)) * big(input.s - h[i]);
  }
  Integer deltaSum = 0;
  const auto& deltas = input.deltas.values();
  for (std::size_t i = 1; i <= deltas.size(); ++i) {
    deltaSum += Integer(static_cast<unsigned long>(i - 1)) * big(deltas[i - 1]);
  }
  Integer tailSum = 0;
  for (const auto t : input.tail) {
    tailSum += big(t);
  }

  RDecomposition out;
  out.epsilonTerm = epsilon_term(q.epsilon(), s, q.pi);
  out.pointSumTerm = Rational(pointSum);
  out.deltaSumTerm = Rational(deltaSum);
  out.tailTerm = Rational(tailSum);
  out.total = out.epsilonTerm - out.pointSumTerm + out.deltaSumTerm + out.tailTerm;
  return out;
}

Rational main_bound(const Integer& d, const Integer& s, const Integer& pi, const Rational& R) {
  if (s < 1) {
    throw ValidationError("main_bound needs s >= 1, got " + s.get_str());
  }
  return Rational(d * d, 2 * s) + Rational(d * (2 * pi - 2 - s), 2 * s) + R;
}

Integer genus_from_lemma_input(const LemmaInput& input, const LemmaOptions& options) {
  const LemmaQuantities q = validate_lemma_input(input, options);
  if (!q.m().fits_slong_p()) {
    throw ValidationError("m = " + q.m().get_str() + " is too large to materialize " + describe(input));
  }
  const std::int64_t m = q.m().get_si();
  const auto section = accumulate_surface_section(input.pointProfile, input.deltas, m);
  if (section.back() > input.d) {
    throw InconsistentDataError("h_S1(" + std::to_string(m) + ") = " + std::to_string(section.back()) +
                                " exceeds d; the degree is too small for this surface " + describe(input));
  }
  Integer genus = 0;
  for (std::int64_t i = 1; i <= m; ++i) {
    genus += big(input.d - section[static_cast<std::size_t>(i)]);
  }
  for (const auto t : input.tail) {
    genus += big(t);
  }
  return genus;
}

TermEstimates term_estimate_intervals(long r, const Integer& s) {
  if (r < 4) {
    throw ValidationError("term estimates assume r >= 4, got r=" + std::to_string(r));
  }
  if (s < r - 1) {
    throw ValidationError("term estimates need s >= r-1 (r=" + std::to_string(r) + ", s=" + s.get_str() + ")");
  }
  const Integer k = r - 2;
  const Integer s2 = s * s;
  const Integer s3 = s2 * s;

  TermEstimates out;
  out.epsilonTerm = {-Rational(s2, 2 * k), Rational(s + 1, Integer(2))};
  out.pointSumTerm = {Rational(0), Rational(s3, 3 * k * k)};
  out.deltaSumTerm = {Rational(0), Rational(s2 * (s - 1), 2 * k)};
  out.tailTerm = {Rational(0), Rational(s3, 2 * k * k)};
  out.aggregate = {out.epsilonTerm.lo - out.pointSumTerm.hi + out.deltaSumTerm.lo + out.tailTerm.lo,
                   out.epsilonTerm.hi - out.pointSumTerm.lo + out.deltaSumTerm.hi + out.tailTerm.hi};
  out.envelope = {-Rational(s3, k), Rational(s3, k)};
  return out;
}

Rational acm_R(const Integer& epsilon, const Integer& s, const Integer& pi, const Integer& surfaceGenus,
               std::span<const std::int64_t> tail) {
  if (s < 1 || epsilon < 0 || epsilon > s - 1) {
    throw ValidationError("acm_R needs 0 <= eps <= s-1 (eps=" + epsilon.get_str() + ", s=" + s.get_str() + ")");
  }
  Integer tailSum = 0;
  for (const auto t : tail) {
    tailSum += big(t);
  }
  return epsilon_term(epsilon, s, pi) - Rational(surfaceGenus) + Rational(tailSum);
}

Integer tail_cap(long r, const Integer& s, const Integer& d, const Integer& pi) {
  const DivisionForm mEpsilon = split_m_epsilon(d, s);
  const DivisionForm wv = split_w_v(s, r);
  return wv.quotient * (mEpsilon.remainder + pi);
}

LemmaEvaluation evaluate_lemma(const LemmaInput& input, const LemmaOptions& options) {
  LemmaEvaluation out;
  out.quantities = validate_lemma_input(input, options);
  out.remainder = compute_R(input, options);
  out.genus = genus_from_lemma_input(input, options);
  out.mainBound = main_bound(big(input.d), big(input.s), out.quantities.pi, out.remainder.total);
  out.identityHolds = Rational(out.genus) == out.mainBound;
  const Integer s = big(input.s);
  const Rational envelope(s * s * s, Integer(input.r - 2));
  out.withinEnvelope = abs(out.remainder.total) <= envelope;
  return out;
}

}  // namespace flagbound
