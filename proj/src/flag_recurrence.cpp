#include "flagbound/flag_recurrence.hpp"

#include <string>

#include "flagbound/castelnuovo.hpp"
#include "flagbound/errors.hpp"
#include "flagbound/hypothesis_checker.hpp"
#include "flagbound/lemma_engine.hpp"

namespace flagbound {

namespace {

std::string describe(long r, const std::vector<Integer>& degrees) {
  std::string out = "(" + std::to_string(r) + ";";
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    out += (i ? "," : "") + degrees[i].get_str();
  }
  return out + ")";
}

}  // namespace

FlagCondition::FlagCondition(long r, std::vector<Integer> degrees) : r_(r), degrees_(std::move(degrees)) {
  const std::string where = describe(r_, degrees_);
  const long l = static_cast<long>(degrees_.size());
  if (l < 1 || l > r_ - 1) {
    throw ValidationError("flag length must satisfy 1 <= l <= r-1 " + where);
  }
  for (long i = 1; i <= l; ++i) {
    if (degrees_[static_cast<std::size_t>(i - 1)] < r_ - i + 1) {
      throw ValidationError("s_" + std::to_string(i) + " must be >= r-i+1 = " + std::to_string(r_ - i + 1) + " " +
                            where);
    }
    if (i < l && degrees_[static_cast<std::size_t>(i - 1)] < degrees_[static_cast<std::size_t>(i)]) {
      throw ValidationError("degrees must be nonincreasing " + where);
    }
  }
}

FlagCondition FlagCondition::inner() const {
  if (degrees_.size() < 2) {
    throw ValidationError("a flag of length 1 has no inner flag " + describe(r_, degrees_));
  }
  return FlagCondition(r_ - 1, std::vector<Integer>(degrees_.begin() + 1, degrees_.end()));
}

Interval flag_genus_bounds(const FlagCondition& flag) {
  if (flag.length() == 1) {
    const Rational g(castelnuovo_bound(flag.r(), flag.degree(1)));
    return {g, g};
  }
  const Interval inner = flag_genus_bounds(flag.inner());
  const Integer& s1 = flag.degree(1);
  const Integer& s2 = flag.degree(2);
  const Rational quadratic(s1 * s1, 2 * s2);
  const Rational slope(s1, 2 * s2);
  const Rational radius(s2 * s2 * s2, Integer(flag.r() - 2));
  // slope > 0, so the affine map preserves the order of the endpoints.
  const auto affine = [&](const Rational& g) { return quadratic + slope * (Rational(2) * g - Rational(2) - Rational(s2)); };
  return {affine(inner.lo) - radius, affine(inner.hi) + radius};
}

GenusInterval flag_genus_interval(const FlagCondition& flag, const RadicalOptions& options) {
  GenusInterval out;
  out.bounds = flag_genus_bounds(flag);
  out.hypothesesVerified = flag.length() == 1 || check_flag_separation(flag, options).passed();
  return out;
}

Rational corollary_bound(long r, const Integer& d, const Integer& s, const Integer& pi) {
  if (r < 3 || s < r - 1 || pi < 0 || d < 1) {
    throw ValidationError("corollary_bound needs r >= 3, s >= r-1, pi >= 0, d >= 1 (r=" + std::to_string(r) +
                          ", d=" + d.get_str() + ", s=" + s.get_str() + ", pi=" + pi.get_str() + ")");
  }
  return main_bound(d, s, pi, Rational(s * s * s, Integer(r - 2)));
}

Rational corollary_alternative_bound(long r, const Integer& d, const Integer& s) {
  if (r < 3 || s + 1 < r - 1 || d < 1) {
    throw ValidationError("corollary_alternative_bound needs r >= 3, s+1 >= r-1, d >= 1 (r=" + std::to_string(r) +
                          ", d=" + d.get_str() + ", s=" + s.get_str() + ")");
  }
  const Integer next = s + 1;
  const Integer g = castelnuovo_bound(r - 1, next);
  return main_bound(d, next, g, Rational(next * next * next, Integer(r - 2)));
}

std::string_view to_string(CorollaryRegime regime) {
  return regime == CorollaryRegime::onSmallSurface ? "onSmallSurface" : "notOnDegreeS";
}

CorollaryReport corollary_dichotomy(long r, const Integer& d, const Integer& s, const Integer& pi,
                                    bool requireHypotheses, const RadicalOptions& options) {
  if (requireHypotheses) {
    const HypothesisReport report = check_corollary_degree(r, d, s, options);
    if (!report.passed()) {
      throw HypothesisFailure("corollary degree conditions are " + std::string(to_string(report.overall())) +
                              " for (r=" + std::to_string(r) + ", d=" + d.get_str() + ", s=" + s.get_str() + ")");
    }
  }
  CorollaryReport out;
  out.bindingBound = corollary_bound(r, d, s, pi);
  out.alternativeBound = corollary_alternative_bound(r, d, s);
  out.alternativeBelow = out.alternativeBound < out.bindingBound;
  out.regime = out.alternativeBelow ? CorollaryRegime::onSmallSurface : CorollaryRegime::notOnDegreeS;
  return out;
}

Rational speciality_bound(const Integer& d, const Integer& s, const Integer& pi) {
  if (s < 1) {
    throw ValidationError("speciality_bound needs s >= 1, got " + s.get_str());
  }
  return Rational(d, s) + Rational(2 * pi - 2 - s, s);
}

}  // namespace flagbound
