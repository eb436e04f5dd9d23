#include "flagbound/exact_arith.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include <mpfr.h>

#include "flagbound/errors.hpp"

namespace flagbound {

namespace {

constexpr double kBitsPerDigit = 3.3219280948873623;  // log2(10)

// Owning wrapper around an mpfr_t.
class Real {
 public:
  explicit Real(mpfr_prec_t precision) { mpfr_init2(value_, precision); }
  ~Real() { mpfr_clear(value_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

 private:
  mpfr_t value_;
};

mpfr_prec_t bits_for_digits(std::size_t digits) {
  return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * kBitsPerDigit)) + 16;
}

std::string format_real(const Real& x, int digits) {
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Rg", digits, x.get());
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

// Encloses scalar * prod base^(1/e) from below (MPFR_RNDD) or above (MPFR_RNDU).
// Every quantity is positive, so rounding each step in one direction bounds the
// product in that direction.
void evaluate_directed(const RadicalProduct& value, mpfr_rnd_t rounding, Real& out) {
  mpfr_set_q(out.get(), value.scalar().raw().get_mpq_t(), rounding);
  Real term(mpfr_get_prec(out.get()));
  for (const auto& factor : value.factors()) {
    mpfr_set_z(term.get(), factor.base.get_mpz_t(), rounding);
    mpfr_rootn_ui(term.get(), term.get(), factor.exponentDenominator, rounding);
    mpfr_mul(out.get(), out.get(), term.get(), rounding);
  }
}

}  // namespace

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) {
    throw ValidationError("rational with zero denominator: " + numerator.get_str() + "/0");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::from_raw(mpq_class value) {
  Rational out;
  out.value_ = std::move(value);
  out.value_.canonicalize();
  return out;
}

Rational Rational::parse(std::string_view text) {
  const auto malformed = [&] { return ValidationError("malformed rational: \"" + std::string(text) + "\""); };
  const auto parse_integer = [&](std::string_view digits, bool allowSign) {
    std::size_t pos = 0;
    if (allowSign && !digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
      pos = 1;
    }
    if (pos == digits.size()) {
      throw malformed();
    }
    for (std::size_t i = pos; i < digits.size(); ++i) {
      if (digits[i] < '0' || digits[i] > '9') {
        throw malformed();
      }
    }
    std::string s(digits);
    if (s[0] == '+') {
      s.erase(0, 1);
    }
    return Integer(s, 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, true));
  }
  return Rational(parse_integer(text.substr(0, slash), true), parse_integer(text.substr(slash + 1), false));
}

std::string Rational::to_string() const {
  if (is_integer()) {
    return value_.get_num().get_str();
  }
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int digits) const {
  Real x(bits_for_digits(static_cast<std::size_t>(digits) + 10));
  mpfr_set_q(x.get(), value_.get_mpq_t(), MPFR_RNDN);
  return format_real(x, digits);
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  value_.canonicalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  value_.canonicalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  value_.canonicalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.sign() == 0) {
    throw ValidationError("division by zero: " + to_string() + " / 0");
  }
  value_ /= rhs.value_;
  value_.canonicalize();
  return *this;
}

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

std::string to_string(const Integer& value) { return value.get_str(); }

Integer binomial(const Integer& n, unsigned long k) {
  if (n < 0 || n < k) {
    return 0;
  }
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
  return out;
}

RadicalProduct::RadicalProduct(Rational scalar, std::vector<RadicalFactor> factors)
    : scalar_(std::move(scalar)), factors_(std::move(factors)) {
  for (const auto& factor : factors_) {
    if (factor.base < 1) {
      throw ValidationError("radical base must be >= 1, got " + factor.base.get_str());
    }
    if (factor.exponentDenominator < 1) {
      throw ValidationError("radical exponent denominator must be >= 1");
    }
  }
}

std::string RadicalProduct::to_string() const {
  std::ostringstream out;
  out << scalar_.to_string();
  for (const auto& factor : factors_) {
    out << " * " << factor.base.get_str();
    if (factor.exponentDenominator != 1) {
      out << "^(1/" << factor.exponentDenominator << ")";
    }
  }
  return out.str();
}

std::string RadicalProduct::approximate(int digits) const {
  Real x(bits_for_digits(static_cast<std::size_t>(digits) + 10));
  evaluate_directed(*this, MPFR_RNDN, x);
  return format_real(x, digits);
}

std::string_view to_string(Ordering ordering) {
  switch (ordering) {
    case Ordering::less: return "less";
    case Ordering::equal: return "equal";
    case Ordering::greater: return "greater";
    case Ordering::undecided: return "undecided";
  }
  return "undecided";
}

RadicalComparison compare_radical(const Integer& lhs, const RadicalProduct& rhs, const RadicalOptions& options) {
  if (rhs.scalar().sign() <= 0) {
    throw ValidationError("compare_radical requires a positive scalar, got " + rhs.scalar().to_string());
  }
  if (lhs < 0) {
    throw ValidationError("compare_radical requires lhs >= 0, got " + lhs.get_str());
  }

  // L = lcm of exponent denominators, and the bit size of both sides after
  // raising to the L-th power: lhs^L * q^L  versus  p^L * prod base^(L/e).
  Integer lcm = 1;
  for (const auto& factor : rhs.factors()) {
    mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), factor.exponentDenominator);
  }
  const Integer p = rhs.scalar().numerator();
  const Integer q = rhs.scalar().denominator();
  const auto bits = [](const Integer& x) { return Integer(static_cast<unsigned long>(mpz_sizeinbase(x.get_mpz_t(), 2))); };
  Integer leftBits = lcm * (bits(lhs) + bits(q));
  Integer rightBits = lcm * bits(p);
  for (const auto& factor : rhs.factors()) {
    rightBits += (lcm / factor.exponentDenominator) * bits(factor.base);
  }
  const Integer budgetBits(static_cast<unsigned long>(std::ceil(static_cast<double>(options.digitBudget) * kBitsPerDigit)));

  if (lcm.fits_ulong_p() && leftBits <= budgetBits && rightBits <= budgetBits) {
    const unsigned long power = lcm.get_ui();
    Integer left, right, term;
    mpz_pow_ui(left.get_mpz_t(), lhs.get_mpz_t(), power);
    mpz_pow_ui(term.get_mpz_t(), q.get_mpz_t(), power);
    left *= term;
    mpz_pow_ui(right.get_mpz_t(), p.get_mpz_t(), power);
    for (const auto& factor : rhs.factors()) {
      mpz_pow_ui(term.get_mpz_t(), factor.base.get_mpz_t(), power / factor.exponentDenominator);
      right *= term;
    }
    const int c = cmp(left, right);
    return {c < 0 ? Ordering::less : (c > 0 ? Ordering::greater : Ordering::equal), true};
  }

  const mpfr_prec_t precision = bits_for_digits(options.fallbackDigits);
  Real lo(precision);
  Real hi(precision);
  evaluate_directed(rhs, MPFR_RNDD, lo);
  evaluate_directed(rhs, MPFR_RNDU, hi);
  if (mpfr_cmp_z(lo.get(), lhs.get_mpz_t()) > 0) {
    return {Ordering::less, false};
  }
  if (mpfr_cmp_z(hi.get(), lhs.get_mpz_t()) < 0) {
    return {Ordering::greater, false};
  }
  return {Ordering::undecided, false};
}

}  // namespace flagbound
