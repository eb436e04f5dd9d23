#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace flagbound {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Serializes as "p/q", or "p" when q = 1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& numerator, const Integer& denominator);

  /// Parses "p", "-p" or "p/q". Throws ValidationError on malformed text or q = 0.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  const mpq_class& raw() const { return value_; }

  std::string to_string() const;
  /// Decimal rendering with `digits` significant digits. Display only.
  std::string to_decimal(int digits = 20) const;

  Rational operator-() const { return from_raw(-value_); }
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  static Rational from_raw(mpq_class value);
  mpq_class value_;
};

Rational abs(const Rational& value);

/// Closed interval [lo, hi] with exact rational endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool within(const Interval& outer) const { return outer.lo <= lo && hi <= outer.hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

std::string to_string(const Integer& value);

/// C(n, k) with C(n, k) = 0 whenever n < k (including every negative n).
Integer binomial(const Integer& n, unsigned long k);

/// One factor base^(1/exponentDenominator) of a RadicalProduct.
struct RadicalFactor {
  Integer base;
  unsigned long exponentDenominator = 1;
};

/// scalar * prod_j base_j^(1/e_j). Bases are >= 1 and every e_j >= 1.
class RadicalProduct {
 public:
  explicit RadicalProduct(Rational scalar, std::vector<RadicalFactor> factors = {});

  const Rational& scalar() const { return scalar_; }
  const std::vector<RadicalFactor>& factors() const { return factors_; }

  /// Human-readable form, e.g. "4 * 24^(1/2) * 24".
  std::string to_string() const;
  /// Round-to-nearest decimal approximation with `digits` significant digits.
  std::string approximate(int digits = 20) const;

 private:
  Rational scalar_;
  std::vector<RadicalFactor> factors_;
};

enum class Ordering { less, equal, greater, undecided };

std::string_view to_string(Ordering ordering);

struct RadicalOptions {
  /// Largest permitted size, in decimal digits, of the integer powers formed
  /// by the exact comparison.
  std::size_t digitBudget = 1'000'000;
  /// Working precision of the directed-rounding fallback.
  std::size_t fallbackDigits = 256;
};

struct RadicalComparison {
  Ordering ordering = Ordering::undecided;
  /// False when the digit budget forced the interval fallback.
  bool exact = true;
};

/// Exact ordering of `lhs` against `rhs` (rhs.scalar() > 0, lhs >= 0).
///
/// Both sides are raised to L = lcm of the exponent denominators and the
/// resulting integers compared. When those powers would exceed the digit
/// budget the right side is enclosed with outward-rounded MPFR arithmetic;
/// an enclosure that still contains `lhs` yields Ordering::undecided.
RadicalComparison compare_radical(const Integer& lhs, const RadicalProduct& rhs,
                                  const RadicalOptions& options = {});

}  // namespace flagbound
