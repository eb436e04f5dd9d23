#pragma once

#include <string_view>

#include "flagbound/exact_arith.hpp"

namespace flagbound {

enum class DividendLabel { degree_d, degree_s };

std::string_view to_string(DividendLabel label);

/// dividend - 1 = quotient * modulus + remainder, 0 <= remainder < modulus.
struct DivisionForm {
  DividendLabel dividendLabel = DividendLabel::degree_d;
  Integer quotient;
  Integer remainder;
  Integer modulus;

  Integer dividend() const { return quotient * modulus + remainder + 1; }
};

/// d - 1 = m*s + epsilon. Requires d >= 1 and s >= 1.
DivisionForm split_m_epsilon(const Integer& d, const Integer& s);

/// s - 1 = w*(r-2) + v. Requires s >= 1 and r >= 3; r = 3 gives v = 0.
DivisionForm split_w_v(const Integer& s, long r);

}  // namespace flagbound
