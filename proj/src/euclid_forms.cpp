#include "flagbound/euclid_forms.hpp"

#include <string>

#include "flagbound/errors.hpp"

namespace flagbound {

namespace {

DivisionForm divide_predecessor(DividendLabel label, const Integer& dividend, const Integer& modulus) {
  DivisionForm out;
  out.dividendLabel = label;
  out.modulus = modulus;
  const Integer numerator = dividend - 1;
  mpz_fdiv_qr(out.quotient.get_mpz_t(), out.remainder.get_mpz_t(), numerator.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

}  // namespace

std::string_view to_string(DividendLabel label) {
  return label == DividendLabel::degree_d ? "degree_d" : "degree_s";
}

DivisionForm split_m_epsilon(const Integer& d, const Integer& s) {
  if (d < 1 || s < 1) {
    throw ValidationError("split_m_epsilon needs d >= 1 and s >= 1 (d=" + d.get_str() + ", s=" + s.get_str() + ")");
  }
  return divide_predecessor(DividendLabel::degree_d, d, s);
}

DivisionForm split_w_v(const Integer& s, long r) {
  if (s < 1 || r < 3) {
    throw ValidationError("split_w_v needs s >= 1 and r >= 3 (s=" + s.get_str() + ", r=" + std::to_string(r) + ")");
  }
  return divide_predecessor(DividendLabel::degree_s, s, Integer(r - 2));
}

}  // namespace flagbound
