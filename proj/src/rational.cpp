#include "jetvar/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace jetvar {

Rational rational_from_string(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto dot = s.find('.');
  if (dot == std::string::npos) {
    Rational r(s, 10);
    r.canonicalize();
    return r;
  }
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  const std::size_t decimals = s.size() - dot - 1;
  if (digits.empty() || digits == "-") throw std::invalid_argument("bad decimal literal: " + s);
  mpz_class numerator(digits, 10);
  mpz_class denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), 10, decimals);
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite double has no rational value");
  Rational r;
  mpq_set_d(r.get_mpq_t(), value);
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

}  // namespace jetvar
