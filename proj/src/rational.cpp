#include "qshuffle/rational.hpp"

#include <cctype>

#include "qshuffle/error.hpp"

namespace qshuffle {

Rational rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::config_error, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

namespace {

mpz_class parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!valid_integer(num) || !valid_integer(den))
    throw Error(ErrorKind::syntax_error,
                "bad rational '" + std::string(text) + "': expected p or p/q");
  mpz_class d = parse_integer(den);
  if (d == 0)
    throw Error(ErrorKind::syntax_error,
                "bad rational '" + std::string(text) + "': zero denominator");
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  return value.get_str();
}

Rational rational_pow(const Rational& base, unsigned exponent) {
  Rational acc = 1;
  Rational b = base;
  unsigned e = exponent;
  while (e > 0) {
    if (e & 1u) acc *= b;
    b *= b;
    e >>= 1u;
  }
  return acc;
}

Rational binomial(unsigned n, unsigned k) {
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), n, k);
  return Rational(z);
}

}  // namespace qshuffle
