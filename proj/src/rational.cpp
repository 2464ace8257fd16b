#include "cantor/rational.hpp"

#include <cctype>
#include <limits>

#include "cantor/error.hpp"

namespace cantor {

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

static bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  Integer num, den = 1;
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!parse_integer(s, num)) throw Error(Errc::parse_error, "bad rational '" + std::string(text) + "'");
  } else {
    if (!parse_integer(trim(s.substr(0, slash)), num) || !parse_integer(trim(s.substr(slash + 1)), den))
      throw Error(Errc::parse_error, "bad rational '" + std::string(text) + "'");
    if (den == 0) throw Error(Errc::division_by_zero, "zero denominator in '" + std::string(text) + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational sqrt_lower(const Rational& q, unsigned bits) {
  if (q <= 0) return 0;
  // floor(sqrt(num * den * 4^bits)) / (den * 2^bits)
  Integer scaled = q.get_num() * q.get_den();
  scaled <<= 2 * bits;
  Integer root = sqrt(scaled);
  Integer den = q.get_den();
  den <<= bits;
  Rational r(root, den);
  r.canonicalize();
  return r;
}

Rational sqrt_upper(const Rational& q, unsigned bits) {
  if (q <= 0) return 0;
  Integer scaled = q.get_num() * q.get_den();
  scaled <<= 2 * bits;
  Integer root = sqrt(scaled);
  if (root * root != scaled) root += 1;
  Integer den = q.get_den();
  den <<= bits;
  Rational r(root, den);
  r.canonicalize();
  return r;
}

Rational round_dyadic(const Rational& q, unsigned bits) {
  Integer num = q.get_num();
  num <<= bits;
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
  Integer den = 1;
  den <<= bits;
  Rational r(fl, den);
  r.canonicalize();
  return r;
}

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw Error(Errc::digit_out_of_range, "integer " + z.get_str() + " does not fit a machine word");
  return z.get_si();
}

}  // namespace cantor
