#pragma once

// Reference computations that avoid the library code paths they check.

#include <gmpxx.h>

#include <vector>

#include "cantor/number_field.hpp"
#include "cantor/transducer.hpp"
#include "cantor/words.hpp"

namespace oracle {

// Sign of x + y*sqrt(5), by comparing squares.
inline int sign_sqrt5(const mpz_class& x, const mpz_class& y) {
  int sx = sgn(x), sy = sgn(y);
  if (sx == 0) return sy;
  if (sy == 0 || sx == sy) return sx;
  int c = cmp(x * x, 5 * y * y);
  return c == 0 ? 0 : (c > 0 ? sx : sy);
}

// floor(x + y*sqrt(5)).
inline mpz_class floor_sqrt5(const mpz_class& x, const mpz_class& y) {
  if (y == 0) return x;
  mpz_class r = sqrt(mpz_class(5 * y * y));  // floor of |y| sqrt(5), never exact
  return y > 0 ? mpz_class(x + r) : mpz_class(x - r - 1);
}

// floor(max(|a + b phi|, |a + b phi'|)) with phi, phi' = (1 +- sqrt 5) / 2.
inline mpz_class golden_norm_floor(long a, long b) {
  mpz_class best = 0;
  for (int s : {1, -1}) {
    mpz_class x = 2 * a + b, y = s * b;  // twice the conjugate value is x + y sqrt 5
    if (sign_sqrt5(x, y) < 0) x = -x, y = -y;
    mpz_class f = floor_sqrt5(x, y);
    mpz_class half = f / 2;  // f >= 0
    if (half > best) best = half;
  }
  return best;
}

// Checks the tail inequalities that characterize greedy (0 <= rest < weight)
// and quasi-greedy (0 < rest <= weight, r > 0) expansions, using partial sums only.
inline bool tail_inequalities_hold(const cantor::BaseAlphabet& e, const cantor::FieldElement& r,
                                   const cantor::Word& base, const cantor::Word& digits, cantor::Mode mode) {
  using cantor::FieldElement;
  const cantor::NumberField& f = e.field;
  FieldElement weight = f.one(), rest = r;
  for (std::size_t n = 0; n < digits.size(); ++n) {
    weight = weight / e.letters[static_cast<std::size_t>(base[n])];
    rest = rest - f.from_rational(digits[n]) * weight;
    int lo = rest.sign(), hi = (weight - rest).sign();
    if (mode == cantor::Mode::greedy ? (lo < 0 || hi <= 0) : (lo <= 0 || hi < 0)) return false;
  }
  return true;
}

// Digits produced by the same inequalities, one at a time, by trying every candidate.
inline cantor::Word expansion_by_inequalities(const cantor::BaseAlphabet& e, const cantor::FieldElement& r,
                                              const cantor::Word& base, cantor::Mode mode) {
  using cantor::FieldElement;
  const cantor::NumberField& f = e.field;
  FieldElement weight = f.one(), rest = r;
  cantor::Word out;
  for (int letter : base) {
    weight = weight / e.letters[static_cast<std::size_t>(letter)];
    int d = 0;
    for (;; ++d) {
      FieldElement next = rest - f.from_rational(d) * weight;
      bool ok = mode == cantor::Mode::greedy ? next.sign() >= 0 && (weight - next).sign() > 0
                                             : next.sign() > 0 && (weight - next).sign() >= 0;
      if (ok) break;
      if (next.sign() < 0 || d > 1000) return {};  // no digit fits
    }
    rest = rest - f.from_rational(d) * weight;
    out.push_back(d);
  }
  return out;
}

}  // namespace oracle
