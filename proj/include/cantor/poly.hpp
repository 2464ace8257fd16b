#pragma once

#include <string>
#include <vector>

#include "cantor/rational.hpp"

namespace cantor {

// Dense univariate polynomials; index i holds the coefficient of x^i.
// Trailing zeros are removed, so the zero polynomial is the empty vector.
using QPoly = std::vector<Rational>;
using ZPoly = std::vector<Integer>;

struct Interval {
  Rational lo, hi;
};

struct Complex {
  Rational re, im;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
bool contains_zero(const Interval& a);

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Rational norm2(const Complex& a);

namespace poly {

void trim(QPoly& p);
void trim(ZPoly& p);
int degree(const QPoly& p);
int degree(const ZPoly& p);

QPoly to_q(const ZPoly& p);
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Rational& c);
QPoly derivative(const QPoly& a);
void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
QPoly rem(const QPoly& a, const QPoly& b);
QPoly monic(const QPoly& a);
QPoly gcd(const QPoly& a, const QPoly& b);
bool is_squarefree(const QPoly& p);

Rational eval(const QPoly& p, const Rational& x);
Interval eval(const QPoly& p, const Interval& x);
Complex eval(const QPoly& p, const Complex& z);
// Coefficients of p(c + h) as a polynomial in h.
std::vector<Complex> taylor_shift(const QPoly& p, const Complex& c);

std::vector<QPoly> sturm_chain(const QPoly& p);
// Number of distinct real roots in the half-open interval (a, b].
int count_real_roots(const std::vector<QPoly>& chain, const Rational& a, const Rational& b);
// A power of two strictly above the modulus of every complex root.
Rational root_bound(const QPoly& p);

// Irreducibility over Q of a primitive integer polynomial of degree >= 1.
bool is_irreducible(const ZPoly& p);

std::string to_string(const QPoly& p, const std::string& var);
std::string to_string(const ZPoly& p, const std::string& var);

}  // namespace poly
}  // namespace cantor
