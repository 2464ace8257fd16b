#include <random>

#include "cantor/error.hpp"
#include "cantor/expr.hpp"
#include "cantor/poly.hpp"
#include "cantor/rational.hpp"
#include "doctest.h"

using namespace cantor;

namespace {

QPoly random_poly(std::mt19937& rng, int deg, int range) {
  std::uniform_int_distribution<int> c(-range, range);
  QPoly p;
  for (int i = 0; i <= deg; ++i) p.push_back(Rational(c(rng)));
  poly::trim(p);
  return p;
}

ZPoly to_z(const QPoly& p) {
  ZPoly z;
  for (const Rational& c : p) z.push_back(c.get_num());
  return z;
}

}  // namespace

TEST_CASE("rational parsing and rounding") {
  CHECK(parse_rational("932/3885") == Rational(932, 3885));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational(" 7 ") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  try {
    parse_rational("3/0");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::division_by_zero);
  }
  CHECK(floor_of(Rational(-7, 2)) == -4);
  CHECK(ceil_of(Rational(-7, 2)) == -3);
  CHECK(floor_of(Rational(6, 3)) == 2);
  CHECK(ceil_of(Rational(6, 3)) == 2);
  CHECK(to_string(make_rational(-3, 6)) == "-1/2");
}

TEST_CASE("square root bounds bracket the root") {
  for (int q : {0, 1, 2, 5, 10, 99}) {
    Rational lo = sqrt_lower(Rational(q), 40), hi = sqrt_upper(Rational(q), 40);
    CHECK(lo * lo <= q);
    CHECK(hi * hi >= q);
    CHECK(hi - lo < Rational(1, 1 << 20));
  }
}

TEST_CASE("division identity on random polynomials") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    QPoly a = random_poly(rng, 6, 9), b = random_poly(rng, 3, 9);
    if (b.empty()) continue;
    QPoly q, r;
    poly::divmod(a, b, q, r);
    CHECK(poly::add(poly::mul(q, b), r) == a);
    CHECK(poly::degree(r) < poly::degree(b));
  }
}

TEST_CASE("gcd and squarefreeness") {
  QPoly a{-1, 0, 1}, b{1, 1};  // x^2 - 1 and x + 1
  CHECK(poly::gcd(a, b) == QPoly{1, 1});
  CHECK(poly::is_squarefree(a));
  CHECK_FALSE(poly::is_squarefree(poly::mul(a, b)));
}

TEST_CASE("Sturm counts and root bound") {
  QPoly p{-2, 0, 1};
  auto chain = poly::sturm_chain(p);
  CHECK(poly::count_real_roots(chain, 0, 2) == 1);
  CHECK(poly::count_real_roots(chain, -2, 2) == 2);
  CHECK(poly::count_real_roots(chain, Rational(3, 2), 2) == 0);
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    QPoly q = random_poly(rng, 5, 20);
    if (poly::degree(q) < 1) continue;
    QPoly sf = poly::monic(q);
    QPoly g = poly::gcd(sf, poly::derivative(sf));
    QPoly rest, r;
    poly::divmod(sf, g, rest, r);
    Rational bound = poly::root_bound(rest);
    auto c = poly::sturm_chain(rest);
    CHECK(poly::count_real_roots(c, -bound, bound) == poly::count_real_roots(c, -1000 * bound, 1000 * bound));
  }
}

TEST_CASE("irreducibility") {
  CHECK(poly::is_irreducible({-1, -1, 1}));
  CHECK(poly::is_irreducible({-1, -1, 0, 1}));
  CHECK(poly::is_irreducible({-1, -3, -3, 1}));
  CHECK(poly::is_irreducible({-2, 0, 0, 0, 1}));
  CHECK_FALSE(poly::is_irreducible({-1, 0, 1}));
  CHECK_FALSE(poly::is_irreducible({4, 0, 0, 0, 1}));     // (x^2+2x+2)(x^2-2x+2)
  CHECK_FALSE(poly::is_irreducible({1, 1, 2, 1, 1}));     // (x^2+1)(x^2+x+1)
  CHECK_FALSE(poly::is_irreducible({0, -1, 0, 1}));       // x(x^2-1)
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    QPoly a = random_poly(rng, 2, 5), b = random_poly(rng, 2, 5);
    a.resize(3, 0), b.resize(3, 0);
    a[2] = 1, b[2] = 1;
    CHECK_FALSE(poly::is_irreducible(to_z(poly::mul(a, b))));
  }
}

TEST_CASE("expression parser") {
  CHECK(parse_polynomial("x^2-x-1", 'x') == QPoly{-1, -1, 1});
  CHECK(parse_polynomial("2*d+1", 'd') == QPoly{1, 2});
  CHECK(parse_polynomial("2d + 1", 'd') == QPoly{1, 2});
  CHECK(parse_polynomial("(1+d)^2", 'd') == QPoly{1, 2, 1});
  CHECK(parse_polynomial("932/3885", 'd') == QPoly{Rational(932, 3885)});
  CHECK(parse_polynomial("-d^3 + 3", 'd') == QPoly{3, 0, 0, -1});
  CHECK(parse_polynomial("d - d", 'd').empty());
  for (const char* bad : {"x^", "d/d", "2*(d", "d+", "y", "1/0"}) CHECK_THROWS_AS(parse_polynomial(bad, 'd'), Error);
  try {
    parse_polynomial("2*(d", 'd');
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
  CHECK(split_top_level("d, 2*d+1 ,(1, 2)") == std::vector<std::string>{"d", "2*d+1", "(1, 2)"});
}

TEST_CASE("field arguments") {
  NumberField f = parse_field("x^2-x-1");
  CHECK(f.minpoly() == ZPoly{-1, -1, 1});
  CHECK(parse_field("x").degree() == 1);
  CHECK(parse_field(f.to_text()) == f);
  CHECK_THROWS_AS(parse_field("x^2/2-1"), Error);
  FieldElement phi3 = parse_field_element(f, "d^3");
  CHECK(phi3 == parse_field_element(f, "2*d+1"));
  CHECK(parse_field_element(f, "[1, 2]") == parse_field_element(f, "1+2d"));
}
