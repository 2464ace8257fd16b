#include <cmath>
#include <random>

#include "cantor/error.hpp"
#include "cantor/number_field.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cantor;

namespace {

NumberField golden() { return NumberField::make({-1, -1, 1}); }

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::usage_error;
}

FieldElement random_element(const NumberField& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-30, 30), den(1, 7);
  std::vector<Rational> c;
  for (int i = 0; i < f.degree(); ++i) c.push_back(Rational(num(rng), den(rng)));
  return f.from_coeffs(c);
}

}  // namespace

TEST_CASE("field construction") {
  NumberField f = golden();
  Interval root = f.root_interval();
  CHECK(root.lo > 1);
  CHECK(root.hi < 2);
  CHECK(poly::eval(poly::to_q(f.minpoly()), root.lo) < 0);
  CHECK(poly::eval(poly::to_q(f.minpoly()), root.hi) > 0);
  CHECK(f.degree() == 2);
  CHECK(f.real_root_count() == 2);
  NumberField b = NumberField::make({-1, -1, 0, 1});
  CHECK(b.real_root_count() == 1);
  CHECK(std::abs(b.generator().approx() - 1.324717957244746) < 1e-12);
  CHECK(code_of([] { NumberField::make({-1, 0, 1}); }) == Errc::reducible_polynomial);
  CHECK(code_of([] { NumberField::make({-1, 0, 2}); }) == Errc::non_monic);
  CHECK(code_of([] { NumberField::make({1, 0, 1}); }) == Errc::no_real_root_in_interval);
  CHECK(code_of([] { NumberField::make({-1, -1, 1}, RootSelector::between(2, 3)); }) == Errc::no_real_root_in_interval);
  NumberField conj = NumberField::make({-1, -1, 1}, RootSelector::between(-1, 0));
  CHECK(std::abs(conj.generator().approx() + 0.6180339887498949) < 1e-12);
  CHECK(conj != f);
  CHECK(NumberField::parse(f.to_text()) == f);
  CHECK(NumberField::parse(conj.to_text()) == conj);
}

TEST_CASE("arithmetic reduces modulo the minimal polynomial") {
  NumberField f = golden();
  FieldElement phi = f.generator();
  CHECK(phi * phi == phi + f.one());
  CHECK(phi * phi * phi == f.from_rational(2) * phi + f.one());
  NumberField s = NumberField::make({-2, 0, 1});
  FieldElement g = s.one() + s.generator();
  CHECK(g * g == s.from_coeffs({3, 2}));
  CHECK(arith(g, g, ArithKind::mul) == s.from_coeffs({3, 2}));
  CHECK(arith(g * g, g, ArithKind::div) == g);
  CHECK(code_of([&] { phi / f.zero(); }) == Errc::division_by_zero);
  CHECK(code_of([&] { f.zero().inverse(); }) == Errc::division_by_zero);
  CHECK(code_of([&] { phi + g; }) == Errc::field_mismatch);
  CHECK(f.from_coeffs({1, 2, 3}) == f.from_coeffs({4, 5}));  // 3 d^2 = 3 d + 3
  CHECK(f.zero().coeffs() == std::vector<Rational>{0, 0});
}

TEST_CASE("sign, floor and ceiling") {
  NumberField f = golden();
  FieldElement phi = f.generator();
  CHECK(phi.floor() == 1);
  CHECK((phi * phi * phi - f.one()).ceil() == 4);
  CHECK(f.zero().floor() == 0);
  CHECK(f.zero().sign() == 0);
  CHECK((f.one() - phi).sign() == -1);
  CHECK((f.from_rational(3) - phi * phi).floor() == 0);  // 3 - phi^2 = 0.38...
  CHECK(f.from_rational(Rational(-7, 2)).floor() == -4);
  CHECK(f.from_rational(5).ceil() == 5);
  CHECK((phi * phi - phi).floor() == 1);  // exactly 1
  CHECK((phi * phi - phi).ceil() == 1);
}

TEST_CASE("order agrees with floating point away from ties") {
  std::mt19937 rng(5);
  for (const ZPoly& m : {ZPoly{-1, -1, 1}, ZPoly{-1, -1, 0, 1}, ZPoly{-1, -3, -3, 1}}) {
    NumberField f = NumberField::make(m);
    for (int t = 0; t < 300; ++t) {
      FieldElement a = random_element(f, rng);
      double v = a.approx();
      Interval box = a.enclose();
      CHECK(box.lo <= box.hi);
      CHECK(a.sign() == (v > 0) - (v < 0));
      if (std::abs(v - std::round(v)) > 1e-9) CHECK(a.floor() == static_cast<long>(std::floor(v)));
      CHECK(a.ceil() - a.floor() == (a.is_rational() && a.coeffs()[0].get_den() == 1 ? 0 : 1));
    }
  }
}

TEST_CASE("field laws on random elements") {
  std::mt19937 rng(9);
  NumberField f = NumberField::make({-1, -1, 0, 1});
  for (int t = 0; t < 300; ++t) {
    FieldElement a = random_element(f, rng), b = random_element(f, rng), c = random_element(f, rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == f.zero());
    if (!a.is_zero()) CHECK(a * a.inverse() == f.one());
    CHECK(compare(a + b, b + a) == 0);
    if (compare(a, b) < 0) CHECK(compare(a + c, b + c) < 0);
  }
}

TEST_CASE("characteristic polynomial annihilates the element") {
  NumberField f = NumberField::make({-1, -3, -3, 1});
  FieldElement g = f.generator();
  for (const FieldElement& a : {g, g * g, g * g * g, f.from_coeffs({2, -1, 1})}) {
    QPoly p = characteristic_polynomial(a);
    CHECK(poly::degree(p) == 3);
    FieldElement acc = f.zero(), pw = f.one();
    for (const Rational& c : p) {
      acc = acc + f.from_rational(c) * pw;
      pw = pw * a;
    }
    CHECK(acc.is_zero());
  }
  CHECK(characteristic_polynomial(f.generator()) == poly::to_q(f.minpoly()));
}

TEST_CASE("conjugate enclosures") {
  NumberField f = NumberField::make({-1, -1, 0, 1});
  auto boxes = f.conjugate_boxes(Rational(1, 1000));
  REQUIRE(boxes.size() == 3);
  CHECK(boxes[0].contains(1.324717957244746, 0, 1e-9));
  // the complex pair has modulus 1/sqrt(beta) < 1
  for (int i = 1; i < 3; ++i) {
    double re = (boxes[i].re_lo.get_d() + boxes[i].re_hi.get_d()) / 2;
    double im = (boxes[i].im_lo.get_d() + boxes[i].im_hi.get_d()) / 2;
    CHECK(std::abs(std::hypot(re, im) - 1 / std::sqrt(1.324717957244746)) < 1e-3);
  }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      CHECK((boxes[i].re_hi < boxes[j].re_lo || boxes[j].re_hi < boxes[i].re_lo || boxes[i].im_hi < boxes[j].im_lo ||
             boxes[j].im_hi < boxes[i].im_lo));
}

TEST_CASE("max norm floor against an integer oracle") {
  NumberField f = golden();
  for (long a = -12; a <= 12; ++a)
    for (long b = -12; b <= 12; ++b) CHECK(max_norm_floor(f.from_coeffs({Rational(a), Rational(b)})) == oracle::golden_norm_floor(a, b));
  CHECK(max_norm_floor(f.zero()) == 0);
  CHECK(max_norm_floor(f.generator()) == 1);
}

TEST_CASE("Pisot verification") {
  NumberField f = golden();
  FieldElement phi = f.generator();
  CHECK(is_pisot_of_degree_d(phi).verdict == PisotVerdict::yes);
  CHECK(is_pisot_of_degree_d(phi * phi * phi).verdict == PisotVerdict::yes);
  CHECK(is_pisot_of_degree_d(f.from_rational(4) * phi + f.one()).verdict == PisotVerdict::no_not_pisot);
  CHECK(is_pisot_of_degree_d(f.from_rational(2)).verdict == PisotVerdict::no_wrong_degree);
  CHECK(is_pisot_of_degree_d(f.one() - phi).verdict == PisotVerdict::no_not_pisot);
  NumberField b = NumberField::make({-1, -1, 0, 1});
  FieldElement beta = b.generator();
  CHECK(is_pisot_of_degree_d(beta).verdict == PisotVerdict::yes);
  CHECK(is_pisot_of_degree_d(beta * beta * beta).verdict == PisotVerdict::yes);
  CHECK(is_pisot_of_degree_d(b.from_coeffs({Rational(1, 2), 1})).verdict != PisotVerdict::yes);
  NumberField c = NumberField::make({-1, -3, -3, 1});
  FieldElement g = c.generator();
  CHECK(is_pisot_of_degree_d(g * g).verdict == PisotVerdict::yes);
  CHECK(is_pisot_of_degree_d(g * g * g).verdict == PisotVerdict::yes);
  NumberField s = NumberField::make({-2, 0, 1});
  FieldElement d = s.generator();
  for (auto [x, y] : std::vector<std::pair<long, long>>{{1, 1}, {2, 2}, {4, 3}, {5, 4}})
    CHECK(is_pisot_of_degree_d(s.from_coeffs({Rational(x), Rational(y)})).verdict == PisotVerdict::yes);
  CHECK(is_pisot_of_degree_d(s.from_coeffs({1, 2})).verdict == PisotVerdict::no_not_pisot);  // 1 - 2 sqrt 2 conjugate
}
