#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/poly.hpp"
#include "cantor/rational.hpp"

namespace cantor {

class FieldElement;

namespace detail {
struct FieldData;
}

// Which real root of the minimal polynomial plays the role of the generator.
struct RootSelector {
  bool largest = true;
  Rational lo, hi;

  static RootSelector largest_real() { return {}; }
  static RootSelector between(const Rational& lo, const Rational& hi) { return {false, lo, hi}; }
  bool operator==(const RootSelector& o) const {
    return largest == o.largest && (largest || (lo == o.lo && hi == o.hi));
  }
};

// Axis-aligned box in the complex plane.
struct ComplexBox {
  Rational re_lo, re_hi, im_lo, im_hi;
  bool contains(double re, double im, double slack = 0.0) const;
};

enum class PisotVerdict { yes, no_not_pisot, no_wrong_degree };

struct PisotResult {
  PisotVerdict verdict;
  std::string detail;
};

const char* to_string(PisotVerdict v);

// Q(d) for a real algebraic integer d. Copies share the same root cache.
class NumberField {
 public:
  // The rational field, presented as Q(d) with d the root of x.
  NumberField();
  static NumberField make(const ZPoly& minpoly, const RootSelector& selector = RootSelector::largest_real());
  static NumberField parse(std::string_view text);

  int degree() const;
  const ZPoly& minpoly() const;
  const RootSelector& selector() const;
  Interval root_interval() const;
  // Boxes around every root of the minimal polynomial; the generator comes first,
  // then the other real roots in increasing order, then the non-real ones.
  std::vector<ComplexBox> conjugate_boxes(const Rational& width) const;
  std::size_t real_root_count() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement generator() const;
  FieldElement from_rational(const Rational& q) const;
  FieldElement from_coeffs(std::vector<Rational> coeffs) const;
  FieldElement parse_element(std::string_view text) const;

  std::string to_text() const;

  bool operator==(const NumberField& other) const;
  bool operator!=(const NumberField& other) const { return !(*this == other); }

  const detail::FieldData& data() const { return *data_; }

 private:
  explicit NumberField(std::shared_ptr<detail::FieldData> data) : data_(std::move(data)) {}
  std::shared_ptr<detail::FieldData> data_;
};

class FieldElement {
 public:
  FieldElement() = default;
  // Reduces an arbitrary-length coefficient list modulo the minimal polynomial.
  FieldElement(NumberField field, std::vector<Rational> coeffs);

  const NumberField& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  bool is_integral() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
  FieldElement inverse() const;

  int sign() const;
  Integer floor() const;
  Integer ceil() const;
  // Enclosure of the real value at the chosen root.
  Interval enclose() const;
  double approx() const;

  // "[r0, r1, ...]"
  std::string to_string() const;
  // Polynomial notation in the generator, e.g. "2*d + 1".
  std::string to_poly_string(const std::string& var = "d") const;

 private:
  NumberField field_;
  std::vector<Rational> coeffs_;
};

enum class ArithKind { add, sub, mul, div };
FieldElement arith(const FieldElement& a, const FieldElement& b, ArithKind kind);

int compare(const FieldElement& a, const FieldElement& b);
int compare(const FieldElement& a, const Rational& b);

// Characteristic polynomial of multiplication by a; its roots are the conjugates of a.
QPoly characteristic_polynomial(const FieldElement& a);
std::vector<ComplexBox> conjugate_values(const FieldElement& a, const Rational& precision);
Integer max_norm_floor(const FieldElement& p);
PisotResult is_pisot_of_degree_d(const FieldElement& a);

}  // namespace cantor
