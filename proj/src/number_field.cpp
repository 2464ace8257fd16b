#include "cantor/number_field.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>
#include <optional>
#include <sstream>

#include "cantor/error.hpp"

namespace cantor {

namespace detail {

struct RealRoot {
  Rational lo, hi;  // lo == hi only for degree one
  int sign_lo = 0;  // sign of the minimal polynomial at lo
};

struct Disk {
  Complex center;
  Rational radius;
};

struct FieldData {
  ZPoly minpoly;
  QPoly minpoly_q;
  int d = 1;
  RootSelector selector;
  // reduction[k] = coefficients of d^(deg + k) modulo the minimal polynomial
  std::vector<std::vector<Rational>> reduction;
  std::size_t chosen = 0;

  mutable std::mutex mutex;
  mutable std::vector<RealRoot> real_roots;
  mutable std::vector<Disk> disks;
  mutable std::vector<std::size_t> nonreal;
  mutable unsigned disk_bits = 0;

  RealRoot real_root(std::size_t k) const {
    std::lock_guard<std::mutex> lock(mutex);
    return real_roots[k];
  }

  void refine_real(std::size_t k, const Rational& width) const {
    std::lock_guard<std::mutex> lock(mutex);
    RealRoot& r = real_roots[k];
    while (r.hi - r.lo > width) {
      Rational mid = (r.lo + r.hi) / 2;
      int s = sgn(poly::eval(minpoly_q, mid));
      if (s == 0) {
        r.lo = r.hi = mid;
        break;
      }
      if (s == r.sign_lo)
        r.lo = mid;
      else
        r.hi = mid;
    }
  }

  std::vector<Disk> nonreal_disks(const Rational& max_radius) const;

 private:
  void seed_disks() const;
  bool certify(const Rational& max_radius) const;
};

void FieldData::seed_disks() const {
  using cplx = std::complex<long double>;
  std::vector<cplx> z(d);
  long double bound = poly::root_bound(minpoly_q).get_d();
  for (int i = 0; i < d; ++i)
    z[i] = std::polar<long double>(bound / 2, 2 * std::numbers::pi_v<long double> * i / d + 0.4L);
  auto eval = [&](cplx x) {
    cplx acc = 0;
    for (std::size_t i = minpoly_q.size(); i-- > 0;) acc = acc * x + cplx(minpoly_q[i].get_d(), 0);
    return acc;
  };
  for (int it = 0; it < 2000; ++it) {
    long double change = 0;
    for (int i = 0; i < d; ++i) {
      cplx den = 1;
      for (int j = 0; j < d; ++j)
        if (j != i) den *= z[i] - z[j];
      cplx step = eval(z[i]) / den;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-17L) break;
  }
  disk_bits = 53;
  disks.clear();
  for (int i = 0; i < d; ++i) {
    Rational re(static_cast<double>(z[i].real())), im(static_cast<double>(z[i].imag()));
    disks.push_back({{round_dyadic(re, disk_bits), round_dyadic(im, disk_bits)}, 0});
  }
}

// Recomputes inclusion radii from Weierstrass corrections; true when the disks
// are disjoint, separate real from non-real roots and are small enough.
bool FieldData::certify(const Rational& max_radius) const {
  std::vector<Complex> corr(d);
  for (int i = 0; i < d; ++i) {
    Complex den{1, 0};
    for (int j = 0; j < d; ++j)
      if (j != i) den = den * (disks[i].center - disks[j].center);
    if (norm2(den) == 0) return false;
    corr[i] = poly::eval(minpoly_q, disks[i].center) / den;
    disks[i].radius = sqrt_upper(norm2(corr[i]), disk_bits + 8) * d;
  }
  bool ok = true;
  for (int i = 0; i < d && ok; ++i)
    for (int j = i + 1; j < d && ok; ++j) {
      Rational s = disks[i].radius + disks[j].radius;
      if (norm2(disks[i].center - disks[j].center) <= s * s) ok = false;
    }
  if (ok) {
    std::vector<std::size_t> off_axis;
    for (int i = 0; i < d; ++i)
      if (abs(disks[i].center.im) > disks[i].radius) off_axis.push_back(i);
    if (off_axis.size() + real_roots.size() != static_cast<std::size_t>(d)) ok = false;
    for (std::size_t i : off_axis)
      if (disks[i].radius > max_radius) ok = false;
    if (ok) {
      nonreal = off_axis;
      return true;
    }
  }
  // Weierstrass step at the current precision, then raise the precision.
  for (int i = 0; i < d; ++i) {
    Complex next = disks[i].center - corr[i];
    disks[i].center = {round_dyadic(next.re, disk_bits), round_dyadic(next.im, disk_bits)};
  }
  disk_bits = std::min(2 * disk_bits, 1u << 15);
  return false;
}

std::vector<Disk> FieldData::nonreal_disks(const Rational& max_radius) const {
  std::lock_guard<std::mutex> lock(mutex);
  if (real_roots.size() == static_cast<std::size_t>(d)) return {};
  if (disks.empty()) seed_disks();
  int rounds = 0;
  while (!certify(max_radius)) {
    if (++rounds > 64) throw Error(Errc::precision_exhausted, "complex root isolation did not converge");
  }
  std::vector<Disk> out;
  for (std::size_t i : nonreal) out.push_back(disks[i]);
  return out;
}

}  // namespace detail

namespace {

using detail::FieldData;

std::vector<std::vector<Rational>> reduction_table(const QPoly& m, int d) {
  std::vector<std::vector<Rational>> table;
  std::vector<Rational> cur(d);
  for (int i = 0; i < d; ++i) cur[i] = -m[i];
  for (int k = 0; k + 1 < d; ++k) {
    table.push_back(cur);
    // multiply by the generator
    std::vector<Rational> next(d);
    Rational top = cur[d - 1];
    for (int i = d - 1; i > 0; --i) next[i] = cur[i - 1];
    next[0] = 0;
    for (int i = 0; i < d; ++i) next[i] -= top * m[i];
    cur = next;
  }
  return table;
}

void isolate(const std::vector<QPoly>& chain, const QPoly& p, const Rational& a, const Rational& b,
             std::vector<detail::RealRoot>& out) {
  int n = poly::count_real_roots(chain, a, b);
  if (n == 0) return;
  if (n == 1) {
    out.push_back({a, b, sgn(poly::eval(p, a))});
    return;
  }
  Rational mid = (a + b) / 2;
  isolate(chain, p, a, mid, out);
  isolate(chain, p, mid, b, out);
}

std::shared_ptr<FieldData> build_field(const ZPoly& minpoly_in, const RootSelector& selector) {
  ZPoly m = minpoly_in;
  poly::trim(m);
  if (m.size() < 2) throw Error(Errc::non_monic, "minimal polynomial must have degree at least 1");
  if (m.back() != 1) throw Error(Errc::non_monic, "leading coefficient must be 1");
  if (!poly::is_irreducible(m)) throw Error(Errc::reducible_polynomial, poly::to_string(m, "x"));

  auto data = std::make_shared<FieldData>();
  data->minpoly = m;
  data->minpoly_q = poly::to_q(m);
  data->d = static_cast<int>(m.size()) - 1;
  data->selector = selector;
  data->reduction = reduction_table(data->minpoly_q, data->d);

  if (data->d == 1) {
    Rational root = -data->minpoly_q[0];
    if (!selector.largest && (root < selector.lo || root > selector.hi))
      throw Error(Errc::no_real_root_in_interval, "root " + root.get_str() + " outside the given interval");
    data->real_roots.push_back({root, root, 0});
    data->chosen = 0;
    return data;
  }

  auto chain = poly::sturm_chain(data->minpoly_q);
  Rational bound = poly::root_bound(data->minpoly_q);
  isolate(chain, data->minpoly_q, -bound, bound, data->real_roots);
  if (selector.largest) {
    if (data->real_roots.empty()) throw Error(Errc::no_real_root_in_interval, "polynomial has no real root");
    data->chosen = data->real_roots.size() - 1;
  } else {
    if (selector.lo >= selector.hi) throw Error(Errc::no_real_root_in_interval, "empty interval");
    int inside = poly::count_real_roots(chain, selector.lo, selector.hi);
    if (inside != 1)
      throw Error(Errc::no_real_root_in_interval,
                  "interval contains " + std::to_string(inside) + " real roots, expected exactly one");
    data->chosen = static_cast<std::size_t>(poly::count_real_roots(chain, -bound, selector.lo));
  }
  return data;
}

const NumberField& rational_field() {
  static const NumberField q = NumberField::make(ZPoly{0, 1});
  return q;
}

std::vector<Rational> reduce(const FieldData& f, std::vector<Rational> c) {
  const std::size_t d = static_cast<std::size_t>(f.d);
  if (c.size() > 2 * d - 1) {
    QPoly p(c.begin(), c.end());
    p = poly::rem(p, f.minpoly_q);
    c.assign(p.begin(), p.end());
  }
  for (std::size_t k = c.size(); k-- > d;) {
    if (c[k] == 0) continue;
    const auto& row = f.reduction[k - d];
    for (std::size_t i = 0; i < d; ++i) c[i] += c[k] * row[i];
  }
  c.resize(d);
  return c;
}

QPoly as_poly(const FieldElement& a) {
  QPoly p(a.coeffs().begin(), a.coeffs().end());
  poly::trim(p);
  return p;
}

int sign_at_real(const FieldData& f, const QPoly& p, std::size_t k) {
  if (p.empty()) return 0;
  if (p.size() == 1) return sgn(p[0]);
  while (true) {
    detail::RealRoot r = f.real_root(k);
    Interval v = poly::eval(p, Interval{r.lo, r.hi});
    if (v.lo > 0) return 1;
    if (v.hi < 0) return -1;
    if (r.lo == r.hi) return sgn(v.lo);
    f.refine_real(k, (r.hi - r.lo) / 1024);
  }
}

Integer floor_at_real(const FieldData& f, const QPoly& p, std::size_t k) {
  if (p.empty()) return 0;
  if (p.size() == 1) return floor_of(p[0]);
  while (true) {
    detail::RealRoot r = f.real_root(k);
    Interval v = poly::eval(p, Interval{r.lo, r.hi});
    Integer fl = floor_of(v.lo), fh = floor_of(v.hi);
    if (fl == fh) return fl;
    if (fh == fl + 1) {
      int s = sign_at_real(f, poly::sub(p, QPoly{Rational(fh)}), k);
      return s >= 0 ? fh : fl;
    }
    f.refine_real(k, (r.hi - r.lo) / 1024);
  }
}

Interval enclose_at_real(const FieldData& f, const QPoly& p, std::size_t k, const Rational& width) {
  while (true) {
    detail::RealRoot r = f.real_root(k);
    Interval v = poly::eval(p, Interval{r.lo, r.hi});
    if (v.hi - v.lo <= width || r.lo == r.hi) return v;
    f.refine_real(k, (r.hi - r.lo) / 1024);
  }
}

// Disk containing p(z) for every z in the given disk.
detail::Disk eval_disk(const QPoly& p, const detail::Disk& z) {
  std::vector<Complex> t = poly::taylor_shift(p, z.center);
  if (t.empty()) return {{0, 0}, 0};
  Rational radius = 0, power = 1;
  for (std::size_t k = 1; k < t.size(); ++k) {
    power *= z.radius;
    radius += (abs(t[k].re) + abs(t[k].im)) * power;
  }
  return {t[0], radius};
}

// Other real roots in increasing order, generator excluded.
std::vector<std::size_t> other_real_roots(const FieldData& f) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < f.real_roots.size(); ++k)
    if (k != f.chosen) out.push_back(k);
  return out;
}

// Repeatedly shrinks the complex disks until `decide` returns a verdict.
template <typename Decide>
auto refine_nonreal(const FieldData& f, std::size_t index, Decide decide) {
  Rational target = Rational(1, 1 << 20);
  for (int round = 0; round < 60; ++round) {
    detail::Disk z = f.nonreal_disks(target)[index];
    if (auto verdict = decide(z)) return *verdict;
    target /= Rational(1 << 30);
  }
  throw Error(Errc::precision_exhausted, "could not separate a conjugate value from an integer boundary");
}

}  // namespace

bool ComplexBox::contains(double re, double im, double slack) const {
  return re_lo.get_d() - slack <= re && re <= re_hi.get_d() + slack && im_lo.get_d() - slack <= im &&
         im <= im_hi.get_d() + slack;
}

const char* to_string(PisotVerdict v) {
  switch (v) {
    case PisotVerdict::yes: return "yes";
    case PisotVerdict::no_not_pisot: return "no_not_pisot";
    case PisotVerdict::no_wrong_degree: return "no_wrong_degree";
  }
  return "?";
}

NumberField::NumberField() : data_(rational_field().data_) {}

NumberField NumberField::make(const ZPoly& minpoly, const RootSelector& selector) {
  return NumberField(build_field(minpoly, selector));
}

int NumberField::degree() const { return data_->d; }
const ZPoly& NumberField::minpoly() const { return data_->minpoly; }
const RootSelector& NumberField::selector() const { return data_->selector; }

Interval NumberField::root_interval() const {
  data_->refine_real(data_->chosen, Rational(1, 1024));
  auto r = data_->real_root(data_->chosen);
  return {r.lo, r.hi};
}

std::size_t NumberField::real_root_count() const { return data_->real_roots.size(); }

std::vector<ComplexBox> NumberField::conjugate_boxes(const Rational& width) const {
  return conjugate_values(generator(), width);
}

FieldElement NumberField::zero() const { return from_rational(0); }
FieldElement NumberField::one() const { return from_rational(1); }

FieldElement NumberField::generator() const {
  std::vector<Rational> c{0, 1};
  return FieldElement(*this, c);
}

FieldElement NumberField::from_rational(const Rational& q) const { return FieldElement(*this, {q}); }

FieldElement NumberField::from_coeffs(std::vector<Rational> coeffs) const {
  return FieldElement(*this, std::move(coeffs));
}

bool NumberField::operator==(const NumberField& other) const {
  if (data_ == other.data_) return true;
  return data_->minpoly == other.data_->minpoly && data_->chosen == other.data_->chosen;
}

std::string NumberField::to_text() const {
  std::ostringstream out;
  out << "field { minpoly = [";
  for (std::size_t i = 0; i < data_->minpoly.size(); ++i) out << (i ? ", " : "") << data_->minpoly[i].get_str();
  out << "]; root = ";
  if (data_->selector.largest)
    out << "largest";
  else
    out << "(" << data_->selector.lo.get_str() << ", " << data_->selector.hi.get_str() << ")";
  out << " }";
  return out.str();
}

namespace {

std::string strip(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_list(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(strip(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

NumberField NumberField::parse(std::string_view text) {
  std::string s = strip(text);
  auto fail = [&](const std::string& why) { return Error(Errc::parse_error, "field description: " + why); };
  if (s.rfind("field", 0) != 0) throw fail("expected 'field {'");
  auto open = s.find('{'), close = s.rfind('}');
  if (open == std::string::npos || close == std::string::npos || close < open) throw fail("missing braces");
  std::string body = s.substr(open + 1, close - open - 1);

  ZPoly minpoly;
  RootSelector selector;
  bool have_minpoly = false;
  for (const std::string& clause : split_list(body, ';')) {
    if (clause.empty()) continue;
    auto eq = clause.find('=');
    if (eq == std::string::npos) throw fail("expected 'key = value' in '" + clause + "'");
    std::string key = strip(clause.substr(0, eq)), value = strip(clause.substr(eq + 1));
    if (key == "minpoly") {
      if (value.size() < 2 || value.front() != '[' || value.back() != ']') throw fail("minpoly must be a list");
      for (const std::string& item : split_list(value.substr(1, value.size() - 2), ',')) {
        Rational q = parse_rational(item);
        if (q.get_den() != 1) throw fail("minpoly coefficients must be integers");
        minpoly.push_back(q.get_num());
      }
      have_minpoly = true;
    } else if (key == "root") {
      if (value == "largest") {
        selector = RootSelector::largest_real();
      } else {
        if (value.size() < 2 || value.front() != '(' || value.back() != ')') throw fail("root must be 'largest' or (lo, hi)");
        auto parts = split_list(value.substr(1, value.size() - 2), ',');
        if (parts.size() != 2) throw fail("root interval needs two endpoints");
        selector = RootSelector::between(parse_rational(parts[0]), parse_rational(parts[1]));
      }
    } else {
      throw fail("unknown key '" + key + "'");
    }
  }
  if (!have_minpoly) throw fail("missing minpoly");
  return make(minpoly, selector);
}

FieldElement NumberField::parse_element(std::string_view text) const {
  std::string s = strip(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw Error(Errc::parse_error, "element must be written as [r0, ..., r_{d-1}]");
  std::vector<Rational> c;
  std::string inner = s.substr(1, s.size() - 2);
  if (!strip(inner).empty())
    for (const std::string& item : split_list(inner, ',')) c.push_back(parse_rational(item));
  if (c.size() > static_cast<std::size_t>(degree()))
    throw Error(Errc::parse_error, "too many coefficients for a field of degree " + std::to_string(degree()));
  return from_coeffs(std::move(c));
}

FieldElement::FieldElement(NumberField field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(reduce(field_.data(), std::move(coeffs))) {
  for (auto& c : coeffs_) c.canonicalize();
}

bool FieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

static void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field()) throw Error(Errc::field_mismatch, "operands belong to different fields");
}

FieldElement FieldElement::operator-() const {
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x = -x;
  return FieldElement(field_, std::move(c));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  std::vector<Rational> c = a.coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  std::vector<Rational> c = a.coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs_[i];
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  const std::size_t d = a.coeffs_.size();
  std::vector<Rational> c(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return a * b.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
  QPoly r0 = field_.data().minpoly_q, r1 = as_poly(*this);
  QPoly s0, s1{1};
  while (!r1.empty()) {
    QPoly q, r;
    poly::divmod(r0, r1, q, r);
    QPoly s = poly::sub(s0, poly::mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant because the minimal polynomial is irreducible.
  QPoly inv = poly::scale(s0, 1 / r0[0]);
  return FieldElement(field_, std::vector<Rational>(inv.begin(), inv.end()));
}

int FieldElement::sign() const { return sign_at_real(field_.data(), as_poly(*this), field_.data().chosen); }
Integer FieldElement::floor() const { return floor_at_real(field_.data(), as_poly(*this), field_.data().chosen); }
Integer FieldElement::ceil() const { return -(-*this).floor(); }

Interval FieldElement::enclose() const {
  const auto& f = field_.data();
  auto r = f.real_root(f.chosen);
  return poly::eval(as_poly(*this), Interval{r.lo, r.hi});
}

double FieldElement::approx() const {
  const auto& f = field_.data();
  Interval v = enclose_at_real(f, as_poly(*this), f.chosen, Rational(1, 1) / Rational(Integer(1) << 60));
  return Rational((v.lo + v.hi) / 2).get_d();
}

std::string FieldElement::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) s += (i ? ", " : "") + coeffs_[i].get_str();
  return s + "]";
}

std::string FieldElement::to_poly_string(const std::string& var) const { return poly::to_string(as_poly(*this), var); }

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::add: return a + b;
    case ArithKind::sub: return a - b;
    case ArithKind::mul: return a * b;
    case ArithKind::div: return a / b;
  }
  return a;
}

int compare(const FieldElement& a, const FieldElement& b) { return (a - b).sign(); }
int compare(const FieldElement& a, const Rational& b) { return (a - a.field().from_rational(b)).sign(); }

QPoly characteristic_polynomial(const FieldElement& a) {
  const int d = a.field().degree();
  using Matrix = std::vector<std::vector<Rational>>;
  Matrix m(d, std::vector<Rational>(d));
  FieldElement col = a;
  const FieldElement gen = a.field().generator();
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) m[i][j] = col.coeffs()[i];
    col = col * gen;
  }
  auto mul = [d](const Matrix& x, const Matrix& y) {
    Matrix z(d, std::vector<Rational>(d));
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k)
        if (x[i][k] != 0)
          for (int j = 0; j < d; ++j) z[i][j] += x[i][k] * y[k][j];
    return z;
  };
  // Faddeev-LeVerrier
  QPoly c(d + 1);
  c[d] = 1;
  Matrix mk(d, std::vector<Rational>(d));
  for (int k = 1; k <= d; ++k) {
    mk = mul(m, mk);
    for (int i = 0; i < d; ++i) mk[i][i] += c[d - k + 1];
    Matrix am = mul(m, mk);
    Rational tr = 0;
    for (int i = 0; i < d; ++i) tr += am[i][i];
    c[d - k] = -tr / k;
  }
  return c;
}

std::vector<ComplexBox> conjugate_values(const FieldElement& a, const Rational& precision) {
  const auto& f = a.field().data();
  const QPoly p = as_poly(a);
  std::vector<ComplexBox> out;
  std::vector<std::size_t> order{f.chosen};
  for (std::size_t k : other_real_roots(f)) order.push_back(k);
  for (std::size_t k : order) {
    Interval v = p.empty() ? Interval{0, 0} : enclose_at_real(f, p, k, precision);
    out.push_back({v.lo, v.hi, 0, 0});
  }
  std::size_t nonreal = static_cast<std::size_t>(f.d) - f.real_roots.size();
  for (std::size_t i = 0; i < nonreal; ++i) {
    Rational target = precision;
    while (true) {
      detail::Disk z = f.nonreal_disks(target)[i];
      detail::Disk v = eval_disk(p, z);
      if (2 * v.radius <= precision) {
        out.push_back({v.center.re - v.radius, v.center.re + v.radius, v.center.im - v.radius, v.center.im + v.radius});
        break;
      }
      target /= 1024;
    }
  }
  return out;
}

Integer max_norm_floor(const FieldElement& p) {
  if (p.is_zero()) return 0;
  const auto& f = p.field().data();
  const QPoly poly = as_poly(p);
  Integer best = 0;
  for (std::size_t k = 0; k < f.real_roots.size(); ++k) {
    int s = sign_at_real(f, poly, k);
    Integer v = floor_at_real(f, s < 0 ? poly::scale(poly, -1) : poly, k);
    best = std::max(best, v);
  }
  std::size_t nonreal = static_cast<std::size_t>(f.d) - f.real_roots.size();
  for (std::size_t i = 0; i < nonreal; ++i) {
    Integer v = refine_nonreal(f, i, [&](const detail::Disk& z) -> std::optional<Integer> {
      detail::Disk w = eval_disk(poly, z);
      Rational m2 = norm2(w.center);
      Rational lo = sqrt_lower(m2, 128) - w.radius, hi = sqrt_upper(m2, 128) + w.radius;
      if (lo < 0) lo = 0;
      if (floor_of(lo) == floor_of(hi)) return floor_of(lo);
      return std::nullopt;
    });
    best = std::max(best, v);
  }
  return best;
}

PisotResult is_pisot_of_degree_d(const FieldElement& a) {
  if (!a.is_integral()) return {PisotVerdict::no_not_pisot, "not integral: coefficients are not all integers"};
  if (compare(a, Rational(1)) <= 0) return {PisotVerdict::no_not_pisot, "not greater than 1"};
  const auto& f = a.field().data();
  QPoly chi = characteristic_polynomial(a);
  if (!poly::is_squarefree(chi)) return {PisotVerdict::no_wrong_degree, "algebraic degree below the field degree"};

  const QPoly p = as_poly(a);
  for (std::size_t k : other_real_roots(f)) {
    bool below = sign_at_real(f, poly::sub(p, QPoly{1}), k) < 0;
    bool above = sign_at_real(f, poly::add(p, QPoly{1}), k) > 0;
    if (!(below && above)) return {PisotVerdict::no_not_pisot, "a real conjugate has modulus at least 1"};
  }
  std::size_t nonreal = static_cast<std::size_t>(f.d) - f.real_roots.size();
  if (nonreal == 0) return {PisotVerdict::yes, ""};

  // A conjugate on the unit circle forces a self-reciprocal characteristic
  // polynomial, which for degree >= 3 already rules out the Pisot property.
  const int d = f.d;
  bool reciprocal = true;
  for (int sign : {1, -1}) {
    reciprocal = true;
    for (int i = 0; i <= d; ++i)
      if (chi[i] != sign * chi[d - i]) reciprocal = false;
    if (reciprocal) break;
  }
  if (reciprocal) return {PisotVerdict::no_not_pisot, "self-reciprocal conjugates"};

  for (std::size_t i = 0; i < nonreal; ++i) {
    bool inside = refine_nonreal(f, i, [&](const detail::Disk& z) -> std::optional<bool> {
      detail::Disk w = eval_disk(p, z);
      Rational m2 = norm2(w.center);
      if (sqrt_upper(m2, 128) + w.radius < 1) return true;
      if (sqrt_lower(m2, 128) - w.radius > 1) return false;
      return std::nullopt;
    });
    if (!inside) return {PisotVerdict::no_not_pisot, "a complex conjugate has modulus above 1"};
  }
  return {PisotVerdict::yes, ""};
}

}  // namespace cantor
