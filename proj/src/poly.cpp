#include "cantor/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "cantor/error.hpp"

namespace cantor {

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator*(const Interval& a, const Interval& b) {
  if (a.lo >= 0 && b.lo >= 0) return {a.lo * b.lo, a.hi * b.hi};
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

bool contains_zero(const Interval& a) { return a.lo <= 0 && a.hi >= 0; }

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
  Rational n = norm2(b);
  if (n == 0) throw Error(Errc::division_by_zero, "complex division by zero");
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
Rational norm2(const Complex& a) { return a.re * a.re + a.im * a.im; }

namespace poly {

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
int degree(const QPoly& p) {
  QPoly q = p;
  trim(q);
  return static_cast<int>(q.size()) - 1;
}
int degree(const ZPoly& p) {
  ZPoly q = p;
  trim(q);
  return static_cast<int>(q.size()) - 1;
}

QPoly to_q(const ZPoly& p) {
  QPoly q(p.begin(), p.end());
  trim(q);
  return q;
}

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly scale(const QPoly& a, const Rational& c) {
  QPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  trim(r);
  return r;
}

QPoly derivative(const QPoly& a) {
  if (a.size() <= 1) return {};
  QPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i);
  trim(r);
  return r;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
  QPoly bb = b;
  trim(bb);
  if (bb.empty()) throw Error(Errc::division_by_zero, "polynomial division by zero");
  rem = a;
  trim(rem);
  quot.assign(rem.size() >= bb.size() ? rem.size() - bb.size() + 1 : 0, Rational(0));
  const Rational& lead = bb.back();
  while (rem.size() >= bb.size()) {
    std::size_t shift = rem.size() - bb.size();
    Rational c = rem.back() / lead;
    quot[shift] = c;
    for (std::size_t i = 0; i < bb.size(); ++i) rem[shift + i] -= c * bb[i];
    rem.pop_back();
    trim(rem);
  }
  trim(quot);
}

QPoly rem(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  divmod(a, b, q, r);
  return r;
}

QPoly monic(const QPoly& a) {
  QPoly r = a;
  trim(r);
  if (r.empty()) return r;
  return scale(r, 1 / r.back());
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  trim(x);
  trim(y);
  while (!y.empty()) {
    QPoly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

bool is_squarefree(const QPoly& p) { return degree(gcd(p, derivative(p))) == 0; }

Rational eval(const QPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

Interval eval(const QPoly& p, const Interval& x) {
  Interval acc{0, 0};
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * x;
    acc.lo += p[i];
    acc.hi += p[i];
  }
  return acc;
}

Complex eval(const QPoly& p, const Complex& z) {
  Complex acc{0, 0};
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * z;
    acc.re += p[i];
  }
  return acc;
}

std::vector<Complex> taylor_shift(const QPoly& p, const Complex& c) {
  std::vector<Complex> b;
  for (const Rational& x : p) b.push_back({x, 0});
  // Repeated synthetic division by (h - c).
  const std::size_t n = b.size();
  for (std::size_t k = 0; k + 1 < n; ++k)
    for (std::size_t i = n - 1; i-- > k;) b[i] = b[i] + c * b[i + 1];
  return b;
}

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain{p, derivative(p)};
  while (!chain.back().empty()) {
    QPoly r = rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    chain.push_back(scale(r, -1));
  }
  return chain;
}

static int sign_changes(const std::vector<QPoly>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const QPoly& q : chain) {
    int s = sgn(eval(q, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int count_real_roots(const std::vector<QPoly>& chain, const Rational& a, const Rational& b) {
  return sign_changes(chain, a) - sign_changes(chain, b);
}

Rational root_bound(const QPoly& p) {
  Rational m = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, Rational(abs(p[i] / p.back())));
  Rational bound = 1;
  while (bound <= m + 1) bound *= 2;
  return bound;
}

namespace {

using u64 = std::uint64_t;
using FpPoly = std::vector<u64>;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_rem(FpPoly a, const FpPoly& f, u64 p) {
  fp_trim(a);
  u64 inv = powmod(f.back(), p - 2, p);
  while (a.size() >= f.size()) {
    std::size_t shift = a.size() - f.size();
    u64 c = mulmod(a.back(), inv, p);
    for (std::size_t i = 0; i < f.size(); ++i) a[shift + i] = (a[shift + i] + p - mulmod(c, f[i], p)) % p;
    fp_trim(a);
  }
  return a;
}

FpPoly fp_div(FpPoly a, const FpPoly& f, u64 p) {
  fp_trim(a);
  FpPoly q(a.size() >= f.size() ? a.size() - f.size() + 1 : 0, 0);
  u64 inv = powmod(f.back(), p - 2, p);
  while (a.size() >= f.size()) {
    std::size_t shift = a.size() - f.size();
    u64 c = mulmod(a.back(), inv, p);
    q[shift] = c;
    for (std::size_t i = 0; i < f.size(); ++i) a[shift + i] = (a[shift + i] + p - mulmod(c, f[i], p)) % p;
    fp_trim(a);
  }
  return q;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  return fp_rem(r, f, p);
}

FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FpPoly r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

FpPoly fp_derivative(const FpPoly& a, u64 p) {
  FpPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(mulmod(a[i], i % p, p));
  fp_trim(r);
  return r;
}

// Degrees of the irreducible factors of a squarefree polynomial mod p.
std::vector<int> distinct_degree_pattern(FpPoly f, u64 p) {
  std::vector<int> degrees;
  FpPoly x{0, 1};
  FpPoly h = x;
  for (int i = 1; 2 * i <= static_cast<int>(f.size()) - 1; ++i) {
    // h = x^(p^i) mod f
    FpPoly base = h, acc{1};
    u64 e = p;
    while (e) {
      if (e & 1) acc = fp_mulmod(acc, base, f, p);
      base = fp_mulmod(base, base, f, p);
      e >>= 1;
    }
    h = acc;
    FpPoly hx = h;
    hx.resize(std::max<std::size_t>(hx.size(), 2), 0);
    hx[1] = (hx[1] + p - 1) % p;
    fp_trim(hx);
    FpPoly g = fp_gcd(hx, f, p);
    int gdeg = static_cast<int>(g.size()) - 1;
    if (gdeg > 0) {
      for (int k = 0; k < gdeg / i; ++k) degrees.push_back(i);
      f = fp_div(f, g, p);
      h = fp_rem(h, f, p);
    }
  }
  if (f.size() > 1) degrees.push_back(static_cast<int>(f.size()) - 1);
  return degrees;
}

std::vector<Integer> divisors(const Integer& n) {
  Integer m = abs(n);
  if (m > Integer("1000000000000")) throw Error(Errc::precision_exhausted, "value too large for factor search");
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      if (d * d != m) large.push_back(m / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  std::vector<Integer> out;
  for (const Integer& d : small) {
    out.push_back(d);
    out.push_back(-d);
  }
  return out;
}

// Kronecker's method: search for a monic factor of degree k.
bool has_factor_of_degree(const ZPoly& f, int k) {
  const QPoly fq = to_q(f);
  std::vector<Integer> xs, ys;
  for (long t = 0; static_cast<int>(xs.size()) <= k; ++t) {
    for (long x : {t, -t}) {
      if (t == 0 && !xs.empty()) continue;
      if (static_cast<int>(xs.size()) > k) break;
      Rational v = eval(fq, Rational(x));
      if (v == 0) return true;
      xs.push_back(x);
      ys.push_back(v.get_num());
    }
  }
  std::vector<std::vector<Integer>> choices;
  double combos = 1;
  for (const Integer& y : ys) {
    choices.push_back(divisors(y));
    combos *= static_cast<double>(choices.back().size());
  }
  if (combos > 5e6) throw Error(Errc::precision_exhausted, "factor search space too large");
  std::vector<std::size_t> idx(choices.size(), 0);
  while (true) {
    // Newton interpolation through (xs[i], choice[i]).
    std::vector<Rational> dd;
    for (std::size_t i = 0; i < idx.size(); ++i) dd.push_back(Rational(choices[i][idx[i]]));
    for (std::size_t j = 1; j < dd.size(); ++j)
      for (std::size_t i = dd.size() - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - j]);
    QPoly g{dd.back()};
    for (std::size_t i = dd.size() - 1; i-- > 0;) {
      g = mul(g, QPoly{Rational(-xs[i]), 1});
      g = add(g, QPoly{dd[i]});
    }
    if (degree(g) == k && g.back() == 1 &&
        std::all_of(g.begin(), g.end(), [](const Rational& c) { return c.get_den() == 1; }) &&
        rem(fq, g).empty())
      return true;
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  return false;
}

}  // namespace

bool is_irreducible(const ZPoly& p) {
  ZPoly f = p;
  trim(f);
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 0) return false;
  if (n == 1) return true;
  const QPoly fq = to_q(f);
  if (!is_squarefree(fq)) return false;
  if (f[0] == 0) return false;

  // Factor-degree sieve over small primes.
  std::vector<bool> possible(n + 1, true);
  static const u64 primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                               79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157};
  for (u64 pr : primes) {
    Integer lead = f.back() % Integer(static_cast<unsigned long>(pr));
    if (lead == 0) continue;
    FpPoly fp;
    for (const Integer& c : f) {
      Integer r;
      mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), pr);
      fp.push_back(r.get_ui());
    }
    if (fp_gcd(fp, fp_derivative(fp, pr), pr).size() > 1) continue;
    std::vector<int> degs = distinct_degree_pattern(fp, pr);
    std::vector<bool> sums(n + 1, false);
    sums[0] = true;
    for (int d : degs)
      for (int s = n; s >= d; --s)
        if (sums[s - d]) sums[s] = true;
    for (int k = 1; k < n; ++k) possible[k] = possible[k] && sums[k];
  }
  for (int k = 1; 2 * k <= n; ++k)
    if (possible[k] && f.back() == 1 && has_factor_of_degree(f, k)) return false;
  for (int k = 1; 2 * k <= n; ++k)
    if (possible[k] && f.back() != 1) throw Error(Errc::precision_exhausted, "non-monic factor search unsupported");
  return true;
}

template <typename Coeff>
static std::string poly_text(const std::vector<Coeff>& p, const std::string& var) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0) continue;
    Coeff c = p[i];
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      out << (neg ? "-" : "");
    else
      out << (neg ? " - " : " + ");
    first = false;
    if (i == 0 || c != 1) {
      out << c.get_str();
      if (i > 0) out << "*";
    }
    if (i >= 1) out << var;
    if (i >= 2) out << "^" << i;
  }
  if (first) out << "0";
  return out.str();
}

std::string to_string(const QPoly& p, const std::string& var) { return poly_text(p, var); }
std::string to_string(const ZPoly& p, const std::string& var) { return poly_text(p, var); }

}  // namespace poly
}  // namespace cantor
