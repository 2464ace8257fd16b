#include "cantor/expr.hpp"

#include <cctype>

#include "cantor/error.hpp"

namespace cantor {

namespace {

class Parser {
 public:
  Parser(std::string_view text, char var) : s_(text), var_(var) {}

  QPoly parse() {
    QPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::parse_error, why + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == var_ || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  QPoly expr() {
    QPoly acc = term();
    while (true) {
      if (eat('+'))
        acc = poly::add(acc, term());
      else if (eat('-'))
        acc = poly::sub(acc, term());
      else
        return acc;
    }
  }

  QPoly term() {
    QPoly acc = unary();
    while (true) {
      if (eat('*')) {
        acc = poly::mul(acc, unary());
      } else if (eat('/')) {
        QPoly d = unary();
        if (poly::degree(d) > 0) fail("division by a non-constant");
        if (d.empty()) fail("division by zero");
        acc = poly::scale(acc, 1 / d[0]);
      } else if (starts_atom()) {
        acc = poly::mul(acc, power());
      } else {
        return acc;
      }
    }
  }

  QPoly unary() {
    if (eat('-')) return poly::scale(unary(), -1);
    if (eat('+')) return unary();
    return power();
  }

  QPoly power() {
    QPoly base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      if (e > 64) fail("exponent too large");
      QPoly r{1};
      for (int i = 0; i < e; ++i) r = poly::mul(r, base);
      return r;
    }
    return base;
  }

  QPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      QPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == var_) {
      ++pos_;
      return QPoly{0, 1};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      QPoly p{Rational(Integer(std::string(s_.substr(start, pos_ - start))))};
      poly::trim(p);
      return p;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  char var_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

QPoly parse_polynomial(std::string_view text, char var) { return Parser(text, var).parse(); }

NumberField parse_field(std::string_view text) {
  std::string s = trim(text);
  if (s.rfind("field", 0) == 0) return NumberField::parse(s);
  QPoly p = parse_polynomial(s, 'x');
  ZPoly z;
  for (const Rational& c : p) {
    if (c.get_den() != 1) throw Error(Errc::non_monic, "minimal polynomial needs integer coefficients");
    z.push_back(c.get_num());
  }
  return NumberField::make(z);
}

FieldElement parse_field_element(const NumberField& field, std::string_view text, char var) {
  std::string s = trim(text);
  if (!s.empty() && s.front() == '[') return field.parse_element(s);
  QPoly p = parse_polynomial(s, var);
  return field.from_coeffs(std::vector<Rational>(p.begin(), p.end()));
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && (text[i] == '(' || text[i] == '[')) ++depth;
    if (i < text.size() && (text[i] == ')' || text[i] == ']')) --depth;
    if (i == text.size() || (text[i] == sep && depth == 0)) {
      std::string item = trim(text.substr(start, i - start));
      if (!item.empty()) out.push_back(item);
      start = i + 1;
    }
  }
  return out;
}

}  // namespace cantor
