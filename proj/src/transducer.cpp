#include "cantor/transducer.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cantor/error.hpp"
#include "json.hpp"

namespace cantor {

using json = nlohmann::json;

const char* to_string(Mode m) { return m == Mode::greedy ? "greedy" : "quasi"; }

Mode parse_mode(std::string_view text) {
  if (text == "greedy") return Mode::greedy;
  if (text == "quasi" || text == "quasi-greedy") return Mode::quasi;
  throw Error(Errc::parse_error, "mode must be 'greedy' or 'quasi', got '" + std::string(text) + "'");
}

BaseAlphabet BaseAlphabet::make(const NumberField& field, std::vector<FieldElement> letters,
                                std::vector<std::string> names, bool verify) {
  BaseAlphabet e;
  e.field = field;
  if (letters.empty()) throw Error(Errc::malformed_spec, "base alphabet is empty");
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i].field() != field) throw Error(Errc::field_mismatch, "base letter from another field");
    if (names.size() <= i) names.push_back(letters[i].to_poly_string());
    if (compare(letters[i], Rational(1)) <= 0) throw Error(Errc::malformed_spec, "base " + names[i] + " does not exceed 1");
    if (verify) {
      PisotResult check = is_pisot_of_degree_d(letters[i]);
      if (check.verdict != PisotVerdict::yes)
        throw Error(Errc::not_pisot, names[i] + ": " + to_string(check.verdict) + (check.detail.empty() ? "" : " (" + check.detail + ")"));
    }
    e.pisot_verified.push_back(verify);
  }
  e.letters = std::move(letters);
  e.names = std::move(names);
  return e;
}

bool BaseAlphabet::operator==(const BaseAlphabet& o) const {
  return field == o.field && letters == o.letters && names == o.names && pisot_verified == o.pisot_verified;
}

static void require_unit_interval(const FieldElement& q) {
  if (q.sign() < 0 || compare(q, Rational(1)) > 0) throw Error(Errc::out_of_unit_interval, q.to_string());
}

static Step greedy_unchecked(const FieldElement& q, const FieldElement& beta) {
  FieldElement x = beta * q;
  Integer a = x.floor();
  return {to_long(a), x - x.field().from_rational(Rational(a))};
}

static Step quasi_unchecked(const FieldElement& q, const FieldElement& beta) {
  if (q.is_zero()) return {0, q};
  FieldElement x = beta * q;
  Integer a = x.ceil() - 1;
  return {to_long(a), x - x.field().from_rational(Rational(a))};
}

Step greedy_step(const FieldElement& q, const FieldElement& beta) {
  require_unit_interval(q);
  return greedy_unchecked(q, beta);
}

Step quasi_step(const FieldElement& q, const FieldElement& beta) {
  require_unit_interval(q);
  return quasi_unchecked(q, beta);
}

Step step(Mode mode, const FieldElement& q, const FieldElement& beta) {
  return mode == Mode::greedy ? greedy_step(q, beta) : quasi_step(q, beta);
}

static Step step_unchecked(Mode mode, const FieldElement& q, const FieldElement& beta) {
  return mode == Mode::greedy ? greedy_unchecked(q, beta) : quasi_unchecked(q, beta);
}

std::optional<std::size_t> Transducer::find_state(const FieldElement& s) const {
  for (std::size_t i = 0; i < states.size(); ++i)
    if (states[i] == s) return i;
  return std::nullopt;
}

std::pair<Word, std::size_t> Transducer::read(std::size_t from, const Word& input) const {
  Word out;
  std::size_t q = from;
  for (int a : input) {
    const Edge& e = edges.at(q).at(static_cast<std::size_t>(a));
    out.push_back(static_cast<int>(e.digit));
    q = e.target;
  }
  return {out, q};
}

bool Transducer::operator==(const Transducer& o) const {
  return alphabet == o.alphabet && mode == o.mode && states == o.states && initial == o.initial && edges == o.edges;
}

namespace {

// State registry shared by build and the streaming runs.
class StateTable {
 public:
  StateTable(std::size_t cap) : cap_(cap) {}

  std::pair<std::size_t, bool> intern(const FieldElement& s) {
    auto [it, fresh] = index_.emplace(s.coeffs(), states_.size());
    if (fresh) {
      if (states_.size() >= cap_)
        throw Error(Errc::state_cap_exceeded, "more than " + std::to_string(cap_) + " states");
      states_.push_back(s);
    }
    return {it->second, fresh};
  }
  const FieldElement& operator[](std::size_t i) const { return states_[i]; }
  std::size_t size() const { return states_.size(); }
  std::vector<FieldElement> take() { return std::move(states_); }

 private:
  std::size_t cap_;
  std::map<std::vector<Rational>, std::size_t> index_;
  std::vector<FieldElement> states_;
};

void require_point(const BaseAlphabet& e, const FieldElement& r) {
  if (r.field() != e.field) throw Error(Errc::field_mismatch, "point and bases live in different fields");
  if (r.sign() < 0 || compare(r, Rational(1)) > 0) throw Error(Errc::point_out_of_range, "point must lie in [0, 1]");
}

// Memoized on-the-fly stepping used by the streaming runs.
class Walker {
 public:
  Walker(const BaseAlphabet& e, Mode mode, std::size_t cap) : e_(e), mode_(mode), table_(cap) {}

  std::size_t start(const FieldElement& r) { return table_.intern(r).first; }

  std::pair<long, std::size_t> advance(std::size_t q, int letter) {
    if (letter < 0 || static_cast<std::size_t>(letter) >= e_.size())
      throw Error(Errc::malformed_spec, "base letter " + std::to_string(letter) + " outside the alphabet");
    auto key = std::make_pair(q, letter);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Step s = step_unchecked(mode_, table_[q], e_.letters[static_cast<std::size_t>(letter)]);
    auto result = std::make_pair(s.digit, table_.intern(s.next).first);
    memo_.emplace(key, result);
    return result;
  }

  std::size_t visited() const { return table_.size(); }

 private:
  const BaseAlphabet& e_;
  Mode mode_;
  StateTable table_;
  std::map<std::pair<std::size_t, int>, std::pair<long, std::size_t>> memo_;
};

}  // namespace

Transducer build(const BaseAlphabet& e, const FieldElement& r, Mode mode, std::size_t state_cap) {
  require_point(e, r);
  StateTable table(state_cap);
  Transducer t;
  t.alphabet = e;
  t.mode = mode;
  t.initial = table.intern(r).first;
  // Breadth-first: states in discovery order, letters in alphabet order.
  for (std::size_t q = 0; q < table.size(); ++q) {
    std::vector<Transducer::Edge> row;
    for (const FieldElement& beta : e.letters) {
      Step s = step_unchecked(mode, table[q], beta);
      row.push_back({s.digit, table.intern(s.next).first});
    }
    t.edges.push_back(std::move(row));
  }
  t.states = table.take();
  return t;
}

RunResult run(const BaseAlphabet& e, const FieldElement& r, const WordSpec& base, std::size_t n, Mode mode,
              std::size_t state_cap) {
  require_point(e, r);
  Walker walk(e, mode, state_cap);
  std::size_t q = walk.start(r);
  Word letters = base.stream(n);
  RunResult out;
  out.digits.reserve(n);
  for (int a : letters) {
    auto [digit, next] = walk.advance(q, a);
    out.digits.push_back(static_cast<int>(digit));
    q = next;
  }
  out.visited = walk.visited();
  return out;
}

UPWord run_up(const BaseAlphabet& e, const FieldElement& r, const UPWord& base_in, Mode mode, std::size_t state_cap) {
  require_point(e, r);
  const UPWord base = up_canonicalize(base_in);
  const std::size_t t = base.preperiod.size(), p = base.period.size();
  Walker walk(e, mode, state_cap);
  std::size_t q = walk.start(r);
  Word digits;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;  // (state, phase) -> position
  const std::size_t limit = t + (state_cap + 1) * p;
  for (std::size_t i = 0; i <= limit; ++i) {
    if (i >= t) {
      auto [it, fresh] = seen.emplace(std::make_pair(q, (i - t) % p), i);
      if (!fresh) {
        std::size_t k = it->second;
        UPWord out{Word(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(k)),
                   Word(digits.begin() + static_cast<std::ptrdiff_t>(k), digits.end())};
        return up_canonicalize(out);
      }
    }
    auto [digit, next] = walk.advance(q, base.at(i));
    digits.push_back(static_cast<int>(digit));
    q = next;
  }
  throw Error(Errc::state_cap_exceeded, "no repeated (state, phase) pair within the cap");
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

json rational_list(const std::vector<Rational>& v) {
  json a = json::array();
  for (const Rational& q : v) a.push_back(q.get_str());
  return a;
}

std::vector<Rational> parse_rational_list(const json& a) {
  if (!a.is_array()) throw Error(Errc::parse_error, "expected a list of rationals");
  std::vector<Rational> out;
  for (const json& x : a) {
    if (x.is_string())
      out.push_back(parse_rational(x.get<std::string>()));
    else if (x.is_number_integer())
      out.push_back(Rational(Integer(std::to_string(x.get<long long>()))));
    else
      throw Error(Errc::parse_error, "rational must be a string or an integer");
  }
  return out;
}

json integer_value(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

}  // namespace

std::string to_dot(const Transducer& t) {
  std::ostringstream out;
  out << "digraph transducer {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    out << "  s" << i << " [label=\"" << dot_escape(t.states[i].to_poly_string()) << "\"";
    if (i == t.initial) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t a = 0; a < t.alphabet.size(); ++a) {
      const auto& e = t.edges[i][a];
      out << "  s" << i << " -> s" << e.target << " [label=\"" << dot_escape(t.alphabet.names[a]) << "|" << e.digit
          << "\"];\n";
    }
  out << "}\n";
  return out.str();
}

std::string to_json(const Transducer& t) {
  json j;
  json field;
  json minpoly = json::array();
  for (const Integer& c : t.alphabet.field.minpoly()) minpoly.push_back(integer_value(c));
  field["minpoly"] = minpoly;
  const RootSelector& sel = t.alphabet.field.selector();
  if (sel.largest)
    field["root"] = "largest";
  else
    field["root"] = json::array({sel.lo.get_str(), sel.hi.get_str()});
  j["field"] = field;
  json letters = json::array();
  for (const auto& b : t.alphabet.letters) letters.push_back(rational_list(b.coeffs()));
  j["letters"] = letters;
  j["names"] = t.alphabet.names;
  json flags = json::array();
  for (bool f : t.alphabet.pisot_verified) flags.push_back(f);
  j["pisot_verified"] = flags;
  j["mode"] = to_string(t.mode);
  j["initial"] = t.initial;
  json states = json::array();
  for (const auto& s : t.states) states.push_back(rational_list(s.coeffs()));
  j["states"] = states;
  json edges = json::array();
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t a = 0; a < t.alphabet.size(); ++a)
      edges.push_back(json::array({i, a, t.edges[i][a].digit, t.edges[i][a].target}));
  j["edges"] = edges;
  return j.dump() + "\n";
}

Transducer from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw Error(Errc::parse_error, ex.what());
  }
  try {
    const json& field = j.at("field");
    ZPoly minpoly;
    for (const json& c : field.at("minpoly")) minpoly.push_back(c.is_string() ? Integer(c.get<std::string>()) : Integer(std::to_string(c.get<long long>())));
    RootSelector sel = RootSelector::largest_real();
    if (field.contains("root") && field["root"].is_array()) {
      auto ends = parse_rational_list(field["root"]);
      if (ends.size() != 2) throw Error(Errc::parse_error, "root interval needs two endpoints");
      sel = RootSelector::between(ends[0], ends[1]);
    }
    NumberField f = NumberField::make(minpoly, sel);
    auto element = [&](const json& a) {
      auto c = parse_rational_list(a);
      if (c.size() != static_cast<std::size_t>(f.degree())) throw Error(Errc::parse_error, "coefficient list has the wrong length");
      return f.from_coeffs(c);
    };

    std::vector<FieldElement> letters;
    for (const json& a : j.at("letters")) letters.push_back(element(a));
    if (letters.empty()) throw Error(Errc::parse_error, "empty base alphabet");
    std::vector<std::string> names;
    if (j.contains("names")) names = j["names"].get<std::vector<std::string>>();
    std::vector<bool> flags(letters.size(), false);
    if (j.contains("pisot_verified")) {
      flags = j["pisot_verified"].get<std::vector<bool>>();
      if (flags.size() != letters.size()) throw Error(Errc::parse_error, "one pisot flag per letter expected");
    }
    // Letters claimed as verified are checked again.
    bool verify = std::all_of(flags.begin(), flags.end(), [](bool b) { return b; });
    Transducer t;
    t.alphabet = BaseAlphabet::make(f, letters, names, verify);
    t.alphabet.pisot_verified = flags;
    t.mode = parse_mode(j.at("mode").get<std::string>());
    for (const json& s : j.at("states")) t.states.push_back(element(s));
    if (t.states.empty()) throw Error(Errc::parse_error, "no states");
    t.initial = j.at("initial").get<std::size_t>();
    if (t.initial >= t.states.size()) throw Error(Errc::parse_error, "initial state out of range");

    const std::size_t n = t.states.size(), m = letters.size();
    std::vector<std::vector<std::optional<Transducer::Edge>>> slots(n, std::vector<std::optional<Transducer::Edge>>(m));
    for (const json& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 4) throw Error(Errc::parse_error, "edge must be [state, letter, digit, target]");
      std::size_t from = e[0].get<std::size_t>(), letter = e[1].get<std::size_t>(), target = e[3].get<std::size_t>();
      long digit = e[2].get<long>();
      if (from >= n || letter >= m || target >= n) throw Error(Errc::parse_error, "edge index out of range");
      if (slots[from][letter]) throw Error(Errc::parse_error, "duplicate edge");
      slots[from][letter] = Transducer::Edge{digit, target};
    }
    for (std::size_t q = 0; q < n; ++q) {
      std::vector<Transducer::Edge> row;
      for (std::size_t a = 0; a < m; ++a) {
        if (!slots[q][a]) throw Error(Errc::parse_error, "missing edge: transducer is not complete");
        Step s = step_unchecked(t.mode, t.states[q], letters[a]);
        if (s.digit != slots[q][a]->digit || !(s.next == t.states[slots[q][a]->target]))
          throw Error(Errc::parse_error, "edge from state " + std::to_string(q) + " disagrees with the step map");
        row.push_back(*slots[q][a]);
      }
      t.edges.push_back(std::move(row));
    }
    return t;
  } catch (const json::exception& ex) {
    throw Error(Errc::parse_error, ex.what());
  }
}

}  // namespace cantor
