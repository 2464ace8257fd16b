#include "scenarios.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <ostream>

#include "cantor/analysis.hpp"
#include "cantor/error.hpp"
#include "cantor/morphisms.hpp"

namespace cantor::cli {

namespace {

class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}

  void check(const std::string& label, const std::string& got, const std::string& expected) {
    bool ok = got == expected;
    out_ << label << "=" << got << (ok ? " PASS" : " FAIL");
    if (!ok) out_ << " (expected " << expected << ")";
    out_ << "\n";
    ok_ = ok_ && ok;
  }
  template <class T>
  void check(const std::string& label, const T& got, const T& expected) {
    check(label, std::to_string(got), std::to_string(expected));
  }
  bool ok() const { return ok_; }

 private:
  std::ostream& out_;
  bool ok_ = true;
};

struct EdgeRow {
  std::size_t from;
  int letter;
  long digit;
  std::size_t to;
};

// Compares t with a drawn machine whose node 0 is the initial state. Nodes are
// matched by following edges from the initial state; states must agree with
// `values` when given.
std::string compare_machine(const Transducer& t, std::size_t nodes, const std::vector<EdgeRow>& rows,
                            const std::vector<Rational>& values = {}) {
  if (t.size() != nodes) return "states " + std::to_string(t.size());
  std::map<std::pair<std::size_t, int>, std::pair<long, std::size_t>> drawn;
  for (const EdgeRow& r : rows) drawn[{r.from, r.letter}] = {r.digit, r.to};
  if (drawn.size() != nodes * t.alphabet.size()) return "incomplete drawing";
  std::vector<long> to_state(nodes, -1), to_node(nodes, -1);
  std::deque<std::size_t> queue{0};
  to_state[0] = static_cast<long>(t.initial);
  to_node[t.initial] = 0;
  while (!queue.empty()) {
    std::size_t n = queue.front();
    queue.pop_front();
    std::size_t s = static_cast<std::size_t>(to_state[n]);
    if (!values.empty() && t.states[s] != t.alphabet.field.from_rational(values[n]))
      return "value of node " + std::to_string(n);
    for (int a = 0; a < static_cast<int>(t.alphabet.size()); ++a) {
      auto [digit, m] = drawn.at({n, a});
      const auto& e = t.edges[s][static_cast<std::size_t>(a)];
      if (e.digit != digit) return "digit on node " + std::to_string(n) + " letter " + t.alphabet.names[a];
      if (to_state[m] < 0 && to_node[e.target] < 0) {
        to_state[m] = static_cast<long>(e.target);
        to_node[e.target] = static_cast<long>(m);
        queue.push_back(m);
      } else if (to_state[m] != static_cast<long>(e.target)) {
        return "target of node " + std::to_string(n) + " letter " + t.alphabet.names[a];
      }
    }
  }
  return "match";
}

BaseAlphabet integer_bases() {
  NumberField q;
  return BaseAlphabet::make(q, {q.from_rational(2), q.from_rational(3)}, {"2", "3"});
}

BaseAlphabet golden_bases() {
  NumberField f = NumberField::make({-1, -1, 1});
  FieldElement phi = f.generator();
  return BaseAlphabet::make(f, {phi, phi * phi * phi}, {"phi", "phi^3"});
}

BaseAlphabet silver_bases() {
  NumberField f = NumberField::make({-2, 0, 1});
  FieldElement g = f.one() + f.generator();
  return BaseAlphabet::make(f, {g, g * g}, {"1+s", "3+2s"});
}

BaseAlphabet smallest_pisot_bases() {
  NumberField f = NumberField::make({-1, -1, 0, 1});
  FieldElement b = f.generator();
  return BaseAlphabet::make(f, {b, b * b * b}, {"b", "b^3"});
}

// Thue-Morse over the blocks {u, v} written with letters b = 0 and b^3 = 1.
WordSpec block_thue_morse(const Word& u, const Word& v) { return substitute_blocks(thue_morse(0, 1), {u, v}); }

const Word u_block{1, 0, 1}, v_block{1, 1, 0};

std::string join(const std::vector<std::size_t>& ns) {
  std::string s;
  for (std::size_t i = 0; i < ns.size(); ++i) s += (i ? "," : "") + std::to_string(ns[i]);
  return s;
}

void fig2(Report& rep) {
  BaseAlphabet e = integer_bases();
  const NumberField& q = e.field;
  rep.check("greedy-1", compare_machine(build(e, q.one(), Mode::greedy), 2,
                                        {{0, 0, 2, 1}, {0, 1, 3, 1}, {1, 0, 0, 1}, {1, 1, 0, 1}}, {1, 0}),
            "match");
  rep.check("quasi-1", compare_machine(build(e, q.one(), Mode::quasi), 1, {{0, 0, 1, 0}, {0, 1, 2, 0}}, {1}), "match");
  const std::vector<EdgeRow> fifth{{0, 0, 0, 1}, {0, 1, 0, 3}, {1, 0, 0, 2}, {1, 1, 1, 0},
                                   {2, 0, 1, 3}, {2, 1, 2, 1}, {3, 0, 1, 0}, {3, 1, 1, 2}};
  const std::vector<Rational> fifth_values{Rational(1, 5), Rational(2, 5), Rational(4, 5), Rational(3, 5)};
  for (Mode m : {Mode::greedy, Mode::quasi})
    rep.check(std::string(to_string(m)) + "-1/5",
              compare_machine(build(e, q.from_rational(Rational(1, 5)), m), 4, fifth, fifth_values), "match");
}

void fig3(Report& rep) {
  ConstantProductMorphism psi = ConstantProductMorphism::parse("2: 2 3; 3: 3 2");
  UPWord d = delta_expansion(Rational(932, 3885), 6);
  rep.check("d6", d.to_string(), std::string("1 (2345)"));
  WordMachine fp = build_frying_pan(d, psi);
  LetterMachine l = letter_to_letter(fp, psi, d);
  LetterMachine merged = merge_equal_residues(l);
  rep.check("frying-pan-states", fp.state_count(), std::size_t{5});
  rep.check("letter-to-letter-states", l.states, std::size_t{15});
  rep.check("merged-states", merged.states, std::size_t{14});
  rep.check("digits", to_string(block_expand(d, thue_morse(0, 1), psi, 16)), std::string("0110111121021020"));
  std::vector<long> radices;
  for (int a : thue_morse(0, 1).stream(8))
    for (long b : psi.images[static_cast<std::size_t>(a)]) radices.push_back(b);
  rep.check("merged-run", to_string(merged.run(radices)), std::string("0110111121021020"));
}

void ex311(Report& rep) {
  BaseAlphabet e = integer_bases();
  FieldElement r = e.field.from_rational(Rational(932, 3885));
  Transducer t = build(e, r, Mode::greedy);
  rep.check("states", t.size(), std::size_t{180});
  rep.check("quasi-states", build(e, r, Mode::quasi).size(), std::size_t{180});
  rep.check("digits", to_string(run(e, r, thue_morse(0, 1), 16, Mode::greedy).digits), std::string("0110111121021020"));
  ComplexityRatio c = complexity_ratio(t, {{0, 1}, {1, 0}});
  rep.check("visited", std::to_string(c.visited) + "/" + std::to_string(c.total), std::string("14/180"));
}

void fig4(Report& rep) {
  BaseAlphabet e = golden_bases();
  const NumberField& f = e.field;
  FieldElement phi3 = e.letters[1];
  rep.check("ceil(phi^3-1)", (phi3 - f.one()).ceil().get_str(), std::string("4"));
  FieldElement half = f.from_rational(Rational(1, 2));
  rep.check("states-1", build(e, f.one(), Mode::quasi).size(), std::size_t{4});
  rep.check("states-1/2", build(e, half, Mode::quasi).size(), std::size_t{8});
  rep.check("machine-1",
            compare_machine(build(e, f.one(), Mode::quasi), 4,
                            {{0, 0, 1, 1}, {0, 1, 4, 2}, {1, 0, 0, 0}, {1, 1, 2, 1},
                             {2, 0, 0, 3}, {2, 1, 0, 0}, {3, 0, 0, 1}, {3, 1, 1, 1}}),
            "match");
  rep.check("machine-1/2",
            compare_machine(build(e, half, Mode::quasi), 8,
                            {{0, 0, 0, 2}, {0, 1, 2, 6}, {1, 0, 0, 4}, {1, 1, 0, 2}, {2, 0, 1, 4}, {2, 1, 3, 3},
                             {3, 0, 0, 7}, {3, 1, 1, 2}, {4, 0, 0, 0}, {4, 1, 1, 4}, {5, 0, 1, 0}, {5, 1, 3, 5},
                             {6, 0, 0, 1}, {6, 1, 0, 0}, {7, 0, 1, 6}, {7, 1, 2, 5}}),
            "match");
  rep.check("digits-1", to_string(run(e, f.one(), thue_morse(0, 1), 8, Mode::quasi).digits), std::string("12204002"));
  rep.check("digits-1/2", to_string(run(e, half, thue_morse(0, 1), 8, Mode::quasi).digits), std::string("03111003"));
}

void fig6(Report& rep) {
  BaseAlphabet e = silver_bases();
  Transducer t = build(e, e.field.one(), Mode::quasi);
  rep.check("states", t.size(), std::size_t{3});
  rep.check("machine", compare_machine(t, 3, {{0, 0, 2, 1}, {0, 1, 5, 2}, {1, 0, 0, 0}, {1, 1, 2, 1}, {2, 0, 1, 0}, {2, 1, 4, 2}}),
            "match");
  rep.check("two-walk", std::string(two_walk(t).holds ? "yes" : "no"), std::string("no"));
}

std::string letters_of(const BaseAlphabet& e, const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + e.names[static_cast<std::size_t>(w[i])];
  return s;
}

void fig7(Report& rep) {
  BaseAlphabet e = smallest_pisot_bases();
  Transducer t = build(e, e.field.one(), Mode::quasi);
  rep.check("states", t.size(), std::size_t{5});
  rep.check("machine",
            compare_machine(t, 5,
                            {{0, 0, 1, 2}, {0, 1, 2, 2}, {1, 0, 0, 3}, {1, 1, 0, 0}, {2, 0, 0, 1},
                             {2, 1, 0, 4}, {3, 0, 0, 4}, {3, 1, 1, 2}, {4, 0, 0, 0}, {4, 1, 1, 4}}),
            "match");
  TwoWalkResult r = two_walk(t);
  rep.check("two-walk", std::string(r.holds ? "yes" : "no"), std::string("yes"));
  if (!r.witness) return;
  rep.check("witness-state", t.states[r.witness->state].to_poly_string(), std::string("1"));
  rep.check("u", letters_of(e, r.witness->u), std::string("b^3 b b^3"));
  rep.check("v", letters_of(e, r.witness->v), std::string("b^3 b^3 b"));
  rep.check("w", to_string(r.witness->w), std::string("200"));
  rep.check("replay", std::string(replay_witness(t, *r.witness) ? "ok" : "broken"), std::string("ok"));
  rep.check("d(1)", run_up(e, e.field.one(), UPWord{{}, {1, 0, 1, 1, 1, 0}}, Mode::quasi).to_string(), std::string("(200)"));
}

void table2(Report& rep) {
  NumberField s2 = NumberField::make({-2, 0, 1});
  FieldElement d = s2.generator();
  auto el = [&](long a, long b) { return s2.from_rational(a) + s2.from_rational(b) * d; };
  FieldElement g1 = el(1, 1), g2 = el(2, 2), g3 = el(4, 3), g4 = el(5, 4);
  NumberField c3 = NumberField::make({-1, -3, -3, 1});
  FieldElement g5 = c3.generator();
  struct Row {
    std::string label;
    NumberField field;
    FieldElement a, b;
    std::string expected;
  };
  const std::vector<Row> rows{
      {"{g1,g2}", s2, g1, g2, "connected"},          {"{g3,g4}", s2, g3, g4, "disconnected"},
      {"{g1,g1^2}", s2, g1, g1 * g1, "connected"},   {"{g1^2,g1^3}", s2, g1 * g1, g1 * g1 * g1, "disconnected"},
      {"{g5^2,g5^3}", c3, g5 * g5, g5 * g5 * g5, "connected"}, {"{g1^2,g2^2}", s2, g1 * g1, g2 * g2, "disconnected"},
  };
  for (const Row& row : rows) {
    BaseAlphabet e = BaseAlphabet::make(row.field, {row.a, row.b});
    Transducer t = build(e, row.field.one(), Mode::quasi);
    rep.check(row.label, std::string(is_strongly_connected(t) ? "connected" : "disconnected"), row.expected);
  }
  BaseAlphabet e5 = BaseAlphabet::make(c3, {g5 * g5, g5 * g5 * g5});
  rep.check("states{g5^2,g5^3}", build(e5, c3.one(), Mode::quasi).size(), std::size_t{127});
}

void table1(Report& rep) {
  BaseAlphabet e = smallest_pisot_bases();
  PrefixTable pt = prefix_table(e, e.field.one(), block_thue_morse(u_block, v_block), 14, {2, 0, 0}, 120);
  const std::vector<std::pair<std::string, std::string>> expected{
      {"", "0,3,6,9,12"},     {"10110", "1,10"},   {"2010", "2,11"},          {"20020010110", "4"},
      {"1010", "5"},          {"20010110", "7"},   {"1002010", "8"},          {"20010102010", "13"},
      {"1002002010", "14"},
  };
  std::map<std::string, std::string> got;
  for (const auto& [w, ns] : pt.groups) got[to_string(w)] = join(ns);
  for (const auto& [w, ns] : expected) rep.check("w[" + w + "]", got.count(w) ? got[w] : std::string("-"), ns);
  rep.check("groups", got.size(), expected.size());
  rep.check("undetected", pt.undetected.size(), std::size_t{0});
}

// Length-5 factors of the Thue-Morse word in order of first occurrence.
std::vector<Word> thue_morse_factors() {
  Word tm = thue_morse(0, 1).stream(256);
  std::vector<Word> out;
  for (std::size_t i = 0; i + 5 <= tm.size(); ++i) {
    Word f(tm.begin() + static_cast<long>(i), tm.begin() + static_cast<long>(i) + 5);
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  }
  return out;
}

void table3(Report& rep) {
  BaseAlphabet e = smallest_pisot_bases();
  Transducer t = build(e, e.field.one(), Mode::quasi);
  std::vector<Word> factors = thue_morse_factors();
  const std::vector<std::string> names{"uvvuv", "vvuvu", "vuvuu", "uvuuv", "vuuvv", "uuvvu",
                                       "uvvuu", "vvuuv", "vuuvu", "uuvuv", "uvuvv", "vuvvu"};
  const std::vector<std::string> shift1{"10110200200200", "20020010110200", "20010110200200", "10110200200200",
                                        "20010102010200", "10102010200200", "10110200200200", "20020010102010",
                                        "20010102010200", "10102010200200", "10110200200200", "20010110200200"};
  const std::vector<std::string> shift2{"2010200200200", "1010200200200", "1002010200200", "2010200200200",
                                        "1002002010200", "2002010200200", "2010200200200", "1010200200200",
                                        "1002002010200", "2002010200200", "2010200200200", "1002010200200"};
  rep.check("factors", factors.size(), names.size());
  for (std::size_t m = 0; m < factors.size() && m < names.size(); ++m) {
    std::string uv;
    Word input;
    for (int x : factors[m]) {
      uv += x ? 'v' : 'u';
      const Word& blk = x ? v_block : u_block;
      input.insert(input.end(), blk.begin(), blk.end());
    }
    std::string idx = std::to_string(m + 1);
    rep.check("f" + idx, uv, names[m]);
    for (std::size_t i : {1, 2}) {
      Word shifted(input.begin() + static_cast<long>(i), input.end());
      auto [out, end] = t.read(t.initial, shifted);
      rep.check("sigma" + std::string(i == 2 ? "^2" : "") + "(f" + idx + ")", to_string(out),
                (i == 1 ? shift1 : shift2)[m]);
      rep.check("sigma" + std::string(i == 2 ? "^2" : "") + "(f" + idx + ")-returns", std::string(end == t.initial ? "yes" : "no"),
                std::string("yes"));
    }
  }
}

void rem69(Report& rep) {
  BaseAlphabet e = smallest_pisot_bases();
  WordSpec base = shift(block_thue_morse({0, 0, 1}, {0, 1, 0}), 1);
  Word digits = run(e, e.field.one(), base, 500, Mode::quasi).digits;
  rep.check("prefix42", to_string(Word(digits.begin(), digits.begin() + 42)),
            std::string("100200100010200010100200100010100200010200"));
  auto p = find_period(digits, 20, 250);
  rep.check("period<=20", p ? std::to_string(*p) : std::string("none"), std::string("none"));
  WordSpec unshifted = block_thue_morse({0, 0, 1}, {0, 1, 0});
  rep.check("unshifted", run_up(e, e.field.one(), UPWord{{}, {0, 0, 1}}, Mode::quasi).to_string(), std::string("(100)"));
  rep.check("unshifted-prefix", to_string(run(e, e.field.one(), unshifted, 30, Mode::quasi).digits),
            std::string("100100100100100100100100100100"));
}

void fig1_counts(Report& rep) {
  NumberField f = NumberField::make({-1, -1, 1});
  std::vector<long> counts(11, 0);
  for (long a = -20; a <= 20; ++a)
    for (long b = -20; b <= 20; ++b) {
      Integer n = max_norm_floor(f.from_coeffs({Rational(b), Rational(a)}));
      if (n <= 10) ++counts[n.get_si()];
    }
  const long expected[] = {1, 6, 8, 14, 16, 18, 24, 26, 32, 34, 38};
  for (int i = 0; i <= 10; ++i) rep.check("count[" + std::to_string(i) + "]", counts[i], expected[i]);
}

void morphism61(Report& rep) {
  ConstantProductMorphism psi = ConstantProductMorphism::parse("2: 6 3 4; 3: 3 2 4 3; 4: 4 3 3 2");
  rep.check("delta", psi.delta, 72L);
  rep.check("h_2(61)", to_string(digit_decompose(61, psi.images[0])), std::string("501"));
  rep.check("h_3(61)", to_string(digit_decompose(61, psi.images[1])), std::string("2101"));
  rep.check("h_4(61)", to_string(digit_decompose(61, psi.images[2])), std::string("3101"));
  const std::vector<std::string> h2{"00", "01", "02", "10", "11", "12"};
  const std::vector<std::string> h3{"00", "01", "10", "11", "20", "21"};
  for (long c = 0; c < 6; ++c) {
    rep.check("h_2(" + std::to_string(c) + ")", to_string(digit_decompose(c, {2, 3})), h2[c]);
    rep.check("h_3(" + std::to_string(c) + ")", to_string(digit_decompose(c, {3, 2})), h3[c]);
  }
}

void forced_up(Report& rep) {
  NumberField f = NumberField::make({-1, -1, 1});
  FieldElement phi = f.generator();
  BaseAlphabet e = BaseAlphabet::make(f, {phi, f.from_rational(4) * phi + f.one()}, {"phi", "4phi+1"}, false);
  rep.check("pisot(4phi+1)", std::string(to_string(is_pisot_of_degree_d(e.letters[1]).verdict)), std::string("no_not_pisot"));
  rep.check("greedy", run_up(e, f.one(), UPWord{{}, {0, 1}}, Mode::greedy).to_string(), std::string("141 (0)"));
  rep.check("quasi", run_up(e, f.one(), UPWord{{}, {0, 1}}, Mode::quasi).to_string(), std::string("1407051 (10)"));
}

const std::vector<std::pair<std::string, std::function<void(Report&)>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<void(Report&)>>> r{
      {"fig2", fig2},         {"fig3", fig3},     {"15-state", fig3}, {"ex311-180", ex311},
      {"fig4", fig4},         {"fig6", fig6},     {"fig7", fig7},     {"table2", table2},
      {"table1", table1},     {"table3", table3}, {"rem69", rem69},   {"fig1-counts", fig1_counts},
      {"morphism-61", morphism61}, {"forced-up", forced_up},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, _] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

bool reproduce(const std::string& name, std::ostream& out) {
  for (const auto& [n, fn] : registry())
    if (n == name) {
      Report rep(out);
      fn(rep);
      return rep.ok();
    }
  throw Error(Errc::unknown_scenario, "no scenario named '" + name + "'");
}

}  // namespace cantor::cli
