#include <map>
#include <numeric>
#include <set>

#include "cantor/analysis.hpp"
#include "cantor/error.hpp"
#include "doctest.h"

using namespace cantor;

namespace {

BaseAlphabet integer_bases() {
  NumberField q;
  return BaseAlphabet::make(q, {q.from_rational(2), q.from_rational(3)});
}

BaseAlphabet smallest_pisot_bases() {
  NumberField f = NumberField::make({-1, -1, 0, 1});
  FieldElement b = f.generator();
  return BaseAlphabet::make(f, {b, b * b * b});
}

BaseAlphabet silver_bases() {
  NumberField f = NumberField::make({-2, 0, 1});
  FieldElement g = f.one() + f.generator();
  return BaseAlphabet::make(f, {g, g * g});
}

// Exact value of an ultimately periodic digit sequence in an ultimately
// periodic integer base: sum of d_n / (b_0 ... b_n).
Rational up_value(const UPWord& digits, const UPWord& base, const std::vector<long>& radix) {
  std::size_t pre = std::max(digits.preperiod.size(), base.preperiod.size());
  std::size_t per = std::lcm(digits.period.size(), base.period.size());
  Rational weight = 1, head = 0;
  for (std::size_t n = 0; n < pre; ++n) {
    weight /= radix[static_cast<std::size_t>(base.at(n))];
    head += digits.at(n) * weight;
  }
  Rational cycle = 0, w = weight;
  for (std::size_t n = pre; n < pre + per; ++n) {
    w /= radix[static_cast<std::size_t>(base.at(n))];
    cycle += digits.at(n) * w;
  }
  Rational ratio = w / weight;  // product of one period of 1/b
  return head + cycle / (1 - ratio);
}

// Greedy digits of x in [0, 1) along an ultimately periodic integer base, as an
// ultimately periodic word detected by a repeated (remainder, phase).
UPWord greedy_up(Rational x, const UPWord& base, const std::vector<long>& radix) {
  std::map<std::pair<Rational, std::size_t>, std::size_t> seen;
  Word out;
  std::size_t pre = base.preperiod.size(), per = base.period.size();
  for (std::size_t n = 0;; ++n) {
    if (n >= pre) {
      auto key = std::make_pair(x, (n - pre) % per);
      if (auto it = seen.find(key); it != seen.end())
        return up_canonicalize(UPWord{Word(out.begin(), out.begin() + static_cast<long>(it->second)),
                                      Word(out.begin() + static_cast<long>(it->second), out.end())});
      seen[key] = n;
    }
    Rational y = x * radix[static_cast<std::size_t>(base.at(n))];
    Integer d = floor_of(y);
    out.push_back(static_cast<int>(d.get_si()));
    x = y - d;
  }
}

void all_words(std::size_t len, int digits, Word& cur, std::vector<Word>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  for (int d = 0; d < digits; ++d) {
    cur.push_back(d);
    all_words(len, digits, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("two-walk property") {
  BaseAlphabet s = silver_bases();
  Transducer t6 = build(s, s.field.one(), Mode::quasi);
  CHECK(t6.size() == 3);
  TwoWalkResult r6 = two_walk(t6);
  CHECK_FALSE(r6.holds);
  CHECK_FALSE(r6.witness.has_value());
  for (std::size_t q = 0; q < t6.size(); ++q) CHECK(pair_set(t6, q).pairs.count({q, q}) == 0);

  BaseAlphabet b = smallest_pisot_bases();
  Transducer t7 = build(b, b.field.one(), Mode::quasi);
  TwoWalkResult r7 = two_walk(t7);
  REQUIRE(r7.holds);
  REQUIRE(r7.witness.has_value());
  const TwoWalkWitness& w = *r7.witness;
  CHECK(replay_witness(t7, w));
  CHECK(w.u != w.v);
  CHECK(w.state == t7.initial);
  CHECK(to_string(w.u) == "101");
  CHECK(to_string(w.v) == "110");
  CHECK(to_string(w.w) == "200");
  CHECK(pair_set(t7, t7.initial).pairs.count({t7.initial, t7.initial}) == 1);
  TwoWalkWitness broken = w;
  broken.w[0] = 1;
  CHECK_FALSE(replay_witness(t7, broken));
  // any mixture of u and v gives (200)^omega
  Word mix;
  for (const Word* p : {&w.u, &w.v, &w.v, &w.u, &w.v}) mix.insert(mix.end(), p->begin(), p->end());
  auto [out, end] = t7.read(t7.initial, mix);
  CHECK(to_string(out) == "200200200200200");
  CHECK(end == t7.initial);
}

TEST_CASE("strongly connected components") {
  BaseAlphabet e = integer_bases();
  Transducer greedy1 = build(e, e.field.one(), Mode::greedy);  // 1 -> 0 with no way back
  CHECK(scc(greedy1).size() == 2);
  CHECK_FALSE(is_strongly_connected(greedy1));
  CHECK(is_strongly_connected(build(e, e.field.from_rational(Rational(1, 5)), Mode::quasi)));
  Transducer big = build(e, e.field.from_rational(Rational(932, 3885)), Mode::greedy);
  std::set<std::size_t> covered;
  for (const auto& c : scc(big))
    for (std::size_t s : c) CHECK(covered.insert(s).second);
  CHECK(covered.size() == big.size());
}

TEST_CASE("restriction to block inputs") {
  BaseAlphabet e = integer_bases();
  Transducer t = build(e, e.field.from_rational(Rational(932, 3885)), Mode::greedy);
  ComplexityRatio c = complexity_ratio(t, {{0, 1}, {1, 0}});
  CHECK(c.visited == 14);
  CHECK(c.total == 180);
  CHECK(c.ratio == make_rational(14, 180));
  Restriction r = restrict(t, {{0, 1}, {1, 0}});
  CHECK(r.visited.size() == 14);
  for (const auto& edge : r.edges) CHECK(edge.from < r.product.size());
  ComplexityRatio all = complexity_ratio(t, {{0}, {1}});
  CHECK(all.visited == 180);
  CHECK_THROWS_AS(complexity_ratio(t, {}), Error);
  CHECK_THROWS_AS(complexity_ratio(t, {{0, 2}}), Error);
}

TEST_CASE("tail splitting") {
  CHECK(split_tail(Word{1, 0, 1, 1, 0, 2, 0, 0, 2, 0, 0, 2, 0, 0}, Word{2, 0, 0}) == std::size_t{5});
  CHECK(split_tail(Word{2, 0, 0, 2, 0, 0}, Word{2, 0, 0}) == std::size_t{0});
  CHECK_FALSE(split_tail(Word{1, 0, 1, 1, 0}, Word{2, 0, 0}).has_value());
}

TEST_CASE("prefix table for the block Thue-Morse base") {
  BaseAlphabet b = smallest_pisot_bases();
  WordSpec base = substitute_blocks(thue_morse(0, 1), {{1, 0, 1}, {1, 1, 0}});
  PrefixTable pt = prefix_table(b, b.field.one(), base, 14, {2, 0, 0}, 120);
  CHECK(pt.undetected.empty());
  CHECK(pt.groups.at(Word{}) == std::vector<std::size_t>{0, 3, 6, 9, 12});
  CHECK(pt.groups.at(Word{1, 0, 1, 1, 0}) == std::vector<std::size_t>{1, 10});
  CHECK(pt.groups.at(Word{1, 0, 0, 2, 0, 0, 2, 0, 1, 0}) == std::vector<std::size_t>{14});
  for (const auto& [w, ns] : pt.groups)
    for (std::size_t n : ns) {
      Word digits = run(b, b.field.one(), shift(base, n), w.size() + 30, Mode::quasi).digits;
      CHECK(Word(digits.begin(), digits.begin() + static_cast<long>(w.size())) == w);
      for (std::size_t i = w.size(); i < digits.size(); ++i) CHECK(digits[i] == ((i - w.size()) % 3 == 0 ? 2 : 0));
    }
}

TEST_CASE("admissibility against a rational oracle") {
  BaseAlphabet e = integer_bases();
  std::vector<long> radix{2, 3};
  for (const UPWord& base : {UPWord{{}, {0, 1}}, UPWord{{1}, {0}}, UPWord{{0, 0}, {1, 0, 0}}}) {
    std::vector<Word> pres, pers;
    Word cur;
    for (std::size_t len = 0; len <= 2; ++len) all_words(len, 3, cur, pres);
    for (std::size_t len = 1; len <= 2; ++len) all_words(len, 3, cur, pers);
    for (const Word& pre : pres)
      for (const Word& per : pers) {
        UPWord cand = up_canonicalize(UPWord{pre, per});
        bool digits_fit = true;
        for (std::size_t n = 0; n < 12; ++n)
          if (cand.at(n) >= radix[static_cast<std::size_t>(base.at(n))]) digits_fit = false;
        Rational x = up_value(cand, base, radix);
        bool expected = digits_fit && x < 1 && greedy_up(x, base, radix) == cand;
        CHECK_MESSAGE(admissible_up(cand, base, e) == expected, (cand.to_string() + " along " + base.to_string()));
      }
  }
}

TEST_CASE("uniform-morphic transduction matches run") {
  BaseAlphabet e = integer_bases();
  FieldElement r = e.field.from_rational(Rational(932, 3885));
  WordSpec out = transduce_uniform_morphic(e, r, thue_morse(0, 1), Mode::greedy);
  CHECK(out.stream(1000) == run(e, r, thue_morse(0, 1), 1000, Mode::greedy).digits);
  BaseAlphabet b = smallest_pisot_bases();
  WordSpec base = substitute_blocks(thue_morse(0, 1), {{1, 0, 1}, {1, 1, 0}});
  WordSpec out2 = transduce_uniform_morphic(b, b.field.one(), base, Mode::quasi);
  CHECK(out2.stream(600) == run(b, b.field.one(), base, 600, Mode::quasi).digits);
  CHECK_THROWS_AS(transduce_uniform_morphic(e, r, WordSpec::up(UPWord{{}, {0}}), Mode::greedy), Error);
}

TEST_CASE("bounded period search") {
  Word w{1, 2, 3};
  for (int i = 0; i < 20; ++i) w.insert(w.end(), {2, 0, 0});
  CHECK(find_period(w, 10, 30) == std::size_t{3});
  CHECK(find_period(thue_morse(0, 1).stream(500), 20, 250) == std::nullopt);
  CHECK(find_period(Word(100, 7), 5, 50) == std::size_t{1});
}
