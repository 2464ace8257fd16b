#include <random>

#include "cantor/error.hpp"
#include "cantor/morphisms.hpp"
#include "doctest.h"

using namespace cantor;

namespace {

// Greedy expansion of r in the integer Cantor base given by the radices, by
// the recursion digit = floor(b * rest).
Word integer_greedy(Rational r, const std::vector<long>& radices) {
  Word out;
  for (long b : radices) {
    Rational x = r * b;
    Integer d = floor_of(x);
    out.push_back(static_cast<int>(d.get_si()));
    r = x - d;
  }
  return out;
}

std::vector<long> radices_of(const ConstantProductMorphism& psi, const Word& pre) {
  std::vector<long> out;
  for (int a : pre)
    for (int b : psi.images[static_cast<std::size_t>(a)]) out.push_back(b);
  return out;
}

}  // namespace

TEST_CASE("digit decomposition") {
  CHECK(to_string(digit_decompose(61, {6, 3, 4})) == "501");
  CHECK(to_string(digit_decompose(61, {3, 2, 4, 3})) == "2101");
  CHECK(to_string(digit_decompose(61, {4, 3, 3, 2})) == "3101");
  for (long c = 0; c < 72; ++c)
    for (const Word& block : {Word{6, 3, 4}, Word{3, 2, 4, 3}, Word{4, 3, 3, 2}}) {
      Word d = digit_decompose(c, block);
      long back = 0;
      for (std::size_t j = 0; j < block.size(); ++j) {
        CHECK(d[j] < block[j]);
        back = back * block[j] + d[j];
      }
      CHECK(back == c);
    }
  CHECK_THROWS_AS(digit_decompose(6, {2, 3}), Error);
}

TEST_CASE("constant-product morphisms") {
  ConstantProductMorphism psi = ConstantProductMorphism::parse("2: 6 3 4; 3: 3 2 4 3; 4: 4 3 3 2");
  CHECK(psi.delta == 72);
  CHECK_FALSE(psi.uniform());
  CHECK(ConstantProductMorphism::parse("2: 2 3; 3: 3 2").uniform());
  CHECK_THROWS_AS(ConstantProductMorphism::parse("a: 2 3; b: 2 2"), Error);
  CHECK_THROWS_AS(ConstantProductMorphism::parse("a: 1 6"), Error);
  CHECK_THROWS_AS(ConstantProductMorphism::parse("a: 2 x"), Error);
}

TEST_CASE("integer-base expansions of rationals") {
  UPWord d = delta_expansion(Rational(932, 3885), 6);
  CHECK(d.to_string() == "1 (2345)");
  CHECK(delta_value(d, 6) == Rational(932, 3885));
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> den(1, 500);
  for (int t = 0; t < 200; ++t) {
    int q = den(rng);
    Rational r(std::uniform_int_distribution<int>(0, q - 1)(rng), q);
    r.canonicalize();
    for (long delta : {2L, 6L, 10L, 72L}) {
      UPWord e = delta_expansion(r, delta);
      CHECK(delta_value(e, delta) == r);
      CHECK_NOTHROW(validate_delta_expansion(e, delta));
      std::vector<long> radices(30, delta);
      CHECK(e.prefix(30) == integer_greedy(r, radices));
    }
  }
  CHECK_THROWS_AS(validate_delta_expansion(UPWord{{}, {5}}, 6), Error);
  CHECK_THROWS_AS(validate_delta_expansion(UPWord{{}, {6}}, 6), Error);
  CHECK_THROWS_AS(delta_expansion(Rational(1), 6), Error);
  CHECK_THROWS_AS(delta_expansion(Rational(-1, 2), 6), Error);
}

TEST_CASE("block expansion equals the greedy expansion in the image base") {
  ConstantProductMorphism psi = ConstantProductMorphism::parse("2: 6 3 4; 3: 3 2 4 3; 4: 4 3 3 2");
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> letter(0, 2);
  for (int t = 0; t < 50; ++t) {
    Word pre;
    for (int i = 0; i < 40; ++i) pre.push_back(letter(rng));
    WordSpec spec = WordSpec::explicit_word(pre);
    Rational r(std::uniform_int_distribution<int>(0, 998)(rng), 999);
    r.canonicalize();
    std::vector<long> radices = radices_of(psi, pre);
    Word expect = integer_greedy(r, radices);
    expect.resize(100);
    CHECK(block_expand(delta_expansion(r, psi.delta), spec, psi, 100) == expect);
  }
}

TEST_CASE("frying pan and letter-to-letter machines") {
  ConstantProductMorphism psi = ConstantProductMorphism::parse("2: 2 3; 3: 3 2");
  UPWord d = delta_expansion(Rational(932, 3885), 6);
  WordMachine fp = build_frying_pan(d, psi);
  CHECK(fp.state_count() == 5);
  Word tm = thue_morse(0, 1).stream(64);
  Word words_out = fp.run(tm);
  CHECK(to_string(Word(words_out.begin(), words_out.begin() + 16)) == "0110111121021020");
  LetterMachine l = letter_to_letter(fp, psi, d);
  LetterMachine m = merge_equal_residues(l);
  CHECK(l.states == 15);
  CHECK(m.states == 14);
  std::vector<long> radices = radices_of(psi, tm);
  CHECK(l.run(radices) == words_out);
  CHECK(m.run(radices) == words_out);
  CHECK(m.run(radices) == integer_greedy(Rational(932, 3885), radices));
  // residues are the values still to expand, so distinct states keep distinct residues after merging
  for (std::size_t i = 0; i < m.residue.size(); ++i)
    for (std::size_t j = i + 1; j < m.residue.size(); ++j) CHECK(m.residue[i] != m.residue[j]);
  ConstantProductMorphism nonuniform = ConstantProductMorphism::parse("a: 6; b: 2 3");
  UPWord d2 = delta_expansion(Rational(1, 7), 6);
  try {
    letter_to_letter(build_frying_pan(d2, nonuniform), nonuniform, d2);
    FAIL("expected NonUniformMorphism");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::non_uniform_morphism);
  }
}
