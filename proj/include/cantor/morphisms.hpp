#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cantor/rational.hpp"
#include "cantor/words.hpp"

namespace cantor {

// psi(a) is a block of integer radices whose product is the same delta for every a.
struct ConstantProductMorphism {
  long delta = 0;
  std::vector<std::string> names;  // source letters
  std::vector<Word> images;

  void validate() const;
  bool uniform() const;
  // "a: 6 3 4; b: 3 2 4 3"
  static ConstantProductMorphism parse(std::string_view text);
};

// Mixed-radix digits of c: c = sum_j out[j] * block[j+1] * ... * block[l-1].
Word digit_decompose(long c, const Word& block);

// Greedy expansion of r in [0, 1) in integer base delta, by long division.
UPWord delta_expansion(const Rational& r, long delta);
Rational delta_value(const UPWord& digits, long delta);
void validate_delta_expansion(const UPWord& digits, long delta);

// First n digits of the expansion in the Cantor base psi(preimage).
Word block_expand(const UPWord& d_delta_r, const WordSpec& preimage, const ConstantProductMorphism& psi, std::size_t n);

// Machine reading source letters and writing digit words.
struct WordMachine {
  struct Edge {
    Word output;
    int target;
  };
  int initial = 0;
  std::vector<std::vector<Edge>> edges;  // edges[state][source letter]

  std::size_t state_count() const { return edges.size(); }
  Word run(const Word& input) const;
};

WordMachine build_frying_pan(const UPWord& d_delta_r, const ConstantProductMorphism& psi);

// Machine reading radices and writing one digit per step. residue[q] is the
// value still to be expanded when in q, as a fraction of the current weight.
struct LetterMachine {
  struct Edge {
    int from;
    long input;
    int digit;
    int to;
  };
  int initial = 0;
  std::size_t states = 0;
  std::vector<Edge> edges;
  std::vector<Rational> residue;

  Word run(const std::vector<long>& input) const;
};

// Replaces each word-output edge by a chain of single-digit edges. The
// residues of the original states are those of the delta-expansion tails.
LetterMachine letter_to_letter(const WordMachine& machine, const ConstantProductMorphism& psi, const UPWord& d_delta_r);
LetterMachine merge_equal_residues(const LetterMachine& m);

}  // namespace cantor
