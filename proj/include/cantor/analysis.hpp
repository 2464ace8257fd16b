#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "cantor/transducer.hpp"
#include "cantor/words.hpp"

namespace cantor {

// Two closed walks from `state` reading u and v (u != v) that both write w.
struct TwoWalkWitness {
  std::size_t state;
  Word u, v, w;
};

struct TwoWalkResult {
  bool holds = false;
  std::optional<TwoWalkWitness> witness;
};

// Ordered pairs (t1, t2) from which two same-output walks with different
// inputs reach `anchor` simultaneously.
struct PairSet {
  std::size_t anchor;
  std::set<std::pair<std::size_t, std::size_t>> pairs;
};

PairSet pair_set(const Transducer& t, std::size_t anchor);
TwoWalkResult two_walk(const Transducer& t);
bool replay_witness(const Transducer& t, const TwoWalkWitness& w);

std::vector<std::vector<std::size_t>> scc(const Transducer& t);
bool is_strongly_connected(const Transducer& t);

struct Restriction {
  std::vector<std::size_t> visited;                            // original states, increasing
  std::vector<std::pair<std::size_t, std::size_t>> product;    // (state, block position)
  struct Edge {
    std::size_t from;
    int letter;
    long digit;
    std::size_t to;
  };
  std::vector<Edge> edges;
};

// Reachable product of t with the automaton accepting blocks*.
Restriction restrict(const Transducer& t, const std::vector<Word>& blocks);

struct ComplexityRatio {
  std::size_t visited, total;
  Rational ratio;
};
ComplexityRatio complexity_ratio(const Transducer& t, const std::vector<Word>& blocks);

struct PrefixTable {
  std::map<Word, std::vector<std::size_t>> groups;  // prefix w -> shifts n
  std::vector<std::size_t> undetected;
};

// For each n <= max_shift, splits the expansion along the n-th shift of the base as
// w tail^omega, within the first `horizon` digits.
PrefixTable prefix_table(const BaseAlphabet& e, const FieldElement& r, const WordSpec& base, std::size_t max_shift,
                         const Word& tail, std::size_t horizon, Mode mode = Mode::quasi,
                         std::size_t state_cap = default_state_cap);
std::optional<std::size_t> split_tail(const Word& digits, const Word& tail);

bool admissible_up(const UPWord& candidate, const UPWord& base, const BaseAlphabet& e,
                   std::size_t state_cap = default_state_cap);

// Morphic description of the digit sequence produced when the fixed point of a
// uniform morphism (through its coding) is read from r.
WordSpec transduce_uniform_morphic(const BaseAlphabet& e, const FieldElement& r, const WordSpec& base, Mode mode,
                                   std::size_t state_cap = default_state_cap);

// Smallest p <= max_period such that the last `window` digits are p-periodic.
std::optional<std::size_t> find_period(const Word& digits, std::size_t max_period, std::size_t window);

}  // namespace cantor
