#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cantor {

// Letters index a base alphabet; digits are nonnegative integers. Both are
// carried as plain ints.
using Word = std::vector<int>;

// Digits below 10 are written without separators, anything else space-separated.
std::string to_string(const Word& w);

struct UPWord {
  Word preperiod;
  Word period;

  int at(std::size_t i) const;
  Word prefix(std::size_t n) const;
  bool operator==(const UPWord& o) const { return preperiod == o.preperiod && period == o.period; }
  bool operator<(const UPWord& o) const {
    return preperiod != o.preperiod ? preperiod < o.preperiod : period < o.period;
  }
  // "pre (per)"
  std::string to_string() const;
};

UPWord up_canonicalize(UPWord w);
UPWord up_shift(const UPWord& w, std::size_t n);

enum class LexOrder { less, equal, greater };
LexOrder up_lex_compare(const UPWord& u, const UPWord& v);

// Fixed point of a k-uniform morphism starting with `seed`, read through `coding`.
struct MorphicSpec {
  int k = 2;
  std::vector<Word> images;  // images[a] = mu(a)
  Word coding;               // coding[a]
  int seed = 0;
  std::vector<std::string> names;  // optional display names of source letters

  void validate() const;
  int letter(std::size_t i) const;  // uncoded letter of the fixed point
};

// Deterministic automaton reading base-b digits most significant first.
struct AutomatonSpec {
  int base = 2;
  std::vector<std::vector<int>> next;  // next[q][digit]
  Word output;
  int initial = 0;

  void validate() const;
  int state_for(std::size_t i) const;
};

struct ExplicitSpec {
  Word prefix;
  std::function<int(std::size_t)> generator;  // letters beyond the prefix, by absolute index
};

class WordSpec {
 public:
  enum class Kind { up, morphic, automaton, explicit_word };

  static WordSpec up(UPWord w);
  static WordSpec morphic(MorphicSpec m);
  static WordSpec automaton(AutomatonSpec a);
  static WordSpec explicit_word(Word prefix, std::function<int(std::size_t)> generator = {});

  Kind kind() const;
  std::size_t offset() const { return offset_; }
  const UPWord& as_up() const;
  const MorphicSpec& as_morphic() const;
  const AutomatonSpec& as_automaton() const;

  int at(std::size_t i) const;
  Word stream(std::size_t n) const;
  WordSpec shifted(std::size_t n) const;

 private:
  using Variant = std::variant<UPWord, MorphicSpec, AutomatonSpec, ExplicitSpec>;
  explicit WordSpec(Variant v) : body_(std::make_shared<const Variant>(std::move(v))) {}
  std::shared_ptr<const Variant> body_;
  std::size_t offset_ = 0;
};

Word stream(const WordSpec& spec, std::size_t n);
WordSpec shift(const WordSpec& spec, std::size_t n);

// Morphic view of an automaton: states become letters, mu(q) = next[q][0..b-1].
MorphicSpec to_morphic(const AutomatonSpec& a);
AutomatonSpec to_automaton(const MorphicSpec& m);

// The word obtained by replacing letter a of the input by blocks[a] (all blocks
// of equal length). The result stays uniform-morphic.
WordSpec substitute_blocks(const WordSpec& spec, const std::vector<Word>& blocks);

// Thue-Morse word over two letters: first = 0 -> 01, 1 -> 10 read through letters[a].
WordSpec thue_morse(int letter0 = 0, int letter1 = 1);

// Text formats:
//   up: <pre> (<per>)           also a bare "<pre> (<per>)"
//   morphic: k=2; mu: a->ab, b->ba; coding: a->0, b->1; seed: a
//   automaton: <file>
//   thue-morse
// followed by any number of "| blocks: 0->101, 1->110" and "| shift: 1",
// applied left to right.
UPWord parse_up(std::string_view text);
// Inverse of the morphic text format; unnamed letters are written q0, q1, ...
std::string to_text(const MorphicSpec& m);
WordSpec parse_word_spec(std::string_view text);
AutomatonSpec parse_automaton_table(std::string_view text);

}  // namespace cantor
