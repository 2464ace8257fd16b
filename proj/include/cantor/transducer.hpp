#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/number_field.hpp"
#include "cantor/words.hpp"

namespace cantor {

enum class Mode { greedy, quasi };
const char* to_string(Mode m);
Mode parse_mode(std::string_view text);

struct BaseAlphabet {
  NumberField field;
  std::vector<FieldElement> letters;
  std::vector<std::string> names;
  std::vector<bool> pisot_verified;

  // Every letter must exceed 1. With verify set, each letter must also be a
  // Pisot number of the field's degree (NotPisot otherwise).
  static BaseAlphabet make(const NumberField& field, std::vector<FieldElement> letters,
                           std::vector<std::string> names = {}, bool verify = true);
  std::size_t size() const { return letters.size(); }
  bool operator==(const BaseAlphabet& o) const;
};

struct Step {
  long digit;
  FieldElement next;
};

Step greedy_step(const FieldElement& q, const FieldElement& beta);
Step quasi_step(const FieldElement& q, const FieldElement& beta);
Step step(Mode mode, const FieldElement& q, const FieldElement& beta);

inline constexpr std::size_t default_state_cap = 100000;

struct Transducer {
  struct Edge {
    long digit;
    std::size_t target;
    bool operator==(const Edge& o) const { return digit == o.digit && target == o.target; }
  };

  BaseAlphabet alphabet;
  Mode mode = Mode::greedy;
  std::vector<FieldElement> states;
  std::size_t initial = 0;
  std::vector<std::vector<Edge>> edges;  // edges[state][letter]

  std::size_t size() const { return states.size(); }
  std::optional<std::size_t> find_state(const FieldElement& s) const;
  // Digits written when reading `input` from `from`, and the state reached.
  std::pair<Word, std::size_t> read(std::size_t from, const Word& input) const;
  bool operator==(const Transducer& o) const;
};

Transducer build(const BaseAlphabet& e, const FieldElement& r, Mode mode, std::size_t state_cap = default_state_cap);

struct RunResult {
  Word digits;
  std::size_t visited;
};

RunResult run(const BaseAlphabet& e, const FieldElement& r, const WordSpec& base, std::size_t n, Mode mode,
              std::size_t state_cap = default_state_cap);
UPWord run_up(const BaseAlphabet& e, const FieldElement& r, const UPWord& base, Mode mode,
              std::size_t state_cap = default_state_cap);

std::string to_dot(const Transducer& t);
std::string to_json(const Transducer& t);
Transducer from_json(std::string_view text);

}  // namespace cantor
