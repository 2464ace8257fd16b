#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "cantor/transducer.hpp"

namespace cantor::cli {

enum class Command {
  build,
  expand,
  expand_up,
  morphism_expand,
  analyze,
  prefix_table,
  admissible,
  transduce_morphic,
  reproduce,
};

enum class Format { text, json, dot };

struct JobConfig {
  Command command = Command::build;
  Format format = Format::text;

  std::string field = "x";
  std::string bases;
  std::string point = "1";
  Mode mode = Mode::greedy;
  bool force = false;
  std::size_t state_cap = default_state_cap;

  std::string base_word;  // word spec over letter indices
  std::string base_up;    // ultimately periodic base over letter indices
  std::size_t n = 20;

  std::string property;   // analyze: two-walk | scc | complexity
  std::string json_file;  // analyze: saved transducer
  std::string blocks;     // analyze complexity: "23,32"

  std::size_t max_shift = 30;
  std::string tail = "200";
  std::size_t horizon = 0;  // 0: 40 * |tail|

  std::string psi;       // morphism-expand
  std::string preimage;  // morphism-expand
  bool tables = false;

  std::string candidate;  // admissible

  std::string scenario;  // reproduce
  bool list = false;

  bool show_help = false;
  std::string help_text;
};

// Throws Error(usage_error) with a diagnostic. --help yields show_help.
JobConfig parse_args(int argc, const char* const* argv);

// Returns the process exit status: 0, or 1 when a reproduce check fails.
// Domain errors propagate as cantor::Error.
int execute(const JobConfig& job, std::ostream& out);

// parse_args + execute with the exit-code policy (0 ok, 1 domain error, 2 usage).
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cantor::cli
