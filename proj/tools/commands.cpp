#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cantor/analysis.hpp"
#include "cantor/error.hpp"
#include "cantor/expr.hpp"
#include "cantor/morphisms.hpp"
#include "json.hpp"
#include "scenarios.hpp"

namespace cantor::cli {

namespace {

using nlohmann::json;

std::size_t cap_from_env() {
  const char* v = std::getenv("CANTOR_STATE_CAP");
  if (!v || !*v) return default_state_cap;
  char* end = nullptr;
  unsigned long long cap = std::strtoull(v, &end, 10);
  if (*end != '\0' || cap == 0) throw Error(Errc::usage_error, std::string("CANTOR_STATE_CAP: not a positive integer: '") + v + "'");
  return static_cast<std::size_t>(cap);
}

std::string trim_copy(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

// Syntax check of expression arguments, so malformed input is a usage error.
void check_expression(const char* option, const std::string& text, char var) {
  try {
    if (var == 'x' && text.rfind("field", 0) == 0) return;
    std::string t = trim_copy(text);
    if (var == 'd' && !t.empty() && t.front() == '[') {
      if (t.back() != ']') throw Error(Errc::parse_error, "unterminated coefficient list '" + t + "'");
      for (const std::string& c : split_top_level(std::string_view(t).substr(1, t.size() - 2)))
        if (parse_polynomial(c, var).size() > 1) throw Error(Errc::parse_error, "coefficient '" + c + "' is not a rational");
      return;
    }
    parse_polynomial(text, var);
  } catch (const Error& e) {
    throw Error(Errc::usage_error, std::string(option) + ": " + e.what());
  }
}

void check_bases(const std::string& text) {
  auto items = split_top_level(text);
  if (items.empty()) throw Error(Errc::usage_error, "--bases: expected a comma-separated list");
  for (const std::string& b : items) check_expression("--bases", b, 'd');
}

void add_field_options(CLI::App* sub, JobConfig& job, std::string& mode, bool need_point) {
  sub->add_option("--field", job.field, "minimal polynomial in x (largest real root), or 'field { ... }'")
      ->capture_default_str();
  sub->add_option("--bases", job.bases, "comma-separated base letters as polynomials in d")->required();
  auto* p = sub->add_option("--point", job.point, "the expanded number, a polynomial in d");
  if (need_point) p->required();
  sub->add_option("--mode", mode, "greedy | quasi")->check(CLI::IsMember({"greedy", "quasi", "quasi-greedy"}));
  sub->add_flag("--force", job.force, "accept base letters that are not Pisot numbers of the field degree");
  sub->add_option("--state-cap", job.state_cap, "abort construction beyond this many states (env CANTOR_STATE_CAP)");
}

}  // namespace

JobConfig parse_args(int argc, const char* const* argv) {
  JobConfig job;
  job.state_cap = cap_from_env();
  std::string mode, format;

  CLI::App app{"Expansions of real numbers in Cantor real bases over finite Pisot alphabets"};
  app.name("cantor");
  app.require_subcommand(1, 1);
  app.footer(
      "Exit status: 0 success, 1 domain error or failed check, 2 usage error.\n"
      "Letters of --base-word / --base-up index the --bases list from 0.");

  auto* build = app.add_subcommand("build", "construct the greedy or quasi-greedy transducer from a point");
  add_field_options(build, job, mode, true);
  build->add_option("--format", format, "text | dot | json")->check(CLI::IsMember({"text", "dot", "json"}));

  auto* expand = app.add_subcommand("expand", "first n digits of the expansion along a described base");
  add_field_options(expand, job, mode, true);
  expand->add_option("--base-word", job.base_word, "word spec: up, morphic, automaton or thue-morse")->required();
  expand->add_option("-n,--digits", job.n, "number of digits")->capture_default_str();
  expand->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* expand_up = app.add_subcommand("expand-up", "expansion along an ultimately periodic base, as pre (per)");
  add_field_options(expand_up, job, mode, true);
  expand_up->add_option("--base-up", job.base_up, "ultimately periodic base, e.g. '(0 1)'")->required();
  expand_up->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* mexp = app.add_subcommand("morphism-expand", "expansion in the base psi(preimage) for a constant-product psi");
  mexp->add_option("--psi", job.psi, "images, e.g. '2: 2 3; 3: 3 2'")->required();
  mexp->add_option("--point", job.point, "rational number in [0, 1)")->required();
  mexp->add_option("--preimage", job.preimage, "word spec over the letters of psi (by position)")->required();
  mexp->add_option("-n,--digits", job.n, "number of digits")->capture_default_str();
  mexp->add_flag("--tables", job.tables, "also print the digit morphisms h_a");
  mexp->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* analyze = app.add_subcommand("analyze", "two-walk property, strongly connected components or complexity");
  analyze->add_option("property", job.property, "two-walk | scc | complexity")
      ->required()
      ->check(CLI::IsMember({"two-walk", "scc", "complexity"}));
  analyze->add_option("--json", job.json_file, "transducer saved by 'build --format json'");
  analyze->add_option("--field", job.field, "as for build")->capture_default_str();
  analyze->add_option("--bases", job.bases, "as for build");
  analyze->add_option("--point", job.point, "as for build")->capture_default_str();
  analyze->add_option("--mode", mode, "greedy | quasi")->check(CLI::IsMember({"greedy", "quasi", "quasi-greedy"}));
  analyze->add_flag("--force", job.force, "as for build");
  analyze->add_option("--state-cap", job.state_cap, "as for build");
  analyze->add_option("--blocks", job.blocks, "complexity: comma-separated input blocks, e.g. '23,32'");
  analyze->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* prefix = app.add_subcommand("prefix-table", "group shifts n by the prefix w in w tail^omega");
  add_field_options(prefix, job, mode, false);
  prefix->add_option("--base-word", job.base_word, "word spec of the base")->required();
  prefix->add_option("--max-shift", job.max_shift, "largest shift n")->capture_default_str();
  prefix->add_option("--tail", job.tail, "the periodic tail")->capture_default_str();
  prefix->add_option("--horizon", job.horizon, "digits examined per shift (default 40 |tail|)");
  prefix->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* adm = app.add_subcommand("admissible", "is an ultimately periodic digit sequence a greedy expansion?");
  adm->add_option("--field", job.field, "as for build")->capture_default_str();
  adm->add_option("--bases", job.bases, "as for build")->required();
  adm->add_option("--candidate", job.candidate, "digits, e.g. '1 (0)'")->required();
  adm->add_option("--base-up", job.base_up, "ultimately periodic base")->required();
  adm->add_flag("--force", job.force, "as for build");
  adm->add_option("--state-cap", job.state_cap, "as for build");
  adm->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* tm = app.add_subcommand("transduce-morphic", "uniform-morphic description of the expansion along a morphic base");
  add_field_options(tm, job, mode, false);
  tm->add_option("--base-word", job.base_word, "morphic or automaton word spec")->required();
  tm->add_option("-n,--digits", job.n, "length of the printed prefix")->capture_default_str();
  tm->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* rep = app.add_subcommand("reproduce", "run a packaged scenario and check it against stored values");
  rep->add_option("scenario", job.scenario, "scenario name, or 'all'");
  rep->add_flag("--list", job.list, "list scenario names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    job.show_help = true;
    job.help_text = app.help();
    return job;
  } catch (const CLI::CallForAllHelp&) {
    job.show_help = true;
    job.help_text = app.help("", CLI::AppFormatMode::All);
    return job;
  } catch (const CLI::ParseError& e) {
    throw Error(Errc::usage_error, e.what());
  }

  const std::pair<CLI::App*, Command> table[] = {
      {build, Command::build},           {expand, Command::expand},
      {expand_up, Command::expand_up},   {mexp, Command::morphism_expand},
      {analyze, Command::analyze},       {prefix, Command::prefix_table},
      {adm, Command::admissible},        {tm, Command::transduce_morphic},
      {rep, Command::reproduce},
  };
  for (auto [sub, cmd] : table)
    if (sub->parsed()) job.command = cmd;

  if (!mode.empty())
    job.mode = parse_mode(mode);
  else if (job.command == Command::prefix_table)
    job.mode = Mode::quasi;
  if (format == "json") job.format = Format::json;
  if (format == "dot") job.format = Format::dot;
  if (job.state_cap == 0) throw Error(Errc::usage_error, "--state-cap must be positive");

  switch (job.command) {
    case Command::build:
    case Command::expand:
    case Command::expand_up:
    case Command::prefix_table:
    case Command::transduce_morphic:
    case Command::admissible:
      check_expression("--field", job.field, 'x');
      check_bases(job.bases);
      if (job.command != Command::admissible) check_expression("--point", job.point, 'd');
      if (job.command == Command::prefix_table && job.tail.empty()) throw Error(Errc::usage_error, "--tail must be nonempty");
      break;
    case Command::analyze:
      if (job.json_file.empty()) {
        if (job.bases.empty()) throw Error(Errc::usage_error, "analyze: give --json or --bases");
        check_expression("--field", job.field, 'x');
        check_bases(job.bases);
        check_expression("--point", job.point, 'd');
      } else if (!job.bases.empty()) {
        throw Error(Errc::usage_error, "analyze: --json and --bases are exclusive");
      }
      if (job.property == "complexity" && job.blocks.empty())
        throw Error(Errc::usage_error, "analyze complexity: --blocks is required");
      break;
    case Command::morphism_expand:
      try {
        parse_rational(job.point);
      } catch (const Error& e) {
        throw Error(Errc::usage_error, std::string("--point: ") + e.what());
      }
      break;
    case Command::reproduce:
      if (job.scenario.empty() && !job.list) throw Error(Errc::usage_error, "reproduce: name a scenario or use --list");
      break;
  }
  return job;
}

namespace {

BaseAlphabet make_alphabet(const JobConfig& job) {
  NumberField field = parse_field(job.field);
  std::vector<FieldElement> letters;
  std::vector<std::string> names = split_top_level(job.bases);
  for (const std::string& b : names) letters.push_back(parse_field_element(field, b));
  return BaseAlphabet::make(field, std::move(letters), names, !job.force);
}

std::string word_text(const Word& w) { return w.empty() ? "ε" : to_string(w); }

std::string letters_text(const BaseAlphabet& e, const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + e.names[static_cast<std::size_t>(w[i])];
  return s;
}

// A block is a whitespace-separated list of letter names or indices; without
// whitespace every character is one letter.
Word parse_block(const BaseAlphabet& e, const std::string& text) {
  std::vector<std::string> tokens;
  if (text.find_first_of(" \t") != std::string::npos) {
    std::istringstream in(text);
    for (std::string t; in >> t;) tokens.push_back(t);
  } else {
    for (char c : text) tokens.push_back(std::string(1, c));
  }
  Word w;
  for (const std::string& t : tokens) {
    auto it = std::find(e.names.begin(), e.names.end(), t);
    if (it != e.names.end()) {
      w.push_back(static_cast<int>(it - e.names.begin()));
      continue;
    }
    bool numeric = !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
    if (!numeric || std::stoul(t) >= e.size())
      throw Error(Errc::malformed_spec, "block letter '" + t + "' is neither a base name nor an index");
    w.push_back(std::stoi(t));
  }
  if (w.empty()) throw Error(Errc::malformed_spec, "empty block");
  return w;
}

void check_letters(const BaseAlphabet& e, const Word& w, const char* what) {
  for (int a : w)
    if (a < 0 || static_cast<std::size_t>(a) >= e.size())
      throw Error(Errc::malformed_spec, std::string(what) + ": letter " + std::to_string(a) + " outside the alphabet");
}

json word_json(const Word& w) { return json(std::vector<int>(w.begin(), w.end())); }

// Columns are padded by code points, so UTF-8 cells such as "ε" line up.
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.resize(c + 1, 0);
      width[c] = std::max(width[c], display_width(r[c]));
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - display_width(r[c]) + 2, ' ');
    }
    out << line << "\n";
  }
}

void print_transducer(std::ostream& out, const Transducer& t) {
  out << "field: " << t.alphabet.field.to_text() << "\n";
  out << "mode: " << to_string(t.mode) << "\n";
  out << "states: " << t.size() << "\n";
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"state", "value"};
  for (const std::string& n : t.alphabet.names) head.push_back(n);
  rows.push_back(head);
  for (std::size_t s = 0; s < t.size(); ++s) {
    std::vector<std::string> row{std::to_string(s) + (s == t.initial ? "*" : ""), t.states[s].to_poly_string()};
    for (const auto& e : t.edges[s]) row.push_back(std::to_string(e.digit) + " -> " + std::to_string(e.target));
    rows.push_back(row);
  }
  print_table(out, rows);
}

Transducer load_or_build(const JobConfig& job) {
  if (!job.json_file.empty()) {
    std::ifstream in(job.json_file);
    if (!in) throw Error(Errc::parse_error, "cannot read '" + job.json_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
  }
  BaseAlphabet e = make_alphabet(job);
  return build(e, parse_field_element(e.field, job.point), job.mode, job.state_cap);
}

int run_build(const JobConfig& job, std::ostream& out) {
  BaseAlphabet e = make_alphabet(job);
  Transducer t = build(e, parse_field_element(e.field, job.point), job.mode, job.state_cap);
  if (job.format == Format::dot)
    out << to_dot(t);
  else if (job.format == Format::json)
    out << to_json(t) << "\n";
  else
    print_transducer(out, t);
  return 0;
}

int run_expand(const JobConfig& job, std::ostream& out) {
  BaseAlphabet e = make_alphabet(job);
  WordSpec base = parse_word_spec(job.base_word);
  check_letters(e, base.stream(std::min<std::size_t>(job.n, 4096)), "--base-word");
  RunResult r = run(e, parse_field_element(e.field, job.point), base, job.n, job.mode, job.state_cap);
  if (job.format == Format::json) {
    out << json{{"digits", word_json(r.digits)}, {"visited", r.visited}}.dump() << "\n";
  } else {
    out << "digits: " << to_string(r.digits) << "\n";
    out << "states visited: " << r.visited << "\n";
  }
  return 0;
}

int run_expand_up(const JobConfig& job, std::ostream& out) {
  BaseAlphabet e = make_alphabet(job);
  UPWord base = parse_up(job.base_up);
  check_letters(e, base.preperiod, "--base-up");
  check_letters(e, base.period, "--base-up");
  UPWord d = run_up(e, parse_field_element(e.field, job.point), base, job.mode, job.state_cap);
  if (job.format == Format::json)
    out << json{{"preperiod", word_json(d.preperiod)}, {"period", word_json(d.period)}}.dump() << "\n";
  else
    out << d.to_string() << "\n";
  return 0;
}

int run_morphism_expand(const JobConfig& job, std::ostream& out) {
  ConstantProductMorphism psi = ConstantProductMorphism::parse(job.psi);
  Rational r = parse_rational(job.point);
  WordSpec pre = parse_word_spec(job.preimage);
  UPWord d = delta_expansion(r, psi.delta);
  Word digits = block_expand(d, pre, psi, job.n);
  WordMachine fp = build_frying_pan(d, psi);
  std::size_t letter_states = 0, merged_states = 0;
  bool uniform = psi.uniform();
  if (uniform) {
    LetterMachine l = letter_to_letter(fp, psi, d);
    letter_states = l.states;
    merged_states = merge_equal_residues(l).states;
  }
  if (job.format == Format::json) {
    json j{{"delta", psi.delta},
           {"delta_expansion", {{"preperiod", word_json(d.preperiod)}, {"period", word_json(d.period)}}},
           {"digits", word_json(digits)},
           {"machine_states", fp.state_count()}};
    if (uniform) {
      j["letter_to_letter_states"] = letter_states;
      j["merged_states"] = merged_states;
    }
    if (job.tables) {
      json t = json::object();
      for (std::size_t a = 0; a < psi.names.size(); ++a) {
        json row = json::array();
        for (long c = 0; c < psi.delta; ++c) row.push_back(word_json(digit_decompose(c, psi.images[a])));
        t[psi.names[a]] = row;
      }
      j["tables"] = t;
    }
    out << j.dump() << "\n";
    return 0;
  }
  out << "delta: " << psi.delta << "\n";
  out << "delta-expansion: " << d.to_string() << "\n";
  out << "digits: " << to_string(digits) << "\n";
  out << "machine states: " << fp.state_count();
  if (uniform) out << ", letter-to-letter " << letter_states << ", merged " << merged_states;
  out << "\n";
  if (job.tables) {
    for (std::size_t a = 0; a < psi.names.size(); ++a) {
      out << "h_" << psi.names[a] << ":";
      for (long c = 0; c < psi.delta; ++c) out << (c ? ", " : " ") << c << "->" << to_string(digit_decompose(c, psi.images[a]));
      out << "\n";
    }
  }
  return 0;
}

int run_analyze(const JobConfig& job, std::ostream& out) {
  Transducer t = load_or_build(job);
  const BaseAlphabet& e = t.alphabet;
  if (job.property == "two-walk") {
    TwoWalkResult r = two_walk(t);
    if (job.format == Format::json) {
      json j{{"states", t.size()}, {"two_walk", r.holds}};
      if (r.witness)
        j["witness"] = {{"state", r.witness->state},
                        {"u", word_json(r.witness->u)},
                        {"v", word_json(r.witness->v)},
                        {"w", word_json(r.witness->w)}};
      out << j.dump() << "\n";
    } else {
      out << "states: " << t.size() << "\n";
      out << "two-walk: " << (r.holds ? "yes" : "no") << "\n";
      if (r.witness) {
        out << "state: " << r.witness->state << " (" << t.states[r.witness->state].to_poly_string() << ")\n";
        out << "u: " << letters_text(e, r.witness->u) << "\n";
        out << "v: " << letters_text(e, r.witness->v) << "\n";
        out << "w: " << to_string(r.witness->w) << "\n";
      }
    }
  } else if (job.property == "scc") {
    auto comps = scc(t);
    if (job.format == Format::json) {
      out << json{{"states", t.size()}, {"strongly_connected", comps.size() == 1}, {"components", comps}}.dump() << "\n";
    } else {
      out << "states: " << t.size() << "\n";
      out << "components: " << comps.size() << "\n";
      out << "strongly connected: " << (comps.size() == 1 ? "yes" : "no") << "\n";
      for (std::size_t i = 0; i < comps.size(); ++i) out << "  component " << i << ": " << comps[i].size() << " states\n";
    }
  } else {
    std::vector<Word> blocks;
    for (const std::string& b : split_top_level(job.blocks)) blocks.push_back(parse_block(e, b));
    ComplexityRatio c = complexity_ratio(t, blocks);
    if (job.format == Format::json)
      out << json{{"visited", c.visited}, {"total", c.total}, {"ratio", cantor::to_string(c.ratio)}}.dump() << "\n";
    else
      out << "visited " << c.visited << " of " << c.total << " states (" << cantor::to_string(c.ratio) << ")\n";
  }
  return 0;
}

int run_prefix_table(const JobConfig& job, std::ostream& out) {
  BaseAlphabet e = make_alphabet(job);
  WordSpec base = parse_word_spec(job.base_word);
  Word tail = parse_up("(" + job.tail + ")").period;
  std::size_t horizon = job.horizon ? job.horizon : 40 * tail.size();
  PrefixTable pt = prefix_table(e, parse_field_element(e.field, job.point), base, job.max_shift, tail, horizon, job.mode,
                                job.state_cap);
  std::vector<std::pair<Word, std::vector<std::size_t>>> ordered(pt.groups.begin(), pt.groups.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.second.front() < b.second.front(); });
  if (job.format == Format::json) {
    json groups = json::array();
    for (const auto& [w, ns] : ordered) groups.push_back({{"prefix", word_json(w)}, {"shifts", ns}});
    out << json{{"tail", word_json(tail)}, {"groups", groups}, {"undetected", pt.undetected}}.dump() << "\n";
    return 0;
  }
  std::vector<std::vector<std::string>> rows{{"prefix", "n"}};
  for (const auto& [w, ns] : ordered) {
    std::string list;
    for (std::size_t i = 0; i < ns.size(); ++i) list += (i ? ", " : "") + std::to_string(ns[i]);
    rows.push_back({word_text(w), list});
  }
  print_table(out, rows);
  if (!pt.undetected.empty()) {
    out << "undetected:";
    for (std::size_t n : pt.undetected) out << " " << n;
    out << "\n";
  }
  return 0;
}

int run_admissible(const JobConfig& job, std::ostream& out) {
  BaseAlphabet e = make_alphabet(job);
  UPWord base = parse_up(job.base_up);
  check_letters(e, base.preperiod, "--base-up");
  check_letters(e, base.period, "--base-up");
  bool ok = admissible_up(parse_up(job.candidate), base, e, job.state_cap);
  if (job.format == Format::json)
    out << json{{"admissible", ok}}.dump() << "\n";
  else
    out << "admissible: " << (ok ? "yes" : "no") << "\n";
  return 0;
}

int run_transduce_morphic(const JobConfig& job, std::ostream& out) {
  BaseAlphabet e = make_alphabet(job);
  WordSpec base = parse_word_spec(job.base_word);
  WordSpec digits = transduce_uniform_morphic(e, parse_field_element(e.field, job.point), base, job.mode, job.state_cap);
  const MorphicSpec& m = digits.as_morphic();
  if (job.format == Format::json) {
    json images = json::array();
    for (const Word& w : m.images) images.push_back(word_json(w));
    out << json{{"k", m.k}, {"images", images}, {"coding", word_json(m.coding)}, {"seed", m.seed},
                {"prefix", word_json(digits.stream(job.n))}}
               .dump()
        << "\n";
  } else {
    out << "letters: " << m.images.size() << "\n";
    out << to_text(m) << "\n";
    out << "prefix: " << to_string(digits.stream(job.n)) << "\n";
  }
  return 0;
}

int run_reproduce(const JobConfig& job, std::ostream& out) {
  if (job.list) {
    for (const std::string& n : scenario_names()) out << n << "\n";
    return 0;
  }
  if (job.scenario == "all") {
    bool ok = true;
    for (const std::string& n : scenario_names()) {
      out << "[" << n << "]\n";
      ok = reproduce(n, out) && ok;
    }
    return ok ? 0 : 1;
  }
  return reproduce(job.scenario, out) ? 0 : 1;
}

}  // namespace

int execute(const JobConfig& job, std::ostream& out) {
  switch (job.command) {
    case Command::build: return run_build(job, out);
    case Command::expand: return run_expand(job, out);
    case Command::expand_up: return run_expand_up(job, out);
    case Command::morphism_expand: return run_morphism_expand(job, out);
    case Command::analyze: return run_analyze(job, out);
    case Command::prefix_table: return run_prefix_table(job, out);
    case Command::admissible: return run_admissible(job, out);
    case Command::transduce_morphic: return run_transduce_morphic(job, out);
    case Command::reproduce: return run_reproduce(job, out);
  }
  return 0;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  JobConfig job;
  try {
    job = parse_args(argc, argv);
  } catch (const Error& e) {
    err << e.what() << "\nRun with --help for usage.\n";
    return 2;
  }
  if (job.show_help) {
    out << job.help_text;
    return 0;
  }
  try {
    return execute(job, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == Errc::usage_error ? 2 : 1;
  }
}

}  // namespace cantor::cli
