#include "cantor/words.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "cantor/error.hpp"

namespace cantor {

std::string to_string(const Word& w) {
  bool compact = std::all_of(w.begin(), w.end(), [](int x) { return x >= 0 && x < 10; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

int UPWord::at(std::size_t i) const {
  if (i < preperiod.size()) return preperiod[i];
  return period[(i - preperiod.size()) % period.size()];
}

Word UPWord::prefix(std::size_t n) const {
  Word out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = at(i);
  return out;
}

std::string UPWord::to_string() const {
  std::string pre = cantor::to_string(preperiod);
  return (pre.empty() ? "" : pre + " ") + "(" + cantor::to_string(period) + ")";
}

UPWord up_canonicalize(UPWord w) {
  if (w.period.empty()) throw Error(Errc::malformed_spec, "ultimately periodic word with empty period");
  const std::size_t n = w.period.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = w.period[i] == w.period[i - p];
    if (ok) {
      w.period.resize(p);
      break;
    }
  }
  while (!w.preperiod.empty() && w.preperiod.back() == w.period.back()) {
    w.preperiod.pop_back();
    std::rotate(w.period.rbegin(), w.period.rbegin() + 1, w.period.rend());
  }
  return w;
}

UPWord up_shift(const UPWord& w, std::size_t n) {
  UPWord out = w;
  if (n <= out.preperiod.size()) {
    out.preperiod.erase(out.preperiod.begin(), out.preperiod.begin() + static_cast<std::ptrdiff_t>(n));
  } else {
    std::size_t r = (n - out.preperiod.size()) % out.period.size();
    out.preperiod.clear();
    std::rotate(out.period.begin(), out.period.begin() + static_cast<std::ptrdiff_t>(r), out.period.end());
  }
  return up_canonicalize(out);
}

LexOrder up_lex_compare(const UPWord& u, const UPWord& v) {
  std::size_t span = std::max(u.preperiod.size(), v.preperiod.size()) + std::lcm(u.period.size(), v.period.size()) + 1;
  for (std::size_t i = 0; i < span; ++i) {
    int a = u.at(i), b = v.at(i);
    if (a < b) return LexOrder::less;
    if (a > b) return LexOrder::greater;
  }
  return LexOrder::equal;
}

void MorphicSpec::validate() const {
  if (k < 1) throw Error(Errc::malformed_spec, "morphism length must be positive");
  if (images.empty()) throw Error(Errc::malformed_spec, "morphism has no letters");
  if (coding.size() != images.size()) throw Error(Errc::malformed_spec, "coding must cover every letter");
  const int m = static_cast<int>(images.size());
  for (const Word& img : images) {
    if (static_cast<int>(img.size()) != k) throw Error(Errc::malformed_spec, "morphism is not uniform");
    for (int x : img)
      if (x < 0 || x >= m) throw Error(Errc::malformed_spec, "image uses an unknown letter");
  }
  if (seed < 0 || seed >= m) throw Error(Errc::malformed_spec, "unknown seed letter");
  if (images[seed][0] != seed) throw Error(Errc::malformed_spec, "morphism is not prolongable on the seed");
}

int MorphicSpec::letter(std::size_t i) const {
  Word digits;
  while (i > 0) {
    digits.push_back(static_cast<int>(i % static_cast<std::size_t>(k)));
    i /= static_cast<std::size_t>(k);
  }
  int a = seed;
  for (std::size_t j = digits.size(); j-- > 0;) a = images[a][digits[j]];
  return a;
}

void AutomatonSpec::validate() const {
  if (base < 2) throw Error(Errc::malformed_spec, "automaton base must be at least 2");
  if (next.empty() || output.size() != next.size()) throw Error(Errc::malformed_spec, "automaton needs an output per state");
  const int n = static_cast<int>(next.size());
  for (const auto& row : next) {
    if (static_cast<int>(row.size()) != base) throw Error(Errc::malformed_spec, "automaton is not complete");
    for (int t : row)
      if (t < 0 || t >= n) throw Error(Errc::malformed_spec, "transition to an unknown state");
  }
  if (initial < 0 || initial >= n) throw Error(Errc::malformed_spec, "unknown initial state");
  for (std::size_t i = 0; i < 256; ++i) {
    int q = state_for(i);
    int z = next[initial][0];
    Word digits;
    for (std::size_t j = i; j > 0; j /= static_cast<std::size_t>(base)) digits.push_back(static_cast<int>(j % base));
    for (std::size_t j = digits.size(); j-- > 0;) z = next[z][digits[j]];
    if (output[q] != output[z]) throw Error(Errc::malformed_spec, "output depends on leading zeros");
  }
}

int AutomatonSpec::state_for(std::size_t i) const {
  Word digits;
  for (; i > 0; i /= static_cast<std::size_t>(base)) digits.push_back(static_cast<int>(i % base));
  int q = initial;
  for (std::size_t j = digits.size(); j-- > 0;) q = next[q][digits[j]];
  return q;
}

WordSpec WordSpec::up(UPWord w) { return WordSpec(up_canonicalize(std::move(w))); }

WordSpec WordSpec::morphic(MorphicSpec m) {
  m.validate();
  return WordSpec(std::move(m));
}

WordSpec WordSpec::automaton(AutomatonSpec a) {
  a.validate();
  return WordSpec(std::move(a));
}

WordSpec WordSpec::explicit_word(Word prefix, std::function<int(std::size_t)> generator) {
  return WordSpec(ExplicitSpec{std::move(prefix), std::move(generator)});
}

WordSpec::Kind WordSpec::kind() const { return static_cast<Kind>(body_->index()); }

const UPWord& WordSpec::as_up() const { return std::get<UPWord>(*body_); }
const MorphicSpec& WordSpec::as_morphic() const { return std::get<MorphicSpec>(*body_); }
const AutomatonSpec& WordSpec::as_automaton() const { return std::get<AutomatonSpec>(*body_); }

int WordSpec::at(std::size_t i) const {
  const std::size_t j = i + offset_;
  switch (kind()) {
    case Kind::up: return as_up().at(j);
    case Kind::morphic: {
      const auto& m = as_morphic();
      return m.coding[m.letter(j)];
    }
    case Kind::automaton: {
      const auto& a = as_automaton();
      return a.output[a.state_for(j)];
    }
    case Kind::explicit_word: {
      const auto& e = std::get<ExplicitSpec>(*body_);
      if (j < e.prefix.size()) return e.prefix[j];
      if (!e.generator) throw Error(Errc::malformed_spec, "explicit word exhausted at index " + std::to_string(j));
      return e.generator(j);
    }
  }
  return 0;
}

Word WordSpec::stream(std::size_t n) const {
  if (kind() == Kind::morphic) {
    const auto& m = as_morphic();
    Word w{m.seed};
    while (w.size() < offset_ + n) {
      Word next;
      next.reserve(w.size() * static_cast<std::size_t>(m.k));
      for (int a : w) next.insert(next.end(), m.images[a].begin(), m.images[a].end());
      if (next.size() == w.size()) break;  // k = 1: constant word
      w = std::move(next);
    }
    Word out(n);
    for (std::size_t i = 0; i < n; ++i)
      out[i] = m.coding[offset_ + i < w.size() ? w[offset_ + i] : m.seed];
    return out;
  }
  Word out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = at(i);
  return out;
}

WordSpec WordSpec::shifted(std::size_t n) const {
  if (kind() == Kind::up) return WordSpec::up(up_shift(as_up(), n));
  WordSpec out = *this;
  out.offset_ += n;
  return out;
}

Word stream(const WordSpec& spec, std::size_t n) { return spec.stream(n); }
WordSpec shift(const WordSpec& spec, std::size_t n) { return spec.shifted(n); }

MorphicSpec to_morphic(const AutomatonSpec& a) {
  MorphicSpec m;
  m.k = a.base;
  m.images = a.next;
  m.coding = a.output;
  m.seed = a.initial;
  m.validate();
  return m;
}

AutomatonSpec to_automaton(const MorphicSpec& m) {
  AutomatonSpec a;
  a.base = m.k;
  a.next = m.images;
  a.output = m.coding;
  a.initial = m.seed;
  return a;
}

WordSpec substitute_blocks(const WordSpec& spec, const std::vector<Word>& blocks) {
  if (blocks.empty() || blocks[0].empty()) throw Error(Errc::malformed_spec, "blocks must be nonempty");
  const std::size_t len = blocks[0].size();
  for (const Word& b : blocks)
    if (b.size() != len) throw Error(Errc::malformed_spec, "blocks must share one length");
  auto block_of = [&](int letter) -> const Word& {
    if (letter < 0 || static_cast<std::size_t>(letter) >= blocks.size())
      throw Error(Errc::malformed_spec, "no block for letter " + std::to_string(letter));
    return blocks[letter];
  };

  switch (spec.kind()) {
    case WordSpec::Kind::up: {
      UPWord w;
      for (int a : spec.as_up().preperiod) for (int x : block_of(a)) w.preperiod.push_back(x);
      for (int a : spec.as_up().period) for (int x : block_of(a)) w.period.push_back(x);
      return WordSpec::up(w);
    }
    case WordSpec::Kind::explicit_word: {
      WordSpec inner = spec;
      return WordSpec::explicit_word({}, [inner, blocks, len](std::size_t i) { return blocks[inner.at(i / len)][i % len]; });
    }
    default: break;
  }
  AutomatonSpec a = spec.kind() == WordSpec::Kind::morphic ? to_automaton(spec.as_morphic()) : spec.as_automaton();
  // Reading i most significant digit first while dividing by the block length:
  // state = (inner state for the quotient read so far, running remainder).
  const int b = a.base, l = static_cast<int>(len);
  std::map<std::pair<int, int>, int> index;
  std::vector<std::pair<int, int>> states;
  auto intern = [&](std::pair<int, int> s) {
    auto [it, fresh] = index.emplace(s, static_cast<int>(states.size()));
    if (fresh) states.push_back(s);
    return it->second;
  };
  AutomatonSpec out;
  out.base = b;
  out.initial = intern({a.initial, 0});
  for (std::size_t i = 0; i < states.size(); ++i) {
    auto [q, rem] = states[i];
    std::vector<int> row;
    for (int t = 0; t < b; ++t) {
      int v = b * rem + t;
      row.push_back(intern({a.next[q][v / l], v % l}));
    }
    out.next.push_back(row);
    out.output.push_back(block_of(a.output[q])[rem]);
  }
  WordSpec result = WordSpec::morphic(to_morphic(out));
  return spec.offset() ? result.shifted(spec.offset() * len) : result;
}

WordSpec thue_morse(int letter0, int letter1) {
  MorphicSpec m;
  m.k = 2;
  m.images = {{0, 1}, {1, 0}};
  m.coding = {letter0, letter1};
  m.seed = 0;
  return WordSpec::morphic(m);
}

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

// Whitespace-separated tokens, or single characters when there is no whitespace.
std::vector<std::string> symbols(std::string_view text) {
  std::string s = trim(text);
  std::vector<std::string> out;
  if (s.find_first_of(" \t") != std::string::npos) {
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
  } else {
    for (char c : s) out.push_back(std::string(1, c));
  }
  return out;
}

int to_int(const std::string& tok) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw Error(Errc::malformed_spec, "expected a nonnegative integer, got '" + tok + "'");
  return std::stoi(tok);
}

Word digits_of(std::string_view text) {
  Word w;
  for (const std::string& s : symbols(text)) w.push_back(to_int(s));
  return w;
}

std::pair<std::string, std::string> split_rule(const std::string& rule) {
  auto arrow = rule.find("->");
  if (arrow == std::string::npos) throw Error(Errc::malformed_spec, "expected 'a->...' in '" + rule + "'");
  return {trim(rule.substr(0, arrow)), trim(rule.substr(arrow + 2))};
}

MorphicSpec parse_morphic(std::string_view body) {
  MorphicSpec m;
  std::map<std::string, int> letters;
  std::vector<std::pair<std::string, std::vector<std::string>>> rules;
  std::map<std::string, std::string> coding;
  std::string seed;
  int k = -1;
  auto intern = [&](const std::string& name) {
    auto [it, fresh] = letters.emplace(name, static_cast<int>(m.names.size()));
    if (fresh) m.names.push_back(name);
    return it->second;
  };
  for (const std::string& clause : split(body, ';')) {
    if (clause.empty()) continue;
    std::size_t sep = clause.find_first_of(":=");
    if (sep == std::string::npos) throw Error(Errc::malformed_spec, "bad clause '" + clause + "'");
    std::string key = trim(clause.substr(0, sep)), value = trim(clause.substr(sep + 1));
    if (key == "k") {
      k = to_int(value);
    } else if (key == "mu") {
      for (const std::string& r : split(value, ',')) {
        auto [from, to] = split_rule(r);
        rules.push_back({from, symbols(to)});
        intern(from);
      }
    } else if (key == "coding") {
      for (const std::string& r : split(value, ',')) {
        auto [from, to] = split_rule(r);
        coding[from] = to;
      }
    } else if (key == "seed") {
      seed = value;
    } else {
      throw Error(Errc::malformed_spec, "unknown morphic clause '" + key + "'");
    }
  }
  if (rules.empty()) throw Error(Errc::malformed_spec, "morphic spec needs 'mu'");
  m.images.resize(m.names.size());
  for (auto& [from, to] : rules) {
    Word img;
    for (const std::string& s : to) {
      if (!letters.count(s)) throw Error(Errc::malformed_spec, "letter '" + s + "' has no image");
      img.push_back(letters.at(s));
    }
    m.images[letters.at(from)] = img;
  }
  m.k = k < 0 ? static_cast<int>(m.images[0].size()) : k;
  m.coding.resize(m.names.size());
  for (std::size_t i = 0; i < m.names.size(); ++i) {
    auto it = coding.find(m.names[i]);
    m.coding[i] = to_int(it != coding.end() ? it->second : m.names[i]);
  }
  for (const auto& [name, _] : coding)
    if (!letters.count(name)) throw Error(Errc::malformed_spec, "coding for unknown letter '" + name + "'");
  if (seed.empty()) seed = m.names[0];
  if (!letters.count(seed)) throw Error(Errc::malformed_spec, "unknown seed '" + seed + "'");
  m.seed = letters.at(seed);
  m.validate();
  return m;
}

}  // namespace

std::string to_text(const MorphicSpec& m) {
  auto name = [&](int a) { return m.names.empty() ? "q" + std::to_string(a) : m.names[a]; };
  std::string out = "morphic: k=" + std::to_string(m.k) + "; mu: ";
  for (std::size_t a = 0; a < m.images.size(); ++a) {
    if (a) out += ", ";
    out += name(static_cast<int>(a)) + "->";
    for (std::size_t j = 0; j < m.images[a].size(); ++j) out += (j ? " " : "") + name(m.images[a][j]);
  }
  out += "; coding: ";
  for (std::size_t a = 0; a < m.coding.size(); ++a)
    out += (a ? ", " : "") + name(static_cast<int>(a)) + "->" + std::to_string(m.coding[a]);
  return out + "; seed: " + name(m.seed);
}

UPWord parse_up(std::string_view text) {
  std::string s = trim(text);
  if (s.rfind("up:", 0) == 0) s = trim(s.substr(3));
  auto open = s.find('('), close = s.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw Error(Errc::malformed_spec, "ultimately periodic word needs '(period)'");
  if (!trim(s.substr(close + 1)).empty()) throw Error(Errc::malformed_spec, "text after the period");
  UPWord w{digits_of(s.substr(0, open)), digits_of(s.substr(open + 1, close - open - 1))};
  if (w.period.empty()) throw Error(Errc::malformed_spec, "empty period");
  return up_canonicalize(w);
}

AutomatonSpec parse_automaton_table(std::string_view text) {
  AutomatonSpec a;
  a.base = 0;
  std::map<int, std::pair<int, std::vector<int>>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "base") {
      ls >> a.base;
    } else if (key == "initial") {
      ls >> a.initial;
    } else if (key == "state") {
      int q, out;
      std::string kw;
      if (!(ls >> q >> kw >> out) || kw != "output") throw Error(Errc::malformed_spec, "expected 'state q output o next ...'");
      if (!(ls >> kw) || kw != "next") throw Error(Errc::malformed_spec, "expected 'next' in state line");
      std::vector<int> targets;
      for (int t; ls >> t;) targets.push_back(t);
      rows[q] = {out, targets};
    } else {
      throw Error(Errc::malformed_spec, "unknown automaton line '" + key + "'");
    }
  }
  for (int q = 0; q < static_cast<int>(rows.size()); ++q) {
    if (!rows.count(q)) throw Error(Errc::malformed_spec, "states must be numbered 0..n-1");
    a.output.push_back(rows[q].first);
    a.next.push_back(rows[q].second);
  }
  a.validate();
  return a;
}

WordSpec parse_word_spec(std::string_view text) {
  std::vector<std::string> parts = split(std::string(text), '|');
  if (parts.empty()) throw Error(Errc::malformed_spec, "empty word spec");
  std::string s = trim(parts[0]);
  WordSpec spec = WordSpec::up(UPWord{{}, {0}});
  if (s == "thue-morse") {
    spec = thue_morse(0, 1);
  } else if (s.rfind("morphic:", 0) == 0) {
    spec = WordSpec::morphic(parse_morphic(s.substr(8)));
  } else if (s.rfind("automaton:", 0) == 0) {
    std::string path = trim(s.substr(10));
    std::ifstream in(path);
    if (!in) throw Error(Errc::malformed_spec, "cannot read automaton file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    spec = WordSpec::automaton(parse_automaton_table(buf.str()));
  } else if (s.rfind("up:", 0) == 0 || s.find('(') != std::string::npos) {
    spec = WordSpec::up(parse_up(s));
  } else {
    throw Error(Errc::malformed_spec, "unrecognized word spec '" + s + "'");
  }
  for (std::size_t i = 1; i < parts.size(); ++i) {
    std::string mod = trim(parts[i]);
    if (mod.rfind("blocks:", 0) == 0) {
      std::map<int, Word> by_letter;
      for (const std::string& r : split(mod.substr(7), ',')) {
        auto [from, to] = split_rule(r);
        by_letter[to_int(from)] = digits_of(to);
      }
      std::vector<Word> blocks;
      for (int a = 0; a < static_cast<int>(by_letter.size()); ++a) {
        if (!by_letter.count(a)) throw Error(Errc::malformed_spec, "blocks must be given for letters 0..m-1");
        blocks.push_back(by_letter[a]);
      }
      spec = substitute_blocks(spec, blocks);
    } else if (mod.rfind("shift:", 0) == 0) {
      int n = to_int(trim(mod.substr(6)));
      if (n < 0) throw Error(Errc::malformed_spec, "negative shift");
      spec = shift(spec, static_cast<std::size_t>(n));
    } else {
      throw Error(Errc::malformed_spec, "expected 'blocks:' or 'shift:' after '|', got '" + mod + "'");
    }
  }
  return spec;
}

}  // namespace cantor
