#include "cantor/analysis.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "cantor/error.hpp"

namespace cantor {

namespace {

struct Incoming {
  std::size_t source;
  int letter;
  long digit;
};

std::vector<std::vector<Incoming>> incoming_edges(const Transducer& t) {
  std::vector<std::vector<Incoming>> in(t.size());
  for (std::size_t q = 0; q < t.size(); ++q)
    for (std::size_t a = 0; a < t.alphabet.size(); ++a)
      in[t.edges[q][a].target].push_back({q, static_cast<int>(a), t.edges[q][a].digit});
  return in;
}

struct Derivation {
  std::size_t next1, next2;  // pair reached after one step
  int letter1, letter2;
  long digit;
  std::size_t depth;  // steps needed to reach (s, s)
};

// Backward closure anchored at s, breadth first. parent[(t1,t2)] records the
// step used to derive the pair; seeds step straight into (s, s).
std::map<std::pair<std::size_t, std::size_t>, Derivation> closure(const std::vector<std::vector<Incoming>>& in,
                                                                 std::size_t s) {
  std::map<std::pair<std::size_t, std::size_t>, Derivation> parent;
  std::deque<std::pair<std::size_t, std::size_t>> queue;
  for (const Incoming& e1 : in[s])
    for (const Incoming& e2 : in[s])
      if (e1.letter != e2.letter && e1.digit == e2.digit) {
        auto key = std::make_pair(e1.source, e2.source);
        if (parent.emplace(key, Derivation{s, s, e1.letter, e2.letter, e1.digit, 1}).second) queue.push_back(key);
      }
  while (!queue.empty()) {
    auto [q1, q2] = queue.front();
    queue.pop_front();
    const std::size_t depth = parent.at({q1, q2}).depth;
    for (const Incoming& e1 : in[q1])
      for (const Incoming& e2 : in[q2])
        if (e1.digit == e2.digit) {
          auto key = std::make_pair(e1.source, e2.source);
          if (parent.emplace(key, Derivation{q1, q2, e1.letter, e2.letter, e1.digit, depth + 1}).second)
            queue.push_back(key);
        }
  }
  return parent;
}

}  // namespace

PairSet pair_set(const Transducer& t, std::size_t anchor) {
  auto in = incoming_edges(t);
  PairSet out{anchor, {}};
  for (const auto& [key, _] : closure(in, anchor)) out.pairs.insert(key);
  return out;
}

TwoWalkResult two_walk(const Transducer& t) {
  auto in = incoming_edges(t);
  TwoWalkResult best;
  const std::size_t letters = t.alphabet.size();
  for (std::size_t s = 0; s < t.size(); ++s) {
    auto parent = closure(in, s);
    if (!parent.count({s, s})) continue;
    // Walk forward along shortest derivations, taking the largest digit first
    // and then the smallest letter pair.
    TwoWalkWitness w{s, {}, {}, {}};
    std::pair<std::size_t, std::size_t> cur{s, s};
    for (std::size_t left = parent.at({s, s}).depth; left > 0; --left) {
      std::optional<std::tuple<long, int, int>> pick;
      for (std::size_t a1 = 0; a1 < letters; ++a1)
        for (std::size_t a2 = 0; a2 < letters; ++a2) {
          const auto& e1 = t.edges[cur.first][a1];
          const auto& e2 = t.edges[cur.second][a2];
          if (e1.digit != e2.digit) continue;
          std::pair<std::size_t, std::size_t> next{e1.target, e2.target};
          bool ok = left == 1 ? (next == std::make_pair(s, s) && a1 != a2)
                              : (parent.count(next) && parent.at(next).depth == left - 1);
          if (!ok) continue;
          std::tuple<long, int, int> cand{e1.digit, -static_cast<int>(a1), -static_cast<int>(a2)};
          if (!pick || cand > *pick) pick = cand;
        }
      auto [digit, na1, na2] = *pick;
      std::size_t a1 = static_cast<std::size_t>(-na1), a2 = static_cast<std::size_t>(-na2);
      w.u.push_back(static_cast<int>(a1));
      w.v.push_back(static_cast<int>(a2));
      w.w.push_back(static_cast<int>(digit));
      cur = {t.edges[cur.first][a1].target, t.edges[cur.second][a2].target};
    }
    bool better = !best.holds || w.w.size() < best.witness->w.size() ||
                  (w.w.size() == best.witness->w.size() && w.w > best.witness->w);
    if (better) {
      best.holds = true;
      best.witness = w;
    }
  }
  return best;
}

bool replay_witness(const Transducer& t, const TwoWalkWitness& w) {
  if (w.u == w.v || w.u.size() != w.w.size() || w.v.size() != w.w.size() || w.u.empty()) return false;
  auto [out_u, end_u] = t.read(w.state, w.u);
  auto [out_v, end_v] = t.read(w.state, w.v);
  return end_u == w.state && end_v == w.state && out_u == w.w && out_v == w.w;
}

std::vector<std::vector<std::size_t>> scc(const Transducer& t) {
  // Iterative Tarjan.
  const std::size_t n = t.size(), none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, none), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t counter = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != none) continue;
    std::vector<std::pair<std::size_t, std::size_t>> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      if (next < t.edges[v].size()) {
        std::size_t w = t.edges[v][next++].target;
        if (index[w] == none) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        components.push_back(comp);
      }
      std::size_t finished = v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[finished]);
    }
  }
  std::sort(components.begin(), components.end());
  return components;
}

bool is_strongly_connected(const Transducer& t) { return scc(t).size() == 1; }

Restriction restrict(const Transducer& t, const std::vector<Word>& blocks) {
  if (blocks.empty()) throw Error(Errc::malformed_spec, "no blocks given");
  std::set<Word> whole, proper{Word{}};
  for (const Word& b : blocks) {
    if (b.empty()) throw Error(Errc::malformed_spec, "empty block");
    for (int a : b)
      if (a < 0 || static_cast<std::size_t>(a) >= t.alphabet.size())
        throw Error(Errc::malformed_spec, "block letter outside the alphabet");
    whole.insert(b);
    for (std::size_t i = 1; i < b.size(); ++i) proper.insert(Word(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(i)));
  }
  std::map<Word, std::size_t> node_id;
  for (const Word& p : proper) node_id.emplace(p, node_id.size());
  std::vector<Word> node_word(node_id.size());
  for (const auto& [w, id] : node_id) node_word[id] = w;

  Restriction out;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
  auto visit = [&](std::size_t q, std::size_t node) {
    auto [it, fresh] = seen.emplace(std::make_pair(q, node), out.product.size());
    if (fresh) out.product.push_back({q, node});
    return it->second;
  };
  const std::size_t root = node_id.at(Word{});
  visit(t.initial, root);
  for (std::size_t i = 0; i < out.product.size(); ++i) {
    auto [q, node] = out.product[i];
    for (std::size_t a = 0; a < t.alphabet.size(); ++a) {
      Word longer = node_word[node];
      longer.push_back(static_cast<int>(a));
      const auto& e = t.edges[q][a];
      if (whole.count(longer)) out.edges.push_back({i, static_cast<int>(a), e.digit, visit(e.target, root)});
      if (proper.count(longer)) out.edges.push_back({i, static_cast<int>(a), e.digit, visit(e.target, node_id.at(longer))});
    }
  }
  std::set<std::size_t> states;
  for (auto [q, _] : out.product) states.insert(q);
  out.visited.assign(states.begin(), states.end());
  return out;
}

ComplexityRatio complexity_ratio(const Transducer& t, const std::vector<Word>& blocks) {
  Restriction r = restrict(t, blocks);
  ComplexityRatio c{r.visited.size(), t.size(), Rational(static_cast<long>(r.visited.size()), static_cast<long>(t.size()))};
  c.ratio.canonicalize();
  return c;
}

std::optional<std::size_t> split_tail(const Word& digits, const Word& tail) {
  if (tail.empty()) throw Error(Errc::malformed_spec, "empty tail");
  const std::size_t h = digits.size(), p = tail.size();
  for (std::size_t m = 0; m + 2 * p <= h; ++m) {
    bool ok = true;
    for (std::size_t j = m; j < h && ok; ++j) ok = digits[j] == tail[(j - m) % p];
    if (ok) return m;
  }
  return std::nullopt;
}

PrefixTable prefix_table(const BaseAlphabet& e, const FieldElement& r, const WordSpec& base, std::size_t max_shift,
                         const Word& tail, std::size_t horizon, Mode mode, std::size_t state_cap) {
  if (tail.empty()) throw Error(Errc::malformed_spec, "empty tail");
  PrefixTable table;
  for (std::size_t n = 0; n <= max_shift; ++n) {
    Word digits = run(e, r, shift(base, n), horizon, mode, state_cap).digits;
    if (auto m = split_tail(digits, tail))
      table.groups[Word(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(*m))].push_back(n);
    else
      table.undetected.push_back(n);
  }
  return table;
}

bool admissible_up(const UPWord& candidate, const UPWord& base, const BaseAlphabet& e, std::size_t state_cap) {
  const UPWord a = up_canonicalize(candidate), b = up_canonicalize(base);
  const std::size_t t = b.preperiod.size(), p = b.period.size();
  const std::size_t bound = t + std::lcm(p, a.period.size()) + std::max(a.preperiod.size(), p);
  const FieldElement one = e.field.one();
  std::map<UPWord, UPWord> expansions;
  for (std::size_t n = 0; n <= bound; ++n) {
    UPWord shifted_base = up_shift(b, n);
    auto it = expansions.find(shifted_base);
    if (it == expansions.end())
      it = expansions.emplace(shifted_base, run_up(e, one, shifted_base, Mode::quasi, state_cap)).first;
    if (up_lex_compare(up_shift(a, n), it->second) != LexOrder::less) return false;
  }
  return true;
}

WordSpec transduce_uniform_morphic(const BaseAlphabet& e, const FieldElement& r, const WordSpec& base, Mode mode,
                                   std::size_t state_cap) {
  MorphicSpec mu;
  if (base.kind() == WordSpec::Kind::morphic)
    mu = base.as_morphic();
  else if (base.kind() == WordSpec::Kind::automaton)
    mu = to_morphic(base.as_automaton());
  else
    throw Error(Errc::non_uniform_input, "input must be the fixed point of a uniform morphism");
  if (base.offset() != 0) throw Error(Errc::non_uniform_input, "shifted morphic inputs are not fixed points");

  const Transducer t = build(e, r, mode, state_cap);
  const std::size_t nq = t.size(), letters = mu.images.size();
  for (int c : mu.coding)
    if (c < 0 || static_cast<std::size_t>(c) >= e.size()) throw Error(Errc::malformed_spec, "coding leaves the base alphabet");

  // level[m][a] = state map of reading the coded image mu^m(a).
  using Map = std::vector<std::size_t>;
  std::vector<std::vector<Map>> level;
  std::map<std::vector<Map>, std::size_t> first_seen;
  std::vector<Map> cur(letters, Map(nq));
  for (std::size_t a = 0; a < letters; ++a)
    for (std::size_t q = 0; q < nq; ++q) cur[a][q] = t.edges[q][static_cast<std::size_t>(mu.coding[a])].target;
  std::size_t loop_start = 0;
  while (true) {
    auto [it, fresh] = first_seen.emplace(cur, level.size());
    if (!fresh) {
      loop_start = it->second;
      break;
    }
    level.push_back(cur);
    if (level.size() > 4096) throw Error(Errc::state_cap_exceeded, "state maps of iterated images do not cycle");
    std::vector<Map> next(letters, Map(nq));
    for (std::size_t a = 0; a < letters; ++a)
      for (std::size_t q = 0; q < nq; ++q) {
        std::size_t s = q;
        for (int b : mu.images[a]) s = cur[static_cast<std::size_t>(b)][s];
        next[a][q] = s;
      }
    cur = std::move(next);
  }
  const std::size_t depth = level.size();
  auto up_one = [&](std::size_t m) { return m + 1 < depth ? m + 1 : loop_start; };

  // New letters: (source letter, state at each level).
  using Letter = std::pair<int, std::vector<std::size_t>>;
  std::map<Letter, int> ids;
  std::vector<Letter> alphabet;
  auto intern = [&](const Letter& l) {
    auto [it, fresh] = ids.emplace(l, static_cast<int>(alphabet.size()));
    if (fresh) {
      if (alphabet.size() >= state_cap) throw Error(Errc::state_cap_exceeded, "annotated alphabet too large");
      alphabet.push_back(l);
    }
    return it->second;
  };
  MorphicSpec out;
  out.k = mu.k;
  out.seed = intern({mu.seed, std::vector<std::size_t>(depth, t.initial)});
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    const Letter l = alphabet[i];
    Word image;
    for (int j = 0; j < mu.k; ++j) {
      std::vector<std::size_t> states(depth);
      for (std::size_t m = 0; m < depth; ++m) {
        std::size_t s = l.second[up_one(m)];
        for (int jj = 0; jj < j; ++jj) s = level[m][static_cast<std::size_t>(mu.images[l.first][jj])][s];
        states[m] = s;
      }
      image.push_back(intern({mu.images[l.first][j], states}));
    }
    out.images.push_back(image);
    out.coding.push_back(static_cast<int>(t.edges[l.second[0]][static_cast<std::size_t>(mu.coding[l.first])].digit));
  }
  return WordSpec::morphic(out);
}

std::optional<std::size_t> find_period(const Word& digits, std::size_t max_period, std::size_t window) {
  window = std::min(window, digits.size());
  const std::size_t start = digits.size() - window;
  for (std::size_t p = 1; p <= max_period && p < window; ++p) {
    bool ok = true;
    for (std::size_t i = start; i + p < digits.size() && ok; ++i) ok = digits[i] == digits[i + p];
    if (ok) return p;
  }
  return std::nullopt;
}

}  // namespace cantor
