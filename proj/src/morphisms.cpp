#include "cantor/morphisms.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cantor/error.hpp"

namespace cantor {

void ConstantProductMorphism::validate() const {
  if (images.empty()) throw Error(Errc::malformed_spec, "morphism has no letters");
  if (names.size() != images.size()) throw Error(Errc::malformed_spec, "one name per image expected");
  if (delta < 2) throw Error(Errc::malformed_spec, "delta must be at least 2");
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].empty()) throw Error(Errc::malformed_spec, "empty image for '" + names[i] + "'");
    long prod = 1;
    for (int b : images[i]) {
      if (b < 2) throw Error(Errc::malformed_spec, "radices must be at least 2");
      prod *= b;
    }
    if (prod != delta)
      throw Error(Errc::malformed_spec, "image of '" + names[i] + "' has product " + std::to_string(prod) +
                                            ", expected " + std::to_string(delta));
  }
}

bool ConstantProductMorphism::uniform() const {
  return std::all_of(images.begin(), images.end(), [&](const Word& w) { return w.size() == images[0].size(); });
}

ConstantProductMorphism ConstantProductMorphism::parse(std::string_view text) {
  ConstantProductMorphism psi;
  std::string s(text);
  std::stringstream clauses(s);
  std::string clause;
  while (std::getline(clauses, clause, ';')) {
    auto colon = clause.find(':');
    if (clause.find_first_not_of(" \t") == std::string::npos) continue;
    if (colon == std::string::npos) throw Error(Errc::malformed_spec, "expected 'a: radices' in '" + clause + "'");
    std::istringstream name_in(clause.substr(0, colon)), radices(clause.substr(colon + 1));
    std::string name;
    name_in >> name;
    Word img;
    std::string tok;
    while (radices >> tok) {
      try {
        img.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw Error(Errc::malformed_spec, "bad radix '" + tok + "'");
      }
    }
    psi.names.push_back(name);
    psi.images.push_back(img);
  }
  if (psi.images.empty()) throw Error(Errc::malformed_spec, "empty morphism");
  long prod = 1;
  for (int b : psi.images[0]) prod *= b;
  psi.delta = prod;
  psi.validate();
  return psi;
}

Word digit_decompose(long c, const Word& block) {
  long prod = 1;
  for (int b : block) {
    if (b < 2) throw Error(Errc::digit_out_of_range, "radices must be at least 2");
    prod *= b;
  }
  if (c < 0 || c >= prod)
    throw Error(Errc::digit_out_of_range, std::to_string(c) + " is not below " + std::to_string(prod));
  Word out(block.size());
  for (std::size_t j = block.size(); j-- > 0;) {
    out[j] = static_cast<int>(c % block[j]);
    c /= block[j];
  }
  return out;
}

UPWord delta_expansion(const Rational& r, long delta) {
  if (delta < 2) throw Error(Errc::malformed_spec, "base must be at least 2");
  if (r < 0 || r >= 1) throw Error(Errc::point_out_of_range, "expansion point must lie in [0, 1)");
  const Integer q = r.get_den();
  Integer rem = r.get_num();
  std::map<Integer, std::size_t> seen;
  Word digits;
  while (!seen.count(rem)) {
    seen[rem] = digits.size();
    Integer v = rem * delta;
    digits.push_back(static_cast<int>(Integer(v / q).get_si()));
    rem = v % q;
  }
  std::size_t start = seen[rem];
  UPWord w{Word(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(start)),
           Word(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end())};
  return up_canonicalize(w);
}

Rational delta_value(const UPWord& digits, long delta) {
  Rational value = 0, weight = 1;
  for (int c : digits.preperiod) {
    weight /= delta;
    value += weight * c;
  }
  Rational cycle = 0, w = 1;
  for (int c : digits.period) {
    w /= delta;
    cycle += w * c;
  }
  value += weight * cycle / (1 - w);
  return value;
}

void validate_delta_expansion(const UPWord& digits, long delta) {
  for (const Word* part : {&digits.preperiod, &digits.period})
    for (int c : *part)
      if (c < 0 || c >= delta) throw Error(Errc::invalid_delta_expansion, "digit " + std::to_string(c) + " out of range");
  if (std::all_of(digits.period.begin(), digits.period.end(), [&](int c) { return c == delta - 1; }))
    throw Error(Errc::invalid_delta_expansion, "greedy expansions never end in (delta-1)^omega");
}

Word block_expand(const UPWord& d, const WordSpec& preimage, const ConstantProductMorphism& psi, std::size_t n) {
  psi.validate();
  validate_delta_expansion(d, psi.delta);
  Word out;
  for (std::size_t k = 0; out.size() < n; ++k) {
    int a = preimage.at(k);
    if (a < 0 || static_cast<std::size_t>(a) >= psi.images.size())
      throw Error(Errc::malformed_spec, "preimage letter " + std::to_string(a) + " has no image");
    Word block = digit_decompose(d.at(k), psi.images[a]);
    out.insert(out.end(), block.begin(), block.end());
  }
  out.resize(n);
  return out;
}

Word WordMachine::run(const Word& input) const {
  Word out;
  int q = initial;
  for (int a : input) {
    const Edge& e = edges.at(q).at(a);
    out.insert(out.end(), e.output.begin(), e.output.end());
    q = e.target;
  }
  return out;
}

WordMachine build_frying_pan(const UPWord& d, const ConstantProductMorphism& psi) {
  psi.validate();
  validate_delta_expansion(d, psi.delta);
  const int pre = static_cast<int>(d.preperiod.size()), per = static_cast<int>(d.period.size());
  WordMachine m;
  m.initial = 0;
  for (int i = 0; i < pre + per; ++i) {
    int next = i + 1 < pre + per ? i + 1 : pre;
    std::vector<WordMachine::Edge> row;
    for (const Word& block : psi.images) row.push_back({digit_decompose(d.at(i), block), next});
    m.edges.push_back(row);
  }
  return m;
}

Word LetterMachine::run(const std::vector<long>& input) const {
  Word out;
  int q = initial;
  for (long b : input) {
    auto it = std::find_if(edges.begin(), edges.end(), [&](const Edge& e) { return e.from == q && e.input == b; });
    if (it == edges.end()) throw Error(Errc::malformed_spec, "no transition on " + std::to_string(b));
    out.push_back(it->digit);
    q = it->to;
  }
  return out;
}

LetterMachine letter_to_letter(const WordMachine& machine, const ConstantProductMorphism& psi, const UPWord& d) {
  if (!psi.uniform()) throw Error(Errc::non_uniform_morphism, "all images of psi must have one length");
  LetterMachine out;
  out.initial = machine.initial;
  out.states = machine.state_count();
  for (std::size_t i = 0; i < machine.state_count(); ++i) out.residue.push_back(delta_value(up_shift(d, i), psi.delta));
  for (std::size_t q = 0; q < machine.state_count(); ++q) {
    for (std::size_t a = 0; a < psi.images.size(); ++a) {
      const auto& e = machine.edges[q][a];
      const Word& radices = psi.images[a];
      Rational value = out.residue[q];
      int from = static_cast<int>(q);
      for (std::size_t j = 0; j < radices.size(); ++j) {
        value = value * radices[j] - e.output[j];
        int to;
        if (j + 1 == radices.size()) {
          to = e.target;
        } else {
          to = static_cast<int>(out.states++);
          out.residue.push_back(value);
        }
        out.edges.push_back({from, radices[j], e.output[j], to});
        from = to;
      }
    }
  }
  return out;
}

LetterMachine merge_equal_residues(const LetterMachine& m) {
  std::map<Rational, int> by_value;
  std::vector<int> rename(m.states);
  LetterMachine out;
  // Number the merged states in order of first discovery from the initial state.
  std::vector<int> order{m.initial};
  std::vector<bool> seen(m.states, false);
  seen[m.initial] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const auto& e : m.edges)
      if (e.from == order[i] && !seen[e.to]) {
        seen[e.to] = true;
        order.push_back(e.to);
      }
  for (int q : order) {
    auto [it, fresh] = by_value.emplace(m.residue[q], static_cast<int>(out.residue.size()));
    if (fresh) out.residue.push_back(m.residue[q]);
    rename[q] = it->second;
  }
  out.states = out.residue.size();
  out.initial = rename[m.initial];
  std::set<std::tuple<int, long, int, int>> edges;
  for (const auto& e : m.edges)
    if (seen[e.from]) edges.insert({rename[e.from], e.input, e.digit, rename[e.to]});
  for (const auto& [from, input, digit, to] : edges) out.edges.push_back({from, input, digit, to});
  return out;
}

}  // namespace cantor
