#include "cts/language.hpp"

#include <map>

#include "cts/errors.hpp"
#include "cts/regex.hpp"
#include "nfa.hpp"

namespace cts {

Monomial::Monomial(Alphabet a, std::vector<std::string> g, std::string p)
    : alphabet(std::move(a)), gaps(std::move(g)), pivots(std::move(p)) {
  if (gaps.size() != pivots.size() + 1) throw PreconditionError("monomial needs one more gap than pivots");
  for (const auto& gap : gaps) {
    Alphabet check(gap);
    if (!alphabet.contains_all(gap)) throw PreconditionError("monomial gap '" + gap + "' outside the alphabet");
  }
  if (!alphabet.contains_all(pivots)) throw PreconditionError("monomial pivot outside the alphabet");
}

std::string Monomial::to_regex() const {
  std::string out;
  auto gap = [&](const std::string& g) {
    if (g.empty()) return std::string("\xCE\xB5");
    std::string s = "(";
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i) s += '+';
      s += g[i];
    }
    return s + ")*";
  };
  for (std::size_t i = 0; i < pivots.size(); ++i) out += gap(gaps[i]) + pivots[i];
  return out + gap(gaps.back());
}

Dfa Monomial::to_dfa() const { return compile_regex(to_regex(), alphabet); }

DistrictMonomial::DistrictMonomial(std::vector<GroupPresentation> segs, std::string p)
    : segments(std::move(segs)), pivots(std::move(p)) {
  if (segments.size() != pivots.size() + 1) throw PreconditionError("district monomial needs one more segment than pivots");
  Alphabet all(std::string{});
  for (const auto& s : segments) all = all.merged(s.alphabet());
  std::string extra;
  for (char c : pivots)
    if (!all.contains(c) && extra.find(c) == std::string::npos) extra += c;
  alphabet = all.merged(Alphabet(extra));
}

Dfa DistrictMonomial::to_dfa() const {
  // Segment j occupies states [base_j, base_j + |H_j|); pivot a_{j+1} moves
  // from any accepting element of segment j to the identity of segment j+1.
  detail::Nfa nfa;
  std::vector<int> base;
  for (const auto& seg : segments) {
    base.push_back(static_cast<int>(nfa.states.size()));
    for (std::size_t h = 0; h < seg.order(); ++h) nfa.add_state();
  }
  for (std::size_t j = 0; j < segments.size(); ++j) {
    const auto& seg = segments[j];
    for (std::size_t h = 0; h < seg.order(); ++h)
      for (std::size_t a = 0; a < seg.alphabet().size(); ++a)
        nfa.add_move(base[j] + static_cast<int>(h), alphabet.index(seg.alphabet().symbol(a)),
                     base[j] + seg.multiply(static_cast<int>(h), seg.mu(a)));
    for (std::size_t h = 0; h < seg.order(); ++h) {
      if (!seg.is_accepting(static_cast<int>(h))) continue;
      if (j + 1 < segments.size())
        nfa.add_move(base[j] + static_cast<int>(h), alphabet.index(pivots[j]), base[j + 1] + segments[j + 1].identity());
      else
        nfa.states[base[j] + h].accepting = true;
    }
  }
  nfa.start = base[0] + segments[0].identity();
  return nfa.determinize(alphabet);
}

Dfa MultiLanguage::to_dfa() const {
  if (pairs.empty()) throw PreconditionError("multi-automaton question without state pairs");
  const auto& A = automaton.alphabet();
  std::vector<std::vector<bool>> finals;
  for (const auto& p : pairs) {
    if (p.initial < 0 || static_cast<std::size_t>(p.initial) >= automaton.size())
      throw PreconditionError("initial state out of range");
    std::vector<bool> f(automaton.size(), false);
    for (int q : p.finals) {
      if (q < 0 || static_cast<std::size_t>(q) >= automaton.size()) throw PreconditionError("final state out of range");
      f[q] = true;
    }
    finals.push_back(std::move(f));
  }
  // Reachable tuples of current states.
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> tuples;
  std::vector<int> start;
  for (const auto& p : pairs) start.push_back(p.initial);
  index.emplace(start, 0);
  tuples.push_back(start);
  std::vector<int> delta;
  for (std::size_t h = 0; h < tuples.size(); ++h)
    for (std::size_t a = 0; a < A.size(); ++a) {
      std::vector<int> t = tuples[h];
      for (auto& q : t) q = automaton.next(q, a);
      auto [it, fresh] = index.emplace(t, static_cast<int>(tuples.size()));
      if (fresh) tuples.push_back(std::move(t));
      delta.push_back(it->second);
    }
  std::vector<bool> acc(tuples.size(), true);
  for (std::size_t h = 0; h < tuples.size(); ++h)
    for (std::size_t i = 0; i < pairs.size(); ++i) acc[h] = acc[h] && finals[i][tuples[h][i]];
  return minimize(Dfa(A, tuples.size(), std::move(delta), 0, std::move(acc)));
}

std::string LanguageSpec::kind() const {
  switch (value_.index()) {
    case 0: return "regex";
    case 1: return "monomial";
    case 2: return "union";
    case 3: return "group";
    case 4: return "district";
    default: return "semiautomaton";
  }
}

Alphabet LanguageSpec::own_alphabet() const {
  return std::visit(
      [](const auto& v) -> Alphabet {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RegexLanguage>) {
          return regex_symbols(v.text);
        } else if constexpr (std::is_same_v<T, UnionLanguage>) {
          Alphabet a(std::string{});
          for (const auto& p : v.parts) a = a.merged(p.own_alphabet());
          return a;
        } else if constexpr (std::is_same_v<T, MultiLanguage>) {
          return v.automaton.alphabet();
        } else if constexpr (std::is_same_v<T, GroupPresentation>) {
          return v.alphabet();
        } else {
          return v.alphabet;
        }
      },
      value_);
}

Dfa LanguageSpec::to_dfa(const Alphabet& alphabet) const {
  return std::visit(
      [&](const auto& v) -> Dfa {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RegexLanguage>) {
          return compile_regex(v.text, alphabet);
        } else if constexpr (std::is_same_v<T, UnionLanguage>) {
          if (v.parts.empty()) return compile_regex("\xE2\x88\x85", alphabet);
          Dfa d = v.parts[0].to_dfa(alphabet);
          for (std::size_t i = 1; i < v.parts.size(); ++i) d = dfa_union(d, v.parts[i].to_dfa(alphabet));
          return d;
        } else if constexpr (std::is_same_v<T, Monomial>) {
          return extend_alphabet(v.to_dfa(), alphabet);
        } else if constexpr (std::is_same_v<T, MultiLanguage>) {
          return extend_alphabet(v.to_dfa(), alphabet);
        } else {
          return extend_alphabet(v.to_dfa(), alphabet);
        }
      },
      value_);
}

}  // namespace cts
