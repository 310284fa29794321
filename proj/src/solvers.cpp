#include "cts/solvers.hpp"

#include <functional>

#include "cts/errors.hpp"
#include "search.hpp"

namespace cts {

namespace {

Dfa fit(const Dfa& dfa, const Alphabet& alphabet) {
  if (alphabet.symbols().find_first_not_of(dfa.alphabet().symbols()) == std::string::npos) return dfa;
  return extend_alphabet(dfa, dfa.alphabet().merged(alphabet));
}

}  // namespace

SolveResult SolveResult::yes(const LabeledDag& g, const Dfa& lang, std::vector<int> order, std::string tag) {
  if (!is_topological_sort(g, order)) throw std::logic_error(tag + ": witness is not a topological sort");
  if (!fit(lang, g.alphabet()).accepts(spell(g, order)))
    throw std::logic_error(tag + ": witness spells a word outside the language");
  SolveResult r;
  r.decision = true;
  r.witness = std::move(order);
  r.solver_tag = std::move(tag);
  return r;
}

SolveResult SolveResult::no(std::string tag, bool complete) {
  SolveResult r;
  r.solver_tag = std::move(tag);
  r.complete = complete;
  return r;
}

SolveResult solve_brute(const LabeledDag& g, const Dfa& lang, const Caps& caps) {
  Dfa d = fit(lang, g.alphabet());
  auto order = detail::search_downsets(g, d, caps);
  return order ? SolveResult::yes(g, d, std::move(*order), "brute") : SolveResult::no("brute");
}

SolveResult solve_brute(const ShuffleInstance& inst, const Dfa& lang, const Caps& caps) {
  Dfa d = fit(lang, inst.alphabet());
  LabeledDag g = inst.to_dag();
  auto order = detail::search_chains(g, detail::string_chains(inst), d, caps);
  return order ? SolveResult::yes(g, d, std::move(*order), "brute") : SolveResult::no("brute");
}

SolveResult solve_brute_multi(const LabeledDag& g, const Semiautomaton& sa, const std::vector<StatePair>& pairs,
                              const Caps& caps) {
  if (sa.size() > caps.monoid_states * 4) throw CapExceeded("monoid_states", caps.monoid_states * 4);
  Dfa d = fit(MultiLanguage{sa, pairs}.to_dfa(), g.alphabet());
  std::optional<std::vector<int>> order;
  if (g.size() <= caps.brute_vertices && g.size() <= 64) {
    order = detail::search_downsets(g, d, caps);
  } else {
    order = detail::search_chains(g, chain_partition(g), d, caps);
  }
  return order ? SolveResult::yes(g, d, std::move(*order), "brute-multi") : SolveResult::no("brute-multi");
}

SolveResult solve_bounded_width(const LabeledDag& g, const Dfa& lang, const ChainPartition& cp, const Caps& caps) {
  if (cp.chain_of.size() != g.size()) throw PreconditionError("chain partition does not match the DAG");
  Dfa d = fit(lang, g.alphabet());
  auto order = detail::search_chains(g, cp, d, caps);
  return order ? SolveResult::yes(g, d, std::move(*order), "bounded-width") : SolveResult::no("bounded-width");
}

SolveResult solve_monomial(const LabeledDag& g, const Monomial& m) {
  if (!g.single_letter()) throw PreconditionError("solve_monomial needs single-letter labels");
  const std::size_t n = g.size(), np = m.pivots.size();
  auto reach = reachability(g);
  // in_gap[i][v]: label of v belongs to A_{i+1}.
  std::vector<std::vector<bool>> in_gap(np + 1, std::vector<bool>(n));
  for (std::size_t i = 0; i <= np; ++i)
    for (std::size_t v = 0; v < n; ++v) in_gap[i][v] = m.gaps[i].find(g.label(static_cast<int>(v))[0]) != std::string::npos;

  using Set = boost::dynamic_bitset<>;
  std::vector<int> piv(np, -1);
  std::vector<bool> is_pivot(n, false);

  // Decides the prefix problem on the down-set s with pivots piv[0..j-1].
  std::function<std::optional<std::vector<int>>(const Set&, std::size_t)> check =
      [&](const Set& s, std::size_t j) -> std::optional<std::vector<int>> {
    if (j == 0) {
      for (auto v = s.find_first(); v != Set::npos; v = s.find_next(v))
        if (is_pivot[v] || !in_gap[0][v]) return std::nullopt;
      return sort_subset(g, s);
    }
    const int v = piv[j - 1];
    if (!s[v]) return std::nullopt;
    Set below(n);
    for (std::size_t i = 0; i + 1 < j; ++i) {
      below.set(piv[i]);
      below |= reach.anc[piv[i]];
    }
    below |= reach.anc[v];
    const Set& after = reach.desc[v];
    for (auto w = s.find_first(); w != Set::npos; w = s.find_next(w)) {
      if (static_cast<int>(w) == v) continue;
      if (after[w]) {
        if (is_pivot[w] || !in_gap[j][w]) return std::nullopt;
      } else if (!reach.anc[v][w] && (is_pivot[w] || !in_gap[j][w])) {
        below.set(w);
        below |= reach.anc[w];
      }
    }
    below &= s;
    auto prefix = check(below, j - 1);
    if (!prefix) return std::nullopt;
    Set rest = s - below;
    rest.reset(v);
    prefix->push_back(v);
    for (int w : sort_subset(g, rest)) prefix->push_back(w);
    return prefix;
  };

  std::optional<std::vector<int>> found;
  Set all(n);
  all.set();
  // Guess the pivot vertices left to right; each must not lie below an earlier one.
  std::function<void(std::size_t)> choose = [&](std::size_t i) {
    if (found) return;
    if (i == np) {
      found = check(all, np);
      return;
    }
    for (std::size_t v = 0; v < n && !found; ++v) {
      if (is_pivot[v] || g.label(static_cast<int>(v))[0] != m.pivots[i]) continue;
      bool ok = true;
      for (std::size_t t = 0; t < i && ok; ++t) ok = !reach.less(static_cast<int>(v), piv[t]);
      if (!ok) continue;
      piv[i] = static_cast<int>(v);
      is_pivot[v] = true;
      choose(i + 1);
      is_pivot[v] = false;
    }
  };
  choose(0);
  if (!found) return SolveResult::no("monomial");
  return SolveResult::yes(g, m.to_dfa(), std::move(*found), "monomial");
}

SolveResult solve_union(const LabeledDag& g, const std::vector<UnionPart>& parts) {
  bool complete = true;
  std::string tags;
  for (const auto& part : parts) {
    SolveResult r = part.solve(g);
    if (r.decision) {
      r.solver_tag = "union:" + r.solver_tag;
      return r;
    }
    complete = complete && r.complete;
  }
  return SolveResult::no("union", complete);
}

}  // namespace cts
