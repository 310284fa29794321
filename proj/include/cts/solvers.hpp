#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cts/caps.hpp"
#include "cts/dag.hpp"
#include "cts/dfa.hpp"
#include "cts/group.hpp"
#include "cts/language.hpp"
#include "cts/semiautomaton.hpp"

namespace cts {

// Outcome of a decision procedure. A positive result carries a topological
// sort (internal vertex indices) that has been checked against the language.
struct SolveResult {
  bool decision = false;
  std::optional<std::vector<int>> witness;
  std::string solver_tag;
  // False when a negative answer may be an artifact of a bounded search.
  bool complete = true;

  // Checks that order is a topological sort of g spelling a word of lang;
  // throws std::logic_error otherwise.
  static SolveResult yes(const LabeledDag& g, const Dfa& lang, std::vector<int> order, std::string tag);
  static SolveResult no(std::string tag, bool complete = true);
};

// Exhaustive search over (down-set, automaton state). General DAGs are
// limited to caps.brute_vertices vertices; string instances are searched by
// per-string positions. Labels may be words.
SolveResult solve_brute(const LabeledDag& g, const Dfa& lang, const Caps& caps = {});
SolveResult solve_brute(const ShuffleInstance& inst, const Dfa& lang, const Caps& caps = {});
// Some topological sort maps every pair's initial state into its finals.
SolveResult solve_brute_multi(const LabeledDag& g, const Semiautomaton& sa, const std::vector<StatePair>& pairs,
                              const Caps& caps = {});
// Search over (position in every chain, automaton state).
SolveResult solve_bounded_width(const LabeledDag& g, const Dfa& lang, const ChainPartition& cp, const Caps& caps = {});

// Polynomial procedure for a single monomial.
SolveResult solve_monomial(const LabeledDag& g, const Monomial& m);

struct UnionPart {
  std::string name;
  std::function<SolveResult(const LabeledDag&)> solve;
};
// First positive part wins.
SolveResult solve_union(const LabeledDag& g, const std::vector<UnionPart>& parts);

// Fixed-language procedures over the alphabet {a, b}.
SolveResult solve_ab_or_aa(const LabeledDag& g);                        // (ab)* + A*aaA*
SolveResult solve_kprime_or_power(const LabeledDag& g, const Dfa& kprime, std::size_t i,
                                  const Caps& caps = {});                 // K' + A*(a^i + b^i)A*
SolveResult solve_aab(const ShuffleInstance& inst, const Caps& caps = {});   // (aa + b)*
SolveResult solve_apbp(const ShuffleInstance& inst, const Caps& caps = {});  // (a+b+a+b+)*
SolveResult solve_ab_star_btail(const LabeledDag& g);                    // (ab)*(ε + bA*)

// Group languages on string instances. insertions = 0 selects 2|H|. The
// answer is exact when positive; a negative answer is marked incomplete when
// the insertion bound could be too small.
SolveResult solve_group_csh(const ShuffleInstance& inst, const GroupPresentation& gp, std::size_t insertions = 0,
                            const Caps& caps = {});
SolveResult solve_district_monomial(const ShuffleInstance& inst, const DistrictMonomial& dm,
                                    std::size_t insertions = 0, const Caps& caps = {});

// Routed solving.
using Instance = std::variant<LabeledDag, ShuffleInstance>;

struct DispatchOptions {
  Caps caps;
  std::string solver;         // force a solver tag; empty = automatic
  std::size_t insertions = 0;  // group and district solvers
};

SolveResult dispatch(const Instance& inst, const LanguageSpec& spec, const DispatchOptions& opts = {});
LabeledDag as_dag(const Instance& inst);
// Solver tags accepted by DispatchOptions::solver.
std::vector<std::string> solver_tags();

}  // namespace cts
