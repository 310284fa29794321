#pragma once

#include <optional>
#include <vector>

#include "cts/caps.hpp"
#include "cts/dag.hpp"
#include "cts/dfa.hpp"

namespace cts::detail {

// Depth-first search over (position in every chain, DFA state) with
// memoized failures. Returns a topological sort spelling an accepted word.
std::optional<std::vector<int>> search_chains(const LabeledDag& g, const ChainPartition& cp, const Dfa& dfa,
                                              const Caps& caps);
// Same over (down-set bitmask, DFA state); at most 64 vertices.
std::optional<std::vector<int>> search_downsets(const LabeledDag& g, const Dfa& dfa, const Caps& caps);

// Chains given by the strings of an instance (empty strings skipped).
ChainPartition string_chains(const ShuffleInstance& inst);

}  // namespace cts::detail
