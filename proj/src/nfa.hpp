#pragma once

#include <utility>
#include <vector>

#include "cts/dfa.hpp"

namespace cts::detail {

// Epsilon-NFA used internally by the regex and district constructions.
struct Nfa {
  struct State {
    std::vector<int> eps;
    std::vector<std::pair<int, int>> moves;  // (symbol index, target)
    bool accepting = false;
  };

  std::vector<State> states;
  int start = 0;

  int add_state() {
    states.emplace_back();
    return static_cast<int>(states.size()) - 1;
  }
  void add_eps(int from, int to) { states[from].eps.push_back(to); }
  void add_move(int from, int symbol, int to) { states[from].moves.emplace_back(symbol, to); }

  // Subset construction followed by minimization.
  Dfa determinize(const Alphabet& alphabet) const;
};

}  // namespace cts::detail
