#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cts/alphabet.hpp"

namespace cts {

// Complete deterministic automaton. The transition table is row-major:
// next(q, i) = delta[q * |A| + i].
class Dfa {
public:
  Dfa() = default;
  Dfa(Alphabet alphabet, std::size_t states, std::vector<int> delta, int initial, std::vector<bool> finals);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return finals_.size(); }
  int initial() const noexcept { return initial_; }
  bool is_final(int q) const { return finals_[q]; }
  const std::vector<bool>& finals() const noexcept { return finals_; }
  const std::vector<int>& table() const noexcept { return delta_; }

  int next(int q, std::size_t symbol_index) const { return delta_[q * alphabet_.size() + symbol_index]; }
  // Throws PreconditionError on a symbol outside the alphabet.
  int step(int q, char c) const { return next(q, alphabet_.require(c)); }
  int run(int q, std::string_view word) const;
  bool accepts(std::string_view word) const { return finals_[run(initial_, word)]; }

  // States from which some final state is reachable.
  std::vector<bool> live_states() const;

  // Optional display names; defaults to decimal indices.
  std::string state_name(int q) const;
  void set_state_names(std::vector<std::string> names);
  const std::vector<std::string>& state_names() const noexcept { return names_; }

  Dfa with_initial(int q) const;

private:
  Alphabet alphabet_;
  std::vector<int> delta_;
  int initial_ = 0;
  std::vector<bool> finals_;
  std::vector<std::string> names_;
};

bool dfa_accepts(const Dfa& dfa, std::string_view word);

// Minimal complete DFA with unreachable states removed. States are numbered
// in breadth-first order from the initial state, so equal languages yield
// identical tables.
Dfa minimize(const Dfa& dfa);

bool equivalent(const Dfa& a, const Dfa& b);
bool is_empty_language(const Dfa& dfa);

// Product constructions; both operands must share the same alphabet.
Dfa dfa_union(const Dfa& a, const Dfa& b);
Dfa dfa_intersection(const Dfa& a, const Dfa& b);
Dfa dfa_complement(const Dfa& a);

// Same language over a larger alphabet; new symbols lead to a sink.
Dfa extend_alphabet(const Dfa& dfa, const Alphabet& alphabet);

// Minimal DFA of u^{-1}L.
Dfa left_quotient(const Dfa& dfa, std::string_view u);

}  // namespace cts
