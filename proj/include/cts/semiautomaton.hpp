#pragma once

#include <string>
#include <vector>

#include "cts/alphabet.hpp"
#include "cts/dfa.hpp"

namespace cts {

// Deterministic complete automaton without initial or final states.
class Semiautomaton {
public:
  Semiautomaton() = default;
  Semiautomaton(Alphabet alphabet, std::size_t states, std::vector<int> delta, std::vector<std::string> names = {});

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return size_; }
  int next(int q, std::size_t symbol_index) const { return delta_[q * alphabet_.size() + symbol_index]; }
  int run(int q, std::string_view word) const;
  const std::vector<int>& table() const noexcept { return delta_; }
  std::string state_name(int q) const { return names_.empty() ? std::to_string(q) : names_[q]; }
  const std::vector<std::string>& state_names() const noexcept { return names_; }
  // Index of a named state; throws PreconditionError when unknown.
  int state_index(const std::string& name) const;

  Dfa with(int initial, const std::vector<int>& finals) const;
  static Semiautomaton of(const Dfa& dfa);

private:
  Alphabet alphabet_;
  std::size_t size_ = 0;
  std::vector<int> delta_;
  std::vector<std::string> names_;
};

// One (initial, finals) pair of a multi-automaton question.
struct StatePair {
  int initial = 0;
  std::vector<int> finals;
};

}  // namespace cts
