#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cts/caps.hpp"
#include "cts/dfa.hpp"
#include "cts/semiautomaton.hpp"

namespace cts {

using Transformation = std::vector<std::uint16_t>;

struct TransformationHash {
  std::size_t operator()(const Transformation& t) const noexcept;
};

// Transition monoid of a semiautomaton. Elements are the transformations
// induced by words, sorted lexicographically; the product x*y applies x first.
class TransitionMonoid {
public:
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t states() const noexcept { return states_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Transformation& element(int x) const { return elements_[x]; }
  // Index of a transformation, or -1 when it is not in the monoid.
  int index_of(const Transformation& t) const;
  int identity() const noexcept { return identity_; }
  int generator(std::size_t symbol_index) const { return generators_[symbol_index]; }
  int of_word(std::string_view word) const;
  // A shortest word mapping to x (ties broken by alphabet order).
  const std::string& representative(int x) const { return words_[x]; }

  int multiply(int x, int y) const;
  int power(int x, std::uint64_t k) const;
  // Least omega > 0 with x^{2 omega} = x^omega for all x.
  std::uint64_t omega() const noexcept { return omega_; }
  int idempotent_power(int x) const { return idempotent_[x]; }
  bool is_group() const;
  bool has_table() const noexcept { return !table_.empty(); }

private:
  friend TransitionMonoid transition_monoid(const Semiautomaton&, const Caps&);

  Alphabet alphabet_;
  std::size_t states_ = 0;
  std::vector<Transformation> elements_;
  std::vector<std::string> words_;
  std::unordered_map<Transformation, int, TransformationHash> lookup_;
  std::vector<int> generators_;
  std::vector<int> table_;  // row-major, filled when size() <= kTableLimit
  std::vector<int> idempotent_;
  int identity_ = 0;
  std::uint64_t omega_ = 1;

  static constexpr std::size_t kTableLimit = 2048;
  int compose(int x, int y) const;
};

TransitionMonoid transition_monoid(const Semiautomaton& sa, const Caps& caps = {});
// Transition monoid of the minimal automaton.
TransitionMonoid syntactic_monoid(const Dfa& dfa, const Caps& caps = {});

// First pair (x, y) in index order violating an equation, if any. The
// aperiodicity check reports (x, x).
using EquationWitness = std::pair<int, int>;
std::optional<EquationWitness> aperiodic_violation(const TransitionMonoid& m);
std::optional<EquationWitness> da_violation(const TransitionMonoid& m);
std::optional<EquationWitness> do_violation(const TransitionMonoid& m);
std::optional<EquationWitness> ds_violation(const TransitionMonoid& m);

inline bool is_aperiodic(const TransitionMonoid& m) { return !aperiodic_violation(m); }
inline bool in_da(const TransitionMonoid& m) { return !da_violation(m); }
inline bool in_do(const TransitionMonoid& m) { return !do_violation(m); }
inline bool in_ds(const TransitionMonoid& m) { return !ds_violation(m); }

enum class Complexity { NL, NPComplete, Unknown };
std::string to_string(Complexity c);

struct ClassificationReport {
  std::size_t monoid_size = 0;
  std::uint64_t omega = 1;
  bool group = false;
  bool aperiodic = false;
  bool da = false;
  bool do_ = false;
  bool ds = false;
  Complexity cts = Complexity::Unknown;
  Complexity csh = Complexity::Unknown;
  // Equation that decided the verdict and its first violating pair.
  std::string witness_equation;
  std::optional<EquationWitness> witness;
  std::optional<std::pair<std::string, std::string>> witness_words;
};

// Applies the verdict table to the transition monoid of sa.
ClassificationReport classify(const Semiautomaton& sa, const Caps& caps = {});

}  // namespace cts
