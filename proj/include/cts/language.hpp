#pragma once

#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "cts/dfa.hpp"
#include "cts/group.hpp"
#include "cts/semiautomaton.hpp"

namespace cts {

// A_1* a_1 A_2* a_2 ... a_n A_{n+1}*: gaps[i] lists the symbols of A_{i+1}.
struct Monomial {
  Alphabet alphabet;
  std::vector<std::string> gaps;
  std::string pivots;

  Monomial() = default;
  Monomial(Alphabet alphabet, std::vector<std::string> gaps, std::string pivots);
  std::string to_regex() const;
  Dfa to_dfa() const;
};

// K_0 a_1 K_1 ... a_m K_m where K_j is recognized by segments[j] over the
// segment's own sub-alphabet.
struct DistrictMonomial {
  Alphabet alphabet;
  std::vector<GroupPresentation> segments;
  std::string pivots;

  DistrictMonomial() = default;
  DistrictMonomial(std::vector<GroupPresentation> segments, std::string pivots);
  Dfa to_dfa() const;
};

struct RegexLanguage {
  std::string text;
};

struct MultiLanguage {
  Semiautomaton automaton;
  std::vector<StatePair> pairs;
  // Words accepted from every pair simultaneously.
  Dfa to_dfa() const;
};

class LanguageSpec;

struct UnionLanguage {
  std::vector<LanguageSpec> parts;
};

class LanguageSpec {
public:
  using Value = std::variant<RegexLanguage, Monomial, UnionLanguage, GroupPresentation, DistrictMonomial, MultiLanguage>;

  LanguageSpec() = default;
  LanguageSpec(Value v) : value_(std::move(v)) {}
  template <class T>
    requires(!std::is_same_v<std::decay_t<T>, LanguageSpec> && !std::is_same_v<std::decay_t<T>, Value> &&
             std::is_constructible_v<Value, T>)
  LanguageSpec(T&& v) : value_(std::forward<T>(v)) {}

  const Value& value() const noexcept { return value_; }
  template <class T>
  const T* get() const noexcept { return std::get_if<T>(&value_); }
  std::string kind() const;
  // Symbols named by the specification itself.
  Alphabet own_alphabet() const;
  // Minimal DFA over `alphabet`, which must contain the specification's symbols.
  Dfa to_dfa(const Alphabet& alphabet) const;

private:
  Value value_;
};

}  // namespace cts
