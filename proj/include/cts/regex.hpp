#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cts/alphabet.hpp"
#include "cts/dfa.hpp"

namespace cts {

// Regular expression syntax tree. Grammar: '+' is union, '*' is Kleene star,
// juxtaposition is concatenation, parentheses group, "ε" is the empty word and
// "∅" the empty language. A postfix "⁺" abbreviates xx*. Whitespace is ignored.
struct Regex {
  enum class Kind { Empty, Epsilon, Symbol, Union, Concat, Star };

  Kind kind = Kind::Empty;
  char symbol = 0;
  std::vector<Regex> children;

  static Regex empty() { return {}; }
  static Regex epsilon() { return {Kind::Epsilon, 0, {}}; }
  static Regex sym(char c) { return {Kind::Symbol, c, {}}; }
  static Regex alt(std::vector<Regex> parts) { return {Kind::Union, 0, std::move(parts)}; }
  static Regex cat(std::vector<Regex> parts) { return {Kind::Concat, 0, std::move(parts)}; }
  static Regex star(Regex inner) { return {Kind::Star, 0, {std::move(inner)}}; }

  std::string to_string() const;
};

// Symbols mentioned in regex text, in sorted order.
Alphabet regex_symbols(std::string_view text);

Regex parse_regex(std::string_view text, const Alphabet& alphabet);

// Thompson construction, subset construction, minimization.
Dfa regex_to_dfa(const Regex& regex, const Alphabet& alphabet);
Dfa compile_regex(std::string_view text, const Alphabet& alphabet);

}  // namespace cts
