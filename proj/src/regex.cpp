#include "cts/regex.hpp"

#include <algorithm>

#include "cts/errors.hpp"
#include "nfa.hpp"

namespace cts {

namespace {

constexpr std::string_view kEpsilon = "\xCE\xB5";     // ε
constexpr std::string_view kEmptySet = "\xE2\x88\x85";  // ∅
constexpr std::string_view kPlus = "\xE2\x81\xBA";      // ⁺

class Parser {
public:
  Parser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  Regex parse() {
    skip_space();
    Regex r = parse_union();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected character in regex", pos_);
    return r;
  }

private:
  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }
  bool at(std::string_view token) const { return text_.substr(pos_, token.size()) == token; }

  bool at_atom_start() const {
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || at(kEpsilon) || at(kEmptySet) || (c != '+' && c != '*' && c != ')' && !at(kPlus));
  }

  Regex parse_union() {
    std::vector<Regex> parts{parse_concat()};
    skip_space();
    while (pos_ < text_.size() && text_[pos_] == '+') {
      ++pos_;
      skip_space();
      parts.push_back(parse_concat());
      skip_space();
    }
    return parts.size() == 1 ? std::move(parts[0]) : Regex::alt(std::move(parts));
  }

  Regex parse_concat() {
    std::vector<Regex> parts;
    skip_space();
    while (at_atom_start()) {
      parts.push_back(parse_postfix());
      skip_space();
    }
    if (parts.empty()) throw ParseError("expected a regex term", pos_);
    return parts.size() == 1 ? std::move(parts[0]) : Regex::cat(std::move(parts));
  }

  Regex parse_postfix() {
    Regex r = parse_atom();
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        r = Regex::star(std::move(r));
      } else if (at(kPlus)) {
        pos_ += kPlus.size();
        Regex copy = r;
        r = Regex::cat({std::move(copy), Regex::star(std::move(r))});
      } else {
        return r;
      }
    }
  }

  Regex parse_atom() {
    if (at(kEpsilon)) {
      pos_ += kEpsilon.size();
      return Regex::epsilon();
    }
    if (at(kEmptySet)) {
      pos_ += kEmptySet.size();
      return Regex::empty();
    }
    char c = text_[pos_];
    if (c == '(') {
      std::size_t open = pos_++;
      skip_space();
      Regex r = parse_union();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("unbalanced parenthesis", open);
      ++pos_;
      return r;
    }
    if (!alphabet_.contains(c)) throw ParseError(std::string("symbol '") + c + "' not in alphabet", pos_);
    ++pos_;
    return Regex::sym(c);
  }
};

// Thompson fragment: entry and exit states.
std::pair<int, int> build(detail::Nfa& nfa, const Regex& r, const Alphabet& alphabet) {
  int in = nfa.add_state(), out = nfa.add_state();
  switch (r.kind) {
    case Regex::Kind::Empty:
      break;
    case Regex::Kind::Epsilon:
      nfa.add_eps(in, out);
      break;
    case Regex::Kind::Symbol:
      nfa.add_move(in, alphabet.require(r.symbol), out);
      break;
    case Regex::Kind::Union:
      for (const auto& c : r.children) {
        auto [ci, co] = build(nfa, c, alphabet);
        nfa.add_eps(in, ci);
        nfa.add_eps(co, out);
      }
      break;
    case Regex::Kind::Concat: {
      int cur = in;
      for (const auto& c : r.children) {
        auto [ci, co] = build(nfa, c, alphabet);
        nfa.add_eps(cur, ci);
        cur = co;
      }
      nfa.add_eps(cur, out);
      break;
    }
    case Regex::Kind::Star: {
      auto [ci, co] = build(nfa, r.children.at(0), alphabet);
      nfa.add_eps(in, ci);
      nfa.add_eps(in, out);
      nfa.add_eps(co, ci);
      nfa.add_eps(co, out);
      break;
    }
  }
  return {in, out};
}

void print(const Regex& r, std::string& out, int context) {
  // context: 0 = union level, 1 = concat operand, 2 = star operand
  switch (r.kind) {
    case Regex::Kind::Empty: out += kEmptySet; return;
    case Regex::Kind::Epsilon: out += kEpsilon; return;
    case Regex::Kind::Symbol: out += r.symbol; return;
    case Regex::Kind::Star:
      print(r.children[0], out, 2);
      out += '*';
      return;
    case Regex::Kind::Union: {
      bool paren = context > 0;
      if (paren) out += '(';
      for (std::size_t i = 0; i < r.children.size(); ++i) {
        if (i) out += '+';
        print(r.children[i], out, 0);
      }
      if (paren) out += ')';
      return;
    }
    case Regex::Kind::Concat: {
      bool paren = context > 1;
      if (paren) out += '(';
      for (const auto& c : r.children) print(c, out, 1);
      if (paren) out += ')';
      return;
    }
  }
}

}  // namespace

std::string Regex::to_string() const {
  std::string out;
  print(*this, out, 0);
  return out;
}

Regex parse_regex(std::string_view text, const Alphabet& alphabet) { return Parser(text, alphabet).parse(); }

Dfa regex_to_dfa(const Regex& regex, const Alphabet& alphabet) {
  detail::Nfa nfa;
  auto [in, out] = build(nfa, regex, alphabet);
  nfa.start = in;
  nfa.states[out].accepting = true;
  return nfa.determinize(alphabet);
}

Dfa compile_regex(std::string_view text, const Alphabet& alphabet) {
  return regex_to_dfa(parse_regex(text, alphabet), alphabet);
}

Alphabet regex_symbols(std::string_view text) {
  std::string out;
  for (char c : text) {
    auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || u >= 0x7f || c == '+' || c == '*' || c == '(' || c == ')') continue;
    if (out.find(c) == std::string::npos) out += c;
  }
  std::sort(out.begin(), out.end());
  return Alphabet(out);
}

}  // namespace cts
