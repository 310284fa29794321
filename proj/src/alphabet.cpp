#include "cts/alphabet.hpp"

#include "cts/errors.hpp"

namespace cts {

Alphabet::Alphabet(std::string_view symbols) : Alphabet() {
  for (char c : symbols) {
    auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || u >= 0x7f || c == '+' || c == '*' || c == '(' || c == ')')
      throw PreconditionError(std::string("invalid alphabet symbol '") + c + "'");
    if (index_[u] >= 0) throw PreconditionError(std::string("duplicate alphabet symbol '") + c + "'");
    index_[u] = static_cast<int>(symbols_.size());
    symbols_.push_back(c);
  }
}

int Alphabet::require(char c) const {
  int i = index(c);
  if (i < 0) throw PreconditionError(std::string("symbol '") + c + "' not in alphabet \"" + symbols_ + "\"");
  return i;
}

bool Alphabet::contains_all(std::string_view word) const noexcept {
  for (char c : word)
    if (!contains(c)) return false;
  return true;
}

Alphabet Alphabet::merged(const Alphabet& other) const {
  std::string s = symbols_;
  for (char c : other.symbols_)
    if (!contains(c)) s.push_back(c);
  return Alphabet(s);
}

std::vector<std::size_t> parikh(const Alphabet& alphabet, std::string_view word) {
  std::vector<std::size_t> counts(alphabet.size(), 0);
  for (char c : word) ++counts[alphabet.require(c)];
  return counts;
}

}  // namespace cts
