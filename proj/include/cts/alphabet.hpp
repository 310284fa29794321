#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cts {

// Ordered set of single-character symbols. Symbols are printable ASCII
// characters other than whitespace and the regex operators + * ( ).
class Alphabet {
public:
  Alphabet() { index_.fill(-1); }
  explicit Alphabet(std::string_view symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  bool contains(char c) const noexcept { return index_[static_cast<unsigned char>(c)] >= 0; }
  // Position of c, or -1.
  int index(char c) const noexcept { return index_[static_cast<unsigned char>(c)]; }
  // Position of c; throws PreconditionError if c is not a symbol.
  int require(char c) const;
  char symbol(std::size_t i) const { return symbols_[i]; }
  const std::string& symbols() const noexcept { return symbols_; }

  bool contains_all(std::string_view word) const noexcept;
  // Symbols of this alphabet in order, followed by those of other not yet present.
  Alphabet merged(const Alphabet& other) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

private:
  std::string symbols_;
  std::array<int, 256> index_{};
};

// Number of occurrences of each alphabet symbol in word, in alphabet order.
std::vector<std::size_t> parikh(const Alphabet& alphabet, std::string_view word);

}  // namespace cts
