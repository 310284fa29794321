#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cts/alphabet.hpp"
#include "cts/caps.hpp"
#include "cts/dag.hpp"
#include "cts/dfa.hpp"

namespace cts {

// Finite group H with a morphism mu: A* -> H and an accepting subset.
// The recognized language is mu^{-1}(accepting).
class GroupPresentation {
public:
  GroupPresentation() = default;
  // table[x][y] is the product x*y. mu lists one element per alphabet symbol.
  GroupPresentation(Alphabet alphabet, std::vector<std::vector<int>> table, std::vector<int> mu,
                    std::vector<int> accepting);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t order() const noexcept { return table_.size(); }
  int identity() const noexcept { return identity_; }
  int multiply(int x, int y) const { return table_[x][y]; }
  int inverse(int x) const { return inverse_[x]; }
  int power(int x, std::uint64_t k) const;
  // Order of the element x in H.
  std::size_t element_order(int x) const;
  int mu(std::size_t symbol_index) const { return mu_[symbol_index]; }
  int mu_of(char c) const { return mu_[alphabet_.require(c)]; }
  const std::vector<int>& mu_table() const noexcept { return mu_; }
  int evaluate(std::string_view word) const;
  bool is_accepting(int x) const { return accepting_[x]; }
  std::vector<int> accepting() const;
  const std::vector<std::vector<int>>& table() const noexcept { return table_; }

  // Subgroup generated by mu of the given letters (all letters when empty).
  std::vector<bool> generated(std::string_view letters) const;
  bool is_surjective() const;
  Dfa to_dfa() const;
  // Same group and accepting set, morphism restricted to a sub-alphabet.
  GroupPresentation restricted(const Alphabet& sub) const;
  // Same morphism, different accepting set.
  GroupPresentation with_accepting(std::vector<int> accepting) const;

  // Z/n generated by `letters`, each mapped to 1.
  static GroupPresentation cyclic(std::size_t n, std::string_view letters, std::vector<int> accepting);
  // S3 as permutations of {0,1,2}, elements in lexicographic order of the
  // one-line notation (element 0 is the identity); mu gives element indices.
  static GroupPresentation symmetric3(std::string_view letters, std::vector<int> mu, std::vector<int> accepting);

private:
  Alphabet alphabet_;
  std::vector<std::vector<int>> table_;
  std::vector<int> mu_;
  std::vector<bool> accepting_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

// Sets of group elements as bitmasks; groups are limited to 64 elements.
using ElementSet = std::uint64_t;

// {mu(w) : Parikh image of w equals p}; p is indexed by the presentation's
// alphabet. Large coordinates are saturated (see README) and the saturation
// is checked against one extra period before use.
ElementSet reachable_set(const GroupPresentation& gp, const std::vector<std::size_t>& p);
// A word with Parikh image p and mu(word) = h, if any.
std::optional<std::string> realize_element(const GroupPresentation& gp, const std::vector<std::size_t>& p, int h);

// Shortest word (alphabet-order tie break) evaluating to each element; empty
// optional for elements outside the generated subgroup.
std::vector<std::optional<std::string>> shortest_words(const GroupPresentation& gp);

// Splices the pair structure of w_1 .. w_n with insertions w'_0 .. w'_n until
// no monochromatic triangle is left; returns the indices of kept insertions.
std::vector<std::size_t> insertion_compress(const std::vector<std::string>& words,
                                            const std::vector<std::string>& insertions, const GroupPresentation& gp);

// Topological sort of freq (as vertex indices of freq.to_dag()) cut into
// targets.size() consecutive segments, segment i evaluating to targets[i].
// Throws PreconditionError when the construction cannot be carried out.
std::vector<std::vector<int>> realize_segmented(const ShuffleInstance& freq, const GroupPresentation& gp,
                                                const std::vector<int>& targets);

}  // namespace cts
