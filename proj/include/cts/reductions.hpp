#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cts/dag.hpp"
#include "cts/solvers.hpp"

namespace cts {

// Filter words. Every generator takes the raw length n of the source word.
// (a^B b^B)* -> (ab)*
std::string filter_ab_from_power(std::size_t B, std::size_t n);
// (ab)* -> u*; u must contain both a and b.
std::string filter_ustar_from_ab(const std::string& u, std::size_t n);
// (ab)* -> (aa+bb)*
std::string filter_aabb_from_ab(std::size_t n);

struct FilterSequence {
  std::string name;
  std::string source_regex;
  std::string target_regex;
  Alphabet alphabet;
  std::function<std::string(std::size_t)> word;
};

FilterSequence ab_filter(std::size_t B);
FilterSequence ustar_filter(const std::string& u);
FilterSequence aabb_filter();

// The instance plus one disjoint string (path) labeled f.
ShuffleInstance shuffle_reduce(const ShuffleInstance& inst, const std::string& f);
LabeledDag shuffle_reduce(const LabeledDag& g, const std::string& f);
// Uses f = fs.word(total vertex count).
ShuffleInstance shuffle_reduce(const ShuffleInstance& inst, const FilterSequence& fs);
LabeledDag shuffle_reduce(const LabeledDag& g, const FilterSequence& fs);

struct HardInstance {
  ShuffleInstance instance;
  std::string target_regex;
};

// Strings a^e b^e against (a^B b^B)*. Requires |E| = 3m, sum E = mB and
// B/4 < e < B/2 for every e.
HardInstance gen_unary3partition(const std::vector<std::size_t>& E, std::size_t B);
// Whether E splits into triples each summing to B (exhaustive).
bool three_partition_exists(const std::vector<std::size_t>& E, std::size_t B);

// w with letters a,b (tag 1) and every u in U with letters A,B (tag 2),
// against (aA+bB)*. Positive iff w is in the shuffle of U.
HardInstance gen_tagged_shuffle(const std::string& w, const std::vector<std::string>& U);

// Empty when the a/b counts differ (then the (ab+b)* answer is no);
// otherwise the instance, whose (ab+b)* answer equals its (ab)* answer.
std::optional<Instance> reduce_abb(const Instance& inst);

// g plus a path labeled u with an edge from every path vertex to every
// original vertex: achieves K iff g achieves u^{-1}K.
LabeledDag quotient_reduce(const LabeledDag& g, const std::string& u);

}  // namespace cts
