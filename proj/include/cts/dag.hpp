#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cts/alphabet.hpp"

namespace cts {

// Vertex-labeled DAG. Vertices are numbered 0..n-1 internally; each keeps the
// external id it was created with (1..n by default). Labels are non-empty
// words over the alphabet; single letters in the standard setting.
class LabeledDag {
public:
  LabeledDag() = default;
  LabeledDag(Alphabet alphabet, std::vector<std::string> labels, std::vector<std::pair<int, int>> edges,
             std::vector<long long> ids = {});

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<int>& successors(int v) const { return succ_[v]; }
  const std::vector<int>& predecessors(int v) const { return pred_[v]; }
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
  long long id(int v) const { return ids_[v]; }
  const std::vector<long long>& ids() const noexcept { return ids_; }
  int index_of_id(long long id) const;
  // Kahn order, smallest index first among available vertices.
  const std::vector<int>& topological_order() const noexcept { return topo_; }
  bool single_letter() const noexcept;

private:
  Alphabet alphabet_;
  std::vector<std::string> labels_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> succ_, pred_;
  std::vector<long long> ids_;
  std::vector<int> topo_;
};

// Tuple of strings; the special case of a DAG made of disjoint paths.
class ShuffleInstance {
public:
  ShuffleInstance() = default;
  ShuffleInstance(Alphabet alphabet, std::vector<std::string> strings);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<std::string>& strings() const noexcept { return strings_; }
  std::size_t total_length() const noexcept;
  // Vertex of letter j of string i in to_dag(): strings in order, ids from 1.
  int vertex(std::size_t i, std::size_t j) const { return offsets_[i] + static_cast<int>(j); }
  std::pair<std::size_t, std::size_t> position(int vertex) const;
  LabeledDag to_dag() const;

private:
  Alphabet alphabet_;
  std::vector<std::string> strings_;
  std::vector<int> offsets_;
};

// Strict reachability: desc[u][v] iff there is a non-empty path u -> v.
struct Reachability {
  std::vector<boost::dynamic_bitset<>> desc;
  std::vector<boost::dynamic_bitset<>> anc;
  bool less(int u, int v) const { return desc[u][v]; }
  bool comparable(int u, int v) const { return u == v || desc[u][v] || desc[v][u]; }
};
Reachability reachability(const LabeledDag& g);

// Vertices of seeds together with all their ancestors (down-closure).
boost::dynamic_bitset<> down_closure(const LabeledDag& g, const std::vector<int>& seeds);

bool is_topological_sort(const LabeledDag& g, const std::vector<int>& order);
std::string spell(const LabeledDag& g, const std::vector<int>& order);
// Topological sort of the induced subgraph on `subset`, smallest index first.
std::vector<int> sort_subset(const LabeledDag& g, const boost::dynamic_bitset<>& subset);

// Calls visit for every topological sort until it returns false.
void for_each_topological_sort(const LabeledDag& g, const std::function<bool(const std::vector<int>&)>& visit);
// Explicit list; throws CapExceeded above cap vertices.
std::vector<std::vector<int>> topological_sorts(const LabeledDag& g, std::size_t cap = 12);

struct WidthResult {
  std::size_t width = 0;
  std::vector<int> antichain;  // a maximum antichain, ascending
};
// Maximum antichain via minimum path cover on the transitive closure.
WidthResult width_and_antichain(const LabeledDag& g);

struct ChainPartition {
  std::vector<std::vector<int>> chains;  // each chain in increasing order
  std::vector<int> chain_of;
  std::vector<int> index_in_chain;
};
// Minimum chain partition; chains ordered by their first vertex.
ChainPartition chain_partition(const LabeledDag& g);
// Builds the bookkeeping for a given list of chains and checks validity.
ChainPartition make_chain_partition(const LabeledDag& g, std::vector<std::vector<int>> chains);

// An antichain with at least n vertices of every letter in sub, using only
// sub-labeled vertices; nullopt when none exists. Disjoint unions of chains
// are decided by bipartite matching, other DAGs by exhaustive search.
std::optional<std::vector<int>> rich_antichain(const LabeledDag& g, std::size_t n, std::string_view sub,
                                               std::size_t budget = 50000000);
std::optional<std::vector<int>> rich_antichain(const ShuffleInstance& inst, std::size_t n, std::string_view sub);

std::vector<std::size_t> parikh_image(const LabeledDag& g);
std::vector<std::size_t> parikh_image(const ShuffleInstance& inst);

struct RareFrequent {
  std::string rare_letters, frequent_letters;          // in alphabet order
  std::vector<std::size_t> rare_strings, frequent_strings;  // string indices, ascending
};
// Moves a frequent letter to the rare side while it occurs in fewer than
// R*|A| frequent strings, taking those strings along; repeats to a fixpoint.
RareFrequent rare_frequent(const ShuffleInstance& inst, std::size_t richness);

}  // namespace cts
