#include "cts/dag.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "cts/errors.hpp"

namespace cts {

LabeledDag::LabeledDag(Alphabet alphabet, std::vector<std::string> labels, std::vector<std::pair<int, int>> edges,
                       std::vector<long long> ids)
    : alphabet_(std::move(alphabet)), labels_(std::move(labels)), edges_(std::move(edges)), ids_(std::move(ids)) {
  const std::size_t n = labels_.size();
  if (ids_.empty()) {
    for (std::size_t v = 0; v < n; ++v) ids_.push_back(static_cast<long long>(v) + 1);
  } else if (ids_.size() != n) {
    throw PreconditionError("vertex id count mismatch");
  } else {
    std::set<long long> distinct(ids_.begin(), ids_.end());
    if (distinct.size() != n) throw PreconditionError("duplicate vertex id");
  }
  for (const auto& l : labels_) {
    if (l.empty()) throw PreconditionError("empty vertex label");
    if (!alphabet_.contains_all(l)) throw PreconditionError("vertex label '" + l + "' uses a symbol outside the alphabet");
  }
  succ_.assign(n, {});
  pred_.assign(n, {});
  std::set<std::pair<int, int>> unique;
  for (auto [u, v] : edges_) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      throw PreconditionError("edge endpoint out of range");
    if (u == v) throw PreconditionError("self-loop on vertex " + std::to_string(ids_[u]));
    if (!unique.emplace(u, v).second) continue;
    succ_[u].push_back(v);
    pred_[v].push_back(u);
  }
  edges_.assign(unique.begin(), unique.end());
  for (auto& s : succ_) std::sort(s.begin(), s.end());
  for (auto& p : pred_) std::sort(p.begin(), p.end());

  std::vector<int> indeg(n);
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v)
    if ((indeg[v] = static_cast<int>(pred_[v].size())) == 0) ready.push(static_cast<int>(v));
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    topo_.push_back(v);
    for (int w : succ_[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (topo_.size() != n) throw PreconditionError("graph has a cycle");
}

int LabeledDag::index_of_id(long long id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) throw PreconditionError("unknown vertex id " + std::to_string(id));
  return static_cast<int>(it - ids_.begin());
}

bool LabeledDag::single_letter() const noexcept {
  return std::all_of(labels_.begin(), labels_.end(), [](const std::string& l) { return l.size() == 1; });
}

ShuffleInstance::ShuffleInstance(Alphabet alphabet, std::vector<std::string> strings)
    : alphabet_(std::move(alphabet)), strings_(std::move(strings)) {
  int off = 0;
  for (const auto& s : strings_) {
    if (!alphabet_.contains_all(s)) throw PreconditionError("string '" + s + "' uses a symbol outside the alphabet");
    offsets_.push_back(off);
    off += static_cast<int>(s.size());
  }
}

std::size_t ShuffleInstance::total_length() const noexcept {
  std::size_t t = 0;
  for (const auto& s : strings_) t += s.size();
  return t;
}

std::pair<std::size_t, std::size_t> ShuffleInstance::position(int vertex) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), vertex);
  // Empty strings share offsets with their successor; take the last string starting at or before vertex
  // that actually contains it.
  std::size_t i = static_cast<std::size_t>(it - offsets_.begin()) - 1;
  while (static_cast<std::size_t>(vertex - offsets_[i]) >= strings_[i].size()) --i;
  return {i, static_cast<std::size_t>(vertex - offsets_[i])};
}

LabeledDag ShuffleInstance::to_dag() const {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < strings_.size(); ++i)
    for (std::size_t j = 0; j < strings_[i].size(); ++j) {
      labels.emplace_back(1, strings_[i][j]);
      if (j) edges.emplace_back(vertex(i, j - 1), vertex(i, j));
    }
  return LabeledDag(alphabet_, std::move(labels), std::move(edges));
}

Reachability reachability(const LabeledDag& g) {
  const std::size_t n = g.size();
  Reachability r;
  r.desc.assign(n, boost::dynamic_bitset<>(n));
  r.anc.assign(n, boost::dynamic_bitset<>(n));
  const auto& topo = g.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it)
    for (int w : g.successors(*it)) {
      r.desc[*it].set(w);
      r.desc[*it] |= r.desc[w];
    }
  for (int v : topo)
    for (int u : g.predecessors(v)) {
      r.anc[v].set(u);
      r.anc[v] |= r.anc[u];
    }
  return r;
}

boost::dynamic_bitset<> down_closure(const LabeledDag& g, const std::vector<int>& seeds) {
  boost::dynamic_bitset<> in(g.size());
  std::vector<int> stack(seeds.begin(), seeds.end());
  for (int v : seeds) in.set(v);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : g.predecessors(v))
      if (!in[u]) in.set(u), stack.push_back(u);
  }
  return in;
}

bool is_topological_sort(const LabeledDag& g, const std::vector<int>& order) {
  if (order.size() != g.size()) return false;
  std::vector<int> pos(g.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    if (v < 0 || static_cast<std::size_t>(v) >= g.size() || pos[v] >= 0) return false;
    pos[v] = static_cast<int>(i);
  }
  for (auto [u, v] : g.edges())
    if (pos[u] > pos[v]) return false;
  return true;
}

std::string spell(const LabeledDag& g, const std::vector<int>& order) {
  std::string w;
  for (int v : order) w += g.label(v);
  return w;
}

std::vector<int> sort_subset(const LabeledDag& g, const boost::dynamic_bitset<>& subset) {
  std::vector<int> out;
  for (int v : g.topological_order())
    if (subset[v]) out.push_back(v);
  return out;
}

void for_each_topological_sort(const LabeledDag& g, const std::function<bool(const std::vector<int>&)>& visit) {
  const std::size_t n = g.size();
  std::vector<int> indeg(n), order;
  for (std::size_t v = 0; v < n; ++v) indeg[v] = static_cast<int>(g.predecessors(static_cast<int>(v)).size());
  std::vector<bool> used(n, false);
  bool stop = false;
  std::function<void()> rec = [&] {
    if (order.size() == n) {
      stop = !visit(order);
      return;
    }
    for (std::size_t v = 0; v < n && !stop; ++v) {
      if (used[v] || indeg[v]) continue;
      used[v] = true;
      order.push_back(static_cast<int>(v));
      for (int w : g.successors(static_cast<int>(v))) --indeg[w];
      rec();
      for (int w : g.successors(static_cast<int>(v))) ++indeg[w];
      order.pop_back();
      used[v] = false;
    }
  };
  rec();
}

std::vector<std::vector<int>> topological_sorts(const LabeledDag& g, std::size_t cap) {
  if (g.size() > cap) throw CapExceeded("topo_sorts_vertices", cap);
  std::vector<std::vector<int>> out;
  for_each_topological_sort(g, [&](const std::vector<int>& o) {
    out.push_back(o);
    return true;
  });
  return out;
}

namespace {

// Maximum matching in the comparability bipartite graph (u -> v iff u < v),
// augmenting from the smallest vertex and trying targets in increasing order.
struct ClosureMatching {
  std::vector<int> match_left, match_right;
  Reachability reach;
};

ClosureMatching closure_matching(const LabeledDag& g) {
  const std::size_t n = g.size();
  ClosureMatching m{std::vector<int>(n, -1), std::vector<int>(n, -1), reachability(g)};
  std::vector<int> stamp(n, -1);
  std::function<bool(int, int)> augment = [&](int u, int round) -> bool {
    const auto& d = m.reach.desc[u];
    for (auto v = d.find_first(); v != boost::dynamic_bitset<>::npos; v = d.find_next(v)) {
      if (stamp[v] == round) continue;
      stamp[v] = round;
      if (m.match_right[v] < 0 || augment(m.match_right[v], round)) {
        m.match_left[u] = static_cast<int>(v);
        m.match_right[v] = u;
        return true;
      }
    }
    return false;
  };
  for (std::size_t u = 0; u < n; ++u) augment(static_cast<int>(u), static_cast<int>(u));
  return m;
}

}  // namespace

WidthResult width_and_antichain(const LabeledDag& g) {
  const std::size_t n = g.size();
  auto m = closure_matching(g);
  // Koenig: alternating reachability from unmatched left vertices.
  std::vector<bool> zl(n, false), zr(n, false);
  std::vector<int> stack;
  for (std::size_t u = 0; u < n; ++u)
    if (m.match_left[u] < 0) zl[u] = true, stack.push_back(static_cast<int>(u));
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    const auto& d = m.reach.desc[u];
    for (auto v = d.find_first(); v != boost::dynamic_bitset<>::npos; v = d.find_next(v)) {
      if (zr[v] || m.match_left[u] == static_cast<int>(v)) continue;
      zr[v] = true;
      int w = m.match_right[v];
      if (w >= 0 && !zl[w]) zl[w] = true, stack.push_back(w);
    }
  }
  WidthResult r;
  for (std::size_t v = 0; v < n; ++v)
    if (zl[v] && !zr[v]) r.antichain.push_back(static_cast<int>(v));
  r.width = r.antichain.size();
  return r;
}

ChainPartition make_chain_partition(const LabeledDag& g, std::vector<std::vector<int>> chains) {
  const std::size_t n = g.size();
  ChainPartition cp;
  cp.chain_of.assign(n, -1);
  cp.index_in_chain.assign(n, -1);
  auto reach = reachability(g);
  for (std::size_t c = 0; c < chains.size(); ++c)
    for (std::size_t i = 0; i < chains[c].size(); ++i) {
      int v = chains[c][i];
      if (v < 0 || static_cast<std::size_t>(v) >= n || cp.chain_of[v] >= 0)
        throw PreconditionError("chains do not partition the vertices");
      if (i && !reach.less(chains[c][i - 1], v)) throw PreconditionError("chain is not totally ordered");
      cp.chain_of[v] = static_cast<int>(c);
      cp.index_in_chain[v] = static_cast<int>(i);
    }
  if (std::find(cp.chain_of.begin(), cp.chain_of.end(), -1) != cp.chain_of.end())
    throw PreconditionError("chains do not cover the vertices");
  cp.chains = std::move(chains);
  return cp;
}

ChainPartition chain_partition(const LabeledDag& g) {
  const std::size_t n = g.size();
  auto m = closure_matching(g);
  ChainPartition cp;
  cp.chain_of.assign(n, -1);
  cp.index_in_chain.assign(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (m.match_right[s] >= 0) continue;
    std::vector<int> chain;
    for (int v = static_cast<int>(s); v >= 0; v = m.match_left[v]) {
      cp.chain_of[v] = static_cast<int>(cp.chains.size());
      cp.index_in_chain[v] = static_cast<int>(chain.size());
      chain.push_back(v);
    }
    cp.chains.push_back(std::move(chain));
  }
  return cp;
}

namespace {

// Weakly connected components that are chains of the order, or nullopt.
std::optional<std::vector<std::vector<int>>> as_disjoint_chains(const LabeledDag& g) {
  const std::size_t n = g.size();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> comps;
  for (int s : g.topological_order()) {
    if (comp[s] >= 0) continue;
    std::vector<int> members, stack{s};
    comp[s] = static_cast<int>(comps.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (const auto* adj : {&g.successors(v), &g.predecessors(v)})
        for (int w : *adj)
          if (comp[w] < 0) comp[w] = comp[s], stack.push_back(w);
    }
    comps.push_back(std::move(members));
  }
  std::vector<int> topo_pos(n);
  for (std::size_t i = 0; i < n; ++i) topo_pos[g.topological_order()[i]] = static_cast<int>(i);
  for (auto& c : comps) {
    std::sort(c.begin(), c.end(), [&](int a, int b) { return topo_pos[a] < topo_pos[b]; });
    // A chain iff consecutive vertices in topological order are joined by an edge.
    for (std::size_t i = 1; i < c.size(); ++i) {
      const auto& s = g.successors(c[i - 1]);
      if (!std::binary_search(s.begin(), s.end(), c[i])) return std::nullopt;
    }
  }
  return comps;
}

std::optional<std::vector<int>> rich_antichain_chains(const LabeledDag& g, const std::vector<std::vector<int>>& chains,
                                                      std::size_t n, std::string_view sub) {
  // Slots (letter, copy) matched to distinct chains that contain the letter.
  const std::size_t slots = sub.size() * n;
  std::vector<std::vector<int>> first_of(chains.size(), std::vector<int>(sub.size(), -1));
  for (std::size_t c = 0; c < chains.size(); ++c)
    for (int v : chains[c])
      for (std::size_t a = 0; a < sub.size(); ++a)
        if (g.label(v).size() == 1 && g.label(v)[0] == sub[a] && first_of[c][a] < 0) first_of[c][a] = v;
  std::vector<int> chain_of_slot(slots, -1), slot_of_chain(chains.size(), -1), stamp(chains.size(), -1);
  std::function<bool(std::size_t, int)> augment = [&](std::size_t s, int round) -> bool {
    std::size_t a = s / n;
    for (std::size_t c = 0; c < chains.size(); ++c) {
      if (first_of[c][a] < 0 || stamp[c] == round) continue;
      stamp[c] = round;
      if (slot_of_chain[c] < 0 || augment(static_cast<std::size_t>(slot_of_chain[c]), round)) {
        slot_of_chain[c] = static_cast<int>(s);
        chain_of_slot[s] = static_cast<int>(c);
        return true;
      }
    }
    return false;
  };
  for (std::size_t s = 0; s < slots; ++s)
    if (!augment(s, static_cast<int>(s))) return std::nullopt;
  std::vector<int> out;
  for (std::size_t s = 0; s < slots; ++s) out.push_back(first_of[chain_of_slot[s]][s / n]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<std::vector<int>> rich_antichain(const LabeledDag& g, std::size_t n, std::string_view sub,
                                               std::size_t budget) {
  Alphabet letters(sub);  // validates distinctness
  if (n == 0 || sub.empty()) return std::vector<int>{};
  if (auto chains = as_disjoint_chains(g)) return rich_antichain_chains(g, *chains, n, sub);

  std::vector<int> cand;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (g.label(static_cast<int>(v)).size() == 1 && letters.contains(g.label(static_cast<int>(v))[0]))
      cand.push_back(static_cast<int>(v));
  auto reach = reachability(g);
  std::vector<std::size_t> need(sub.size(), n), avail(sub.size(), 0);
  for (int v : cand) ++avail[letters.index(g.label(v)[0])];
  std::vector<int> chosen;
  std::size_t deficit = n * sub.size(), nodes = 0;
  // Include/exclude search over candidates with counting bounds.
  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (deficit == 0) return true;
    if (++nodes > budget) throw CapExceeded("enumeration", budget, "rich_antichain search");
    if (i == cand.size()) return false;
    for (std::size_t a = 0; a < sub.size(); ++a)
      if (avail[a] < need[a]) return false;
    int v = cand[i];
    std::size_t a = static_cast<std::size_t>(letters.index(g.label(v)[0]));
    --avail[a];
    bool ok = need[a] > 0 && std::none_of(chosen.begin(), chosen.end(), [&](int u) { return reach.comparable(u, v); });
    if (ok) {
      chosen.push_back(v);
      --need[a];
      --deficit;
      if (search(i + 1)) return true;
      ++deficit;
      ++need[a];
      chosen.pop_back();
    }
    bool found = search(i + 1);
    ++avail[a];
    return found;
  };
  if (!search(0)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::optional<std::vector<int>> rich_antichain(const ShuffleInstance& inst, std::size_t n, std::string_view sub) {
  return rich_antichain(inst.to_dag(), n, sub);
}

std::vector<std::size_t> parikh_image(const LabeledDag& g) {
  std::vector<std::size_t> counts(g.alphabet().size(), 0);
  for (const auto& l : g.labels())
    for (char c : l) ++counts[g.alphabet().index(c)];
  return counts;
}

std::vector<std::size_t> parikh_image(const ShuffleInstance& inst) {
  std::vector<std::size_t> counts(inst.alphabet().size(), 0);
  for (const auto& s : inst.strings())
    for (char c : s) ++counts[inst.alphabet().index(c)];
  return counts;
}

RareFrequent rare_frequent(const ShuffleInstance& inst, std::size_t richness) {
  const auto& A = inst.alphabet();
  const std::size_t k = A.size(), threshold = richness * k;
  std::vector<bool> rare_letter(k, false), rare_string(inst.strings().size(), false);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < k && !changed; ++a) {
      if (rare_letter[a]) continue;
      std::vector<std::size_t> holders;
      for (std::size_t i = 0; i < inst.strings().size(); ++i)
        if (!rare_string[i] && inst.strings()[i].find(A.symbol(a)) != std::string::npos) holders.push_back(i);
      if (holders.size() < threshold) {
        rare_letter[a] = true;
        for (auto i : holders) rare_string[i] = true;
        changed = true;
      }
    }
  }
  RareFrequent r;
  for (std::size_t a = 0; a < k; ++a) (rare_letter[a] ? r.rare_letters : r.frequent_letters) += A.symbol(a);
  for (std::size_t i = 0; i < inst.strings().size(); ++i)
    (rare_string[i] ? r.rare_strings : r.frequent_strings).push_back(i);
  return r;
}

}  // namespace cts
