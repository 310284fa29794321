#include "search.hpp"

#include <unordered_set>

#include <boost/functional/hash.hpp>

#include "cts/errors.hpp"

namespace cts::detail {

namespace {

// trans[v][q]: state after reading label(v) from q, or -1 when dead.
std::vector<std::vector<int>> label_steps(const LabeledDag& g, const Dfa& dfa) {
  auto live = dfa.live_states();
  std::vector<std::vector<int>> trans(g.size(), std::vector<int>(dfa.size()));
  for (std::size_t v = 0; v < g.size(); ++v)
    for (std::size_t q = 0; q < dfa.size(); ++q) {
      int t = dfa.run(static_cast<int>(q), g.label(static_cast<int>(v)));
      trans[v][q] = live[t] ? t : -1;
    }
  return trans;
}

}  // namespace

ChainPartition string_chains(const ShuffleInstance& inst) {
  std::vector<std::vector<int>> chains;
  for (std::size_t i = 0; i < inst.strings().size(); ++i) {
    if (inst.strings()[i].empty()) continue;
    std::vector<int> c;
    for (std::size_t j = 0; j < inst.strings()[i].size(); ++j) c.push_back(inst.vertex(i, j));
    chains.push_back(std::move(c));
  }
  ChainPartition cp;
  const std::size_t n = inst.total_length();
  cp.chain_of.assign(n, -1);
  cp.index_in_chain.assign(n, -1);
  for (std::size_t c = 0; c < chains.size(); ++c)
    for (std::size_t i = 0; i < chains[c].size(); ++i) {
      cp.chain_of[chains[c][i]] = static_cast<int>(c);
      cp.index_in_chain[chains[c][i]] = static_cast<int>(i);
    }
  cp.chains = std::move(chains);
  return cp;
}

std::optional<std::vector<int>> search_chains(const LabeledDag& g, const ChainPartition& cp, const Dfa& dfa,
                                              const Caps& caps) {
  const std::size_t k = cp.chains.size(), Q = dfa.size();
  if (!dfa.live_states()[dfa.initial()]) return std::nullopt;
  // Mixed-radix code of the position vector.
  std::vector<std::uint64_t> mult(k);
  unsigned __int128 span = 1;
  for (std::size_t c = 0; c < k; ++c) {
    mult[c] = static_cast<std::uint64_t>(span);
    span *= cp.chains[c].size() + 1;
    if (span * Q > (static_cast<unsigned __int128>(1) << 63)) throw CapExceeded("dp_states", caps.dp_states, "state key space");
  }
  auto trans = label_steps(g, dfa);
  std::vector<std::size_t> pos(k, 0);
  auto available = [&](std::size_t c) {
    if (pos[c] == cp.chains[c].size()) return -1;
    int v = cp.chains[c][pos[c]];
    for (int p : g.predecessors(v))
      if (pos[cp.chain_of[p]] <= static_cast<std::size_t>(cp.index_in_chain[p])) return -1;
    return v;
  };

  struct Frame {
    std::uint64_t code;
    int q;
    std::size_t next;
    int chain;  // chain advanced to reach this frame, -1 for the root
  };
  std::unordered_set<std::uint64_t> visited;
  std::vector<Frame> stack{{0, dfa.initial(), 0, -1}};
  visited.insert(static_cast<std::uint64_t>(dfa.initial()));
  std::size_t consumed = 0;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (consumed == g.size() && dfa.is_final(f.q)) {
      // Rebuild by replaying the chain choices.
      std::vector<int> order;
      std::vector<std::size_t> replay(k, 0);
      for (std::size_t i = 1; i < stack.size(); ++i) {
        auto c = static_cast<std::size_t>(stack[i].chain);
        order.push_back(cp.chains[c][replay[c]++]);
      }
      return order;
    }
    bool pushed = false;
    while (f.next < k) {
      std::size_t c = f.next++;
      int v = available(c);
      if (v < 0) continue;
      int t = trans[v][f.q];
      if (t < 0) continue;
      std::uint64_t code = f.code + mult[c];
      if (!visited.insert(code * Q + static_cast<std::uint64_t>(t)).second) continue;
      if (visited.size() > caps.dp_states) throw CapExceeded("dp_states", caps.dp_states);
      ++pos[c];
      ++consumed;
      stack.push_back({code, t, 0, static_cast<int>(c)});
      pushed = true;
      break;
    }
    if (!pushed) {
      if (f.chain >= 0) --pos[static_cast<std::size_t>(f.chain)], --consumed;
      stack.pop_back();
    }
  }
  return std::nullopt;
}

std::optional<std::vector<int>> search_downsets(const LabeledDag& g, const Dfa& dfa, const Caps& caps) {
  const std::size_t n = g.size();
  if (n > caps.brute_vertices) throw CapExceeded("brute_vertices", caps.brute_vertices);
  if (n > 64) throw CapExceeded("brute_vertices", 64);
  if (!dfa.live_states()[dfa.initial()]) return std::nullopt;
  auto trans = label_steps(g, dfa);
  std::vector<std::uint64_t> preds(n, 0);
  for (auto [u, v] : g.edges()) preds[v] |= std::uint64_t{1} << u;
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  using Key = std::pair<std::uint64_t, int>;
  std::unordered_set<Key, boost::hash<Key>> visited;
  struct Frame {
    std::uint64_t mask;
    int q;
    std::size_t next;
    int vertex;
  };
  std::vector<Frame> stack{{0, dfa.initial(), 0, -1}};
  visited.emplace(0, dfa.initial());
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.mask == full && dfa.is_final(f.q)) {
      std::vector<int> order;
      for (std::size_t i = 1; i < stack.size(); ++i) order.push_back(stack[i].vertex);
      return order;
    }
    bool pushed = false;
    while (f.next < n) {
      std::size_t v = f.next++;
      std::uint64_t b = std::uint64_t{1} << v;
      if ((f.mask & b) || (preds[v] & ~f.mask)) continue;
      int t = trans[v][f.q];
      if (t < 0) continue;
      if (!visited.emplace(f.mask | b, t).second) continue;
      if (visited.size() > caps.dp_states) throw CapExceeded("dp_states", caps.dp_states);
      stack.push_back({f.mask | b, t, 0, static_cast<int>(v)});
      pushed = true;
      break;
    }
    if (!pushed) stack.pop_back();
  }
  return std::nullopt;
}

}  // namespace cts::detail
