#include <algorithm>
#include <numeric>

#include "cts/errors.hpp"
#include "cts/regex.hpp"
#include "cts/solvers.hpp"
#include "search.hpp"

namespace cts {

namespace {

const Alphabet& ab() {
  static const Alphabet A("ab");
  return A;
}

void require_ab(const LabeledDag& g, const char* who) {
  for (const auto& l : g.labels())
    if (l != "a" && l != "b") throw PreconditionError(std::string(who) + " needs single-letter labels over {a, b}");
}

void require_ab(const ShuffleInstance& inst, const char* who) {
  for (const auto& s : inst.strings())
    if (s.find_first_not_of("ab") != std::string::npos)
      throw PreconditionError(std::string(who) + " needs strings over {a, b}");
}

using Set = boost::dynamic_bitset<>;

// Sort of the ancestors of `block` (excluding it), then `block` in the given
// order, then every other vertex.
std::vector<int> contiguous(const LabeledDag& g, const std::vector<int>& block) {
  Set before = down_closure(g, block);
  for (int v : block) before.reset(v);
  std::vector<int> order = sort_subset(g, before);
  order.insert(order.end(), block.begin(), block.end());
  Set rest = ~(before);
  for (int v : block) rest.reset(v);
  for (int v : sort_subset(g, rest)) order.push_back(v);
  return order;
}

}  // namespace

SolveResult solve_ab_or_aa(const LabeledDag& g) {
  require_ab(g, "solve_ab_or_aa");
  static const Dfa lang = compile_regex("(ab)*+(a+b)*aa(a+b)*", ab());
  const std::string tag = "ab-or-aa";
  auto reach = reachability(g);
  std::vector<int> as, bs;
  for (std::size_t v = 0; v < g.size(); ++v) (g.label(static_cast<int>(v)) == "a" ? as : bs).push_back(static_cast<int>(v));

  for (std::size_t i = 0; i < as.size(); ++i)
    for (std::size_t j = i + 1; j < as.size(); ++j)
      if (!reach.comparable(as[i], as[j])) return SolveResult::yes(g, lang, contiguous(g, {as[i], as[j]}), tag);

  // The a's form a chain; sort it.
  std::sort(as.begin(), as.end(), [&](int x, int y) { return reach.less(x, y); });
  for (std::size_t i = 0; i + 1 < as.size(); ++i) {
    Set between = reach.desc[as[i]] & reach.anc[as[i + 1]];
    if (between.none()) return SolveResult::yes(g, lang, contiguous(g, {as[i], as[i + 1]}), tag);
  }

  // Strict alternation: one b between consecutive a's and one b after the last.
  if (as.size() != bs.size()) return SolveResult::no(tag);
  if (as.empty()) return SolveResult::yes(g, lang, {}, tag);
  std::vector<int> order;
  std::vector<bool> placed(g.size(), false);
  for (std::size_t i = 0; i + 1 < as.size(); ++i) {
    Set between = reach.desc[as[i]] & reach.anc[as[i + 1]];
    if (between.count() != 1) return SolveResult::no(tag);
    int b = static_cast<int>(between.find_first());
    order.push_back(as[i]);
    order.push_back(b);
    placed[b] = true;
  }
  order.push_back(as.back());
  int extra = -1;
  for (int b : bs)
    if (!placed[b]) extra = b;
  for (int a : as)
    if (reach.less(extra, a)) return SolveResult::no(tag);
  order.push_back(extra);
  if (!is_topological_sort(g, order)) return SolveResult::no(tag);
  return SolveResult::yes(g, lang, std::move(order), tag);
}

SolveResult solve_kprime_or_power(const LabeledDag& g, const Dfa& kprime, std::size_t i, const Caps& caps) {
  require_ab(g, "solve_kprime_or_power");
  const std::string tag = "kprime-or-power";
  std::string power = "(a+b)*(" + std::string(i, 'a') + "+" + std::string(i, 'b') + ")(a+b)*";
  if (i == 0) power = "(a+b)*";
  Dfa kp = extend_alphabet(kprime, kprime.alphabet().merged(ab()));
  Dfa lang = dfa_union(kp, extend_alphabet(compile_regex(power, ab()), kp.alphabet()));
  if (i == 0) return SolveResult::yes(g, lang, g.topological_order(), tag);
  auto w = width_and_antichain(g);
  if (w.width >= 2 * i) {
    std::vector<int> block;
    for (const char* letter : {"a", "b"}) {
      block.clear();
      for (int v : w.antichain)
        if (g.label(v) == letter && block.size() < i) block.push_back(v);
      if (block.size() == i) break;
    }
    return SolveResult::yes(g, lang, contiguous(g, block), tag);
  }
  auto order = detail::search_chains(g, chain_partition(g), lang, caps);
  return order ? SolveResult::yes(g, lang, std::move(*order), tag) : SolveResult::no(tag);
}

namespace {

std::size_t odd_blocks(const std::string& s) {
  std::size_t n = 0, run = 0;
  for (char c : s + "b") {
    if (c == 'a') {
      ++run;
    } else {
      n += run % 2;
      run = 0;
    }
  }
  return n;
}

// Witness for (aa+b)* when at least three strings contain an a and the
// balance condition holds: shrink heavy strings by removing aa pairs, then
// greedily take a b when possible and otherwise one a from each of the two
// heaviest strings. Removed pairs are emitted as soon as they come up.
std::optional<std::vector<int>> aab_greedy(const ShuffleInstance& inst) {
  const auto& S = inst.strings();
  const std::size_t m = S.size();
  std::vector<std::size_t> alt(m), weight(m);
  for (std::size_t i = 0; i < m; ++i) {
    alt[i] = odd_blocks(S[i]);
    weight[i] = static_cast<std::size_t>(std::count(S[i].begin(), S[i].end(), 'a'));
  }
  std::size_t c = static_cast<std::size_t>(std::max_element(alt.begin(), alt.end()) - alt.begin());
  const std::size_t n = alt[c];
  // pair_start[i][j]: positions j, j+1 of string i are a removed aa pair.
  std::vector<std::vector<bool>> pair_start(m), removed(m);
  std::vector<std::size_t> remaining(m);
  for (std::size_t i = 0; i < m; ++i) {
    pair_start[i].assign(S[i].size(), false);
    removed[i].assign(S[i].size(), false);
    std::size_t target = weight[i];
    if (i == c) target = n;
    else if (weight[i] > n + 1) target = (weight[i] - n) % 2 == 0 ? n : n + 1;
    std::size_t w = weight[i];
    for (std::size_t j = 0; j + 1 < S[i].size() && w > target; ++j)
      if (S[i][j] == 'a' && S[i][j + 1] == 'a' && !removed[i][j]) {
        pair_start[i][j] = true;
        removed[i][j] = removed[i][j + 1] = true;
        w -= 2;
        ++j;
      }
    remaining[i] = w;
  }
  std::vector<std::size_t> pos(m, 0);
  std::vector<int> order;
  auto flush = [&](std::size_t i) {
    while (pos[i] < S[i].size() && pair_start[i][pos[i]]) {
      order.push_back(inst.vertex(i, pos[i]));
      order.push_back(inst.vertex(i, pos[i] + 1));
      pos[i] += 2;
    }
  };
  const std::size_t total = inst.total_length();
  while (order.size() < total) {
    for (std::size_t i = 0; i < m; ++i) flush(i);
    if (order.size() == total) break;
    bool took_b = false;
    for (std::size_t i = 0; i < m && !took_b; ++i)
      if (pos[i] < S[i].size() && S[i][pos[i]] == 'b') {
        order.push_back(inst.vertex(i, pos[i]++));
        took_b = true;
      }
    if (took_b) continue;
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < m; ++i)
      if (pos[i] < S[i].size()) live.push_back(i);
    if (live.size() < 2) return std::nullopt;
    std::stable_sort(live.begin(), live.end(), [&](std::size_t x, std::size_t y) { return remaining[x] > remaining[y]; });
    for (std::size_t t = 0; t < 2; ++t) {
      std::size_t i = live[t];
      order.push_back(inst.vertex(i, pos[i]++));
      --remaining[i];
    }
  }
  return order;
}

// Order for a sub-instance, translated back to vertices of inst.
std::optional<std::vector<int>> search_subset(const ShuffleInstance& inst, const std::vector<std::size_t>& which,
                                              const Dfa& lang, const Caps& caps) {
  std::vector<std::string> strings;
  for (auto i : which) strings.push_back(inst.strings()[i]);
  ShuffleInstance sub(inst.alphabet(), strings);
  auto order = detail::search_chains(sub.to_dag(), detail::string_chains(sub), lang, caps);
  if (!order) return std::nullopt;
  for (int& v : *order) {
    auto [i, j] = sub.position(v);
    v = inst.vertex(which[i], j);
  }
  return order;
}

}  // namespace

SolveResult solve_aab(const ShuffleInstance& inst, const Caps& caps) {
  require_ab(inst, "solve_aab");
  static const Dfa lang = compile_regex("(aa+b)*", ab());
  const std::string tag = "aab";
  LabeledDag g = inst.to_dag();
  const auto& S = inst.strings();
  std::size_t total_a = 0;
  std::vector<std::size_t> with_a;
  std::vector<int> b_only;
  for (std::size_t i = 0; i < S.size(); ++i) {
    auto w = static_cast<std::size_t>(std::count(S[i].begin(), S[i].end(), 'a'));
    total_a += w;
    if (w) with_a.push_back(i);
    else
      for (std::size_t j = 0; j < S[i].size(); ++j) b_only.push_back(inst.vertex(i, j));
  }
  if (total_a % 2) return SolveResult::no(tag);
  if (with_a.size() <= 2) {
    auto order = search_subset(inst, with_a, extend_alphabet(lang, lang.alphabet().merged(inst.alphabet())), caps);
    if (!order) return SolveResult::no(tag);
    b_only.insert(b_only.end(), order->begin(), order->end());
    return SolveResult::yes(g, lang, std::move(b_only), tag);
  }
  for (auto i : with_a) {
    std::size_t w = static_cast<std::size_t>(std::count(S[i].begin(), S[i].end(), 'a'));
    if (odd_blocks(S[i]) > total_a - w) return SolveResult::no(tag);
  }
  std::vector<std::string> strings;
  for (auto i : with_a) strings.push_back(S[i]);
  ShuffleInstance core(inst.alphabet(), strings);
  auto order = aab_greedy(core);
  if (!order) throw std::logic_error("aab: greedy construction got stuck");
  for (int& v : *order) {
    auto [i, j] = core.position(v);
    v = inst.vertex(with_a[i], j);
  }
  b_only.insert(b_only.end(), order->begin(), order->end());
  return SolveResult::yes(g, lang, std::move(b_only), tag);
}

namespace {

// Witness from four antichain strings (two holding an a, two a b) plus a
// string starting with a and one ending with b outside them: the middle
// block is spelled aabb or abab, whose numbers of a+b+ factors differ by one.
std::optional<std::vector<int>> apbp_parity(const ShuffleInstance& inst, const Dfa& lang) {
  const auto& S = inst.strings();
  const std::size_t m = S.size();
  LabeledDag g = inst.to_dag();
  auto first_of = [&](std::size_t i, char c) { return S[i].find(c); };
  for (std::size_t sa = 0; sa < m; ++sa) {
    if (S[sa].empty() || S[sa].front() != 'a') continue;
    for (std::size_t sb = 0; sb < m; ++sb) {
      if (S[sb].empty() || S[sb].back() != 'b') continue;
      if (sa == sb && S[sa].size() < 2) continue;
      // Two strings for a, two for b, all distinct and distinct from sa, sb.
      std::vector<std::size_t> ra, rb;
      for (std::size_t i = 0; i < m; ++i) {
        if (i == sa || i == sb) continue;
        bool ha = first_of(i, 'a') != std::string::npos, hb = first_of(i, 'b') != std::string::npos;
        if (ha && !hb && ra.size() < 2) ra.push_back(i);
        else if (hb && !ha && rb.size() < 2) rb.push_back(i);
      }
      for (std::size_t i = 0; i < m; ++i) {
        if (i == sa || i == sb) continue;
        bool ha = first_of(i, 'a') != std::string::npos, hb = first_of(i, 'b') != std::string::npos;
        if (!(ha && hb)) continue;
        if (ra.size() < 2) ra.push_back(i);
        else if (rb.size() < 2) rb.push_back(i);
      }
      if (ra.size() < 2 || rb.size() < 2) continue;
      std::vector<int> c{inst.vertex(ra[0], first_of(ra[0], 'a')), inst.vertex(ra[1], first_of(ra[1], 'a')),
                         inst.vertex(rb[0], first_of(rb[0], 'b')), inst.vertex(rb[1], first_of(rb[1], 'b'))};
      int va = inst.vertex(sa, 0), vb = inst.vertex(sb, S[sb].size() - 1);
      Set middle(g.size()), before(g.size()), after(g.size());
      for (int v : c) middle.set(v);
      std::vector<bool> in_c(m, false);
      for (auto i : {ra[0], ra[1], rb[0], rb[1]}) in_c[i] = true;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < S[i].size(); ++j) {
          int v = inst.vertex(i, j);
          if (v == va || v == vb || middle[v]) continue;
          bool past = false;
          if (in_c[i])
            for (int u : c)
              if (inst.position(u).first == i && j > inst.position(u).second) past = true;
          (past ? after : before).set(v);
        }
      for (const auto& mid : {std::vector<int>{c[0], c[1], c[2], c[3]}, std::vector<int>{c[0], c[2], c[1], c[3]}}) {
        std::vector<int> order{va};
        for (int v : sort_subset(g, before)) order.push_back(v);
        order.insert(order.end(), mid.begin(), mid.end());
        for (int v : sort_subset(g, after)) order.push_back(v);
        order.push_back(vb);
        if (is_topological_sort(g, order) && lang.accepts(spell(g, order))) return order;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

SolveResult solve_apbp(const ShuffleInstance& inst, const Caps& caps) {
  require_ab(inst, "solve_apbp");
  static const Dfa base = compile_regex("(aa*bb*aa*bb*)*", ab());
  Dfa lang = extend_alphabet(base, base.alphabet().merged(inst.alphabet()));
  const std::string tag = "apbp";
  LabeledDag g = inst.to_dag();
  const auto& S = inst.strings();
  std::vector<std::size_t> nonempty;
  bool starts_a = false, ends_b = false;
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (S[i].empty()) continue;
    nonempty.push_back(i);
    starts_a = starts_a || S[i].front() == 'a';
    ends_b = ends_b || S[i].back() == 'b';
  }
  if (nonempty.empty()) return SolveResult::yes(g, lang, {}, tag);
  if (!starts_a || !ends_b) return SolveResult::no(tag);

  if (rich_antichain(g, 3, "ab")) {
    auto order = apbp_parity(inst, lang);
    if (!order) throw std::logic_error("apbp: parity construction failed on a 3-rich instance");
    return SolveResult::yes(g, lang, std::move(*order), tag);
  }

  std::size_t holders[2] = {0, 0};
  for (auto i : nonempty)
    for (int l = 0; l < 2; ++l) holders[l] += S[i].find("ab"[l]) != std::string::npos;
  int alpha = holders[0] <= 2 ? 0 : (holders[1] <= 2 ? 1 : -1);
  std::optional<std::vector<int>> order;
  if (alpha < 0) {
    // Both letters in at least three strings but no 3-rich antichain: at
    // most five non-empty strings remain.
    if (nonempty.size() > 5) throw std::logic_error("apbp: unexpected instance shape");
    order = search_subset(inst, nonempty, lang, caps);
  } else {
    // Strings made only of the other letter interleave like a single string.
    const char a = "ab"[alpha];
    std::vector<std::size_t> keep, merged;
    for (auto i : nonempty) (S[i].find(a) != std::string::npos ? keep : merged).push_back(i);
    std::vector<std::string> strings;
    for (auto i : keep) strings.push_back(S[i]);
    std::vector<int> merged_vertices;
    if (!merged.empty()) {
      std::string glued;
      for (auto i : merged) {
        glued += S[i];
        for (std::size_t j = 0; j < S[i].size(); ++j) merged_vertices.push_back(inst.vertex(i, j));
      }
      strings.push_back(glued);
    }
    ShuffleInstance sub(inst.alphabet(), strings);
    order = detail::search_chains(sub.to_dag(), detail::string_chains(sub), lang, caps);
    if (order)
      for (int& v : *order) {
        auto [i, j] = sub.position(v);
        v = i < keep.size() ? inst.vertex(keep[i], j) : merged_vertices[j];
      }
  }
  return order ? SolveResult::yes(g, lang, std::move(*order), tag) : SolveResult::no(tag);
}

SolveResult solve_ab_star_btail(const LabeledDag& g) {
  require_ab(g, "solve_ab_star_btail");
  static const Dfa base = compile_regex("(ab)*(\xCE\xB5+b(a+b)*)", ab());
  const std::string tag = "ab-star-btail";
  const std::size_t n = g.size();
  std::vector<int> indeg(n);
  for (std::size_t v = 0; v < n; ++v) indeg[v] = static_cast<int>(g.predecessors(static_cast<int>(v)).size());
  std::vector<bool> done(n, false);
  std::vector<int> order;
  auto take = [&](int v) {
    done[v] = true;
    order.push_back(v);
    for (int w : g.successors(v)) --indeg[w];
  };
  auto available = [&](const char* letter) {
    for (std::size_t v = 0; v < n; ++v)
      if (!done[v] && indeg[v] == 0 && g.label(static_cast<int>(v)) == letter) return static_cast<int>(v);
    return -1;
  };
  auto finish = [&] {
    Set rest(n);
    for (std::size_t v = 0; v < n; ++v)
      if (!done[v]) rest.set(v);
    for (int v : sort_subset(g, rest)) order.push_back(v);
    return SolveResult::yes(g, base, std::move(order), tag);
  };
  for (;;) {
    // State alpha: the word so far is in (ab)*.
    if (int b = available("b"); b >= 0) {
      take(b);
      return finish();
    }
    int pick = -1;
    for (std::size_t v = 0; v < n && pick < 0; ++v) {
      if (done[v] || indeg[v] != 0 || g.label(static_cast<int>(v)) != "a") continue;
      for (int w : g.successors(static_cast<int>(v)))
        if (g.label(w) == "b" && indeg[w] == 1) pick = static_cast<int>(v);
    }
    if (pick < 0) {
      if (order.size() == n) return SolveResult::yes(g, base, std::move(order), tag);
      return SolveResult::no(tag);
    }
    take(pick);
    // State beta: an a is pending.
    int b = available("b");
    if (b < 0) return SolveResult::no(tag);
    take(b);
  }
}

}  // namespace cts
