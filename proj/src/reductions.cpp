#include "cts/reductions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "cts/errors.hpp"

namespace cts {

std::string filter_ab_from_power(std::size_t B, std::size_t n) {
  if (B == 0) throw PreconditionError("B must be positive");
  if (n % (2 * B) != 0) return std::string(n + 1, 'a');
  std::string block = std::string(B, 'b') + std::string(B, 'a') + "ab", out;
  for (std::size_t i = 0; i < n / (2 * B); ++i) out += block;
  return out;
}

std::string filter_ustar_from_ab(const std::string& u, std::size_t n) {
  if (u.find('a') == std::string::npos || u.find('b') == std::string::npos)
    throw PreconditionError("u must contain both a and b");
  if (n % 2 == 1) return std::string(n * u.size() + 1, 'a');
  // Rotate so that u' = yx starts and ends with different letters.
  std::size_t split = 1;
  while (u[split - 1] == u[split]) ++split;
  std::string x = u.substr(0, split), y = u.substr(split), up = y + x;
  auto drop_first = [&](char c) {
    std::string w = up;
    w.erase(w.find(c), 1);
    return w;
  };
  std::string block = up + drop_first('a') + up + drop_first('b') + up, out = x;
  for (std::size_t i = 0; i < n / 2; ++i) out += block;
  return out + y;
}

std::string filter_aabb_from_ab(std::size_t n) {
  std::size_t reps = n % 2 == 0 ? n / 2 : n + 1;
  std::string out;
  for (std::size_t i = 0; i < reps; ++i) out += "ab";
  return out;
}

FilterSequence ab_filter(std::size_t B) {
  if (B == 0) throw PreconditionError("B must be positive");
  return {"ab-filter", "(" + std::string(B, 'a') + std::string(B, 'b') + ")*", "(ab)*", Alphabet("ab"),
          [B](std::size_t n) { return filter_ab_from_power(B, n); }};
}

FilterSequence ustar_filter(const std::string& u) {
  filter_ustar_from_ab(u, 0);  // validates u
  std::string symbols = "ab";
  for (char c : u)
    if (symbols.find(c) == std::string::npos) symbols += c;
  return {"ustar-filter", "(ab)*", "(" + u + ")*", Alphabet(symbols),
          [u](std::size_t n) { return filter_ustar_from_ab(u, n); }};
}

FilterSequence aabb_filter() {
  return {"aabb-filter", "(ab)*", "(aa+bb)*", Alphabet("ab"), [](std::size_t n) { return filter_aabb_from_ab(n); }};
}

ShuffleInstance shuffle_reduce(const ShuffleInstance& inst, const std::string& f) {
  auto strings = inst.strings();
  strings.push_back(f);
  Alphabet a = inst.alphabet();
  for (char c : f)
    if (!a.contains(c)) a = a.merged(Alphabet(std::string(1, c)));
  return ShuffleInstance(a, std::move(strings));
}

LabeledDag shuffle_reduce(const LabeledDag& g, const std::string& f) {
  auto labels = g.labels();
  auto edges = g.edges();
  auto ids = g.ids();
  long long next = ids.empty() ? 1 : *std::max_element(ids.begin(), ids.end()) + 1;
  Alphabet a = g.alphabet();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!a.contains(f[i])) a = a.merged(Alphabet(std::string(1, f[i])));
    int v = static_cast<int>(labels.size());
    labels.emplace_back(1, f[i]);
    ids.push_back(next++);
    if (i > 0) edges.emplace_back(v - 1, v);
  }
  return LabeledDag(a, std::move(labels), std::move(edges), std::move(ids));
}

ShuffleInstance shuffle_reduce(const ShuffleInstance& inst, const FilterSequence& fs) {
  return shuffle_reduce(inst, fs.word(inst.total_length()));
}

LabeledDag shuffle_reduce(const LabeledDag& g, const FilterSequence& fs) {
  if (!g.single_letter()) throw PreconditionError("shuffle_reduce needs single-letter labels");
  return shuffle_reduce(g, fs.word(g.size()));
}

HardInstance gen_unary3partition(const std::vector<std::size_t>& E, std::size_t B) {
  if (E.size() % 3 != 0) throw PreconditionError("UNARY-3-PARTITION needs 3m integers");
  std::size_t m = E.size() / 3;
  if (std::accumulate(E.begin(), E.end(), std::size_t{0}) != m * B)
    throw PreconditionError("integers must sum to m*B");
  std::vector<std::string> strings;
  for (std::size_t e : E) {
    if (!(4 * e > B && 2 * e < B)) throw PreconditionError("every integer must lie strictly between B/4 and B/2");
    strings.push_back(std::string(e, 'a') + std::string(e, 'b'));
  }
  return {ShuffleInstance(Alphabet("ab"), std::move(strings)),
          "(" + std::string(B, 'a') + std::string(B, 'b') + ")*"};
}

bool three_partition_exists(const std::vector<std::size_t>& E, std::size_t B) {
  if (E.size() % 3 != 0) return false;
  std::vector<std::size_t> items = E;
  std::sort(items.rbegin(), items.rend());
  std::vector<bool> used(items.size(), false);
  // Always place the largest unused item first, so each triple is found once.
  std::function<bool()> go = [&]() {
    auto first = std::find(used.begin(), used.end(), false);
    if (first == used.end()) return true;
    std::size_t i = static_cast<std::size_t>(first - used.begin());
    used[i] = true;
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      for (std::size_t k = j + 1; k < items.size(); ++k)
        if (!used[k] && items[i] + items[j] + items[k] == B) {
          used[k] = true;
          if (go()) return true;
          used[k] = false;
        }
      used[j] = false;
    }
    used[i] = false;
    return false;
  };
  return go();
}

HardInstance gen_tagged_shuffle(const std::string& w, const std::vector<std::string>& U) {
  auto check = [](const std::string& s) {
    if (s.find_first_not_of("ab") != std::string::npos) throw PreconditionError("shuffle words must be over {a,b}");
  };
  check(w);
  std::vector<std::string> strings{w};
  for (const auto& u : U) {
    check(u);
    std::string t = u;
    for (char& c : t) c = c == 'a' ? 'A' : 'B';
    strings.push_back(t);
  }
  return {ShuffleInstance(Alphabet("abAB"), std::move(strings)), "(aA+bB)*"};
}

std::optional<Instance> reduce_abb(const Instance& inst) {
  std::size_t na = 0, nb = 0;
  const LabeledDag g = as_dag(inst);
  for (const auto& label : g.labels())
    for (char c : label) {
      if (c == 'a') ++na;
      else if (c == 'b') ++nb;
      else throw PreconditionError("reduce_abb needs the alphabet {a,b}");
    }
  if (na != nb) return std::nullopt;
  return inst;
}

LabeledDag quotient_reduce(const LabeledDag& g, const std::string& u) {
  const int n = static_cast<int>(g.size());
  auto labels = g.labels();
  auto edges = g.edges();
  auto ids = g.ids();
  long long next = ids.empty() ? 1 : *std::max_element(ids.begin(), ids.end()) + 1;
  Alphabet a = g.alphabet();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!a.contains(u[i])) a = a.merged(Alphabet(std::string(1, u[i])));
    int v = static_cast<int>(labels.size());
    labels.emplace_back(1, u[i]);
    ids.push_back(next++);
    if (i > 0) edges.emplace_back(v - 1, v);
    for (int w = 0; w < n; ++w) edges.emplace_back(v, w);
  }
  return LabeledDag(a, std::move(labels), std::move(edges), std::move(ids));
}

}  // namespace cts
