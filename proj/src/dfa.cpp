#include "cts/dfa.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "cts/errors.hpp"
#include "nfa.hpp"

namespace cts {

Dfa::Dfa(Alphabet alphabet, std::size_t states, std::vector<int> delta, int initial, std::vector<bool> finals)
    : alphabet_(std::move(alphabet)), delta_(std::move(delta)), initial_(initial), finals_(std::move(finals)) {
  if (states == 0) throw PreconditionError("DFA needs at least one state");
  if (finals_.size() != states) throw PreconditionError("DFA final-state vector has wrong length");
  if (delta_.size() != states * alphabet_.size()) throw PreconditionError("DFA transition table has wrong size");
  if (initial < 0 || static_cast<std::size_t>(initial) >= states) throw PreconditionError("DFA initial state out of range");
  for (int t : delta_)
    if (t < 0 || static_cast<std::size_t>(t) >= states) throw PreconditionError("DFA transition target out of range");
}

int Dfa::run(int q, std::string_view word) const {
  for (char c : word) q = step(q, c);
  return q;
}

std::vector<bool> Dfa::live_states() const {
  const std::size_t n = size(), k = alphabet_.size();
  std::vector<std::vector<int>> rev(n);
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t i = 0; i < k; ++i) rev[delta_[q * k + i]].push_back(static_cast<int>(q));
  std::vector<bool> live(finals_);
  std::vector<int> stack;
  for (std::size_t q = 0; q < n; ++q)
    if (live[q]) stack.push_back(static_cast<int>(q));
  while (!stack.empty()) {
    int q = stack.back();
    stack.pop_back();
    for (int p : rev[q])
      if (!live[p]) live[p] = true, stack.push_back(p);
  }
  return live;
}

std::string Dfa::state_name(int q) const {
  return names_.empty() ? std::to_string(q) : names_[q];
}

void Dfa::set_state_names(std::vector<std::string> names) {
  if (!names.empty() && names.size() != size()) throw PreconditionError("state name count mismatch");
  names_ = std::move(names);
}

Dfa Dfa::with_initial(int q) const {
  Dfa d = *this;
  if (q < 0 || static_cast<std::size_t>(q) >= size()) throw PreconditionError("initial state out of range");
  d.initial_ = q;
  return d;
}

bool dfa_accepts(const Dfa& dfa, std::string_view word) { return dfa.accepts(word); }

Dfa minimize(const Dfa& dfa) {
  const std::size_t k = dfa.alphabet().size();
  // Reachable states in BFS order.
  std::vector<int> order{dfa.initial()};
  std::vector<int> seen(dfa.size(), -1);
  seen[dfa.initial()] = 0;
  for (std::size_t h = 0; h < order.size(); ++h)
    for (std::size_t i = 0; i < k; ++i) {
      int t = dfa.next(order[h], i);
      if (seen[t] < 0) seen[t] = static_cast<int>(order.size()), order.push_back(t);
    }
  const std::size_t n = order.size();

  // Moore refinement on the reachable part.
  std::vector<int> cls(n);
  for (std::size_t s = 0; s < n; ++s) cls[s] = dfa.is_final(order[s]) ? 1 : 0;
  std::size_t classes = 0;
  for (;;) {
    std::map<std::vector<int>, int> sig_index;
    std::vector<int> next_cls(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<int> sig{cls[s]};
      for (std::size_t i = 0; i < k; ++i) sig.push_back(cls[seen[dfa.next(order[s], i)]]);
      auto [it, fresh] = sig_index.emplace(std::move(sig), static_cast<int>(sig_index.size()));
      next_cls[s] = it->second;
    }
    bool stable = sig_index.size() == classes;
    classes = sig_index.size();
    cls = std::move(next_cls);
    if (stable) break;
  }

  // Renumber classes in BFS order from the initial class.
  std::vector<int> rep(classes, -1);
  for (std::size_t s = 0; s < n; ++s)
    if (rep[cls[s]] < 0) rep[cls[s]] = static_cast<int>(s);
  std::vector<int> number(classes, -1);
  std::vector<int> queue{cls[0]};
  number[cls[0]] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (std::size_t i = 0; i < k; ++i) {
      int c = cls[seen[dfa.next(order[rep[queue[h]]], i)]];
      if (number[c] < 0) number[c] = static_cast<int>(queue.size()), queue.push_back(c);
    }
  std::vector<int> delta(classes * k);
  std::vector<bool> finals(classes);
  for (std::size_t c = 0; c < classes; ++c) {
    int s = rep[c];
    finals[number[c]] = dfa.is_final(order[s]);
    for (std::size_t i = 0; i < k; ++i) delta[number[c] * k + i] = number[cls[seen[dfa.next(order[s], i)]]];
  }
  return Dfa(dfa.alphabet(), classes, std::move(delta), 0, std::move(finals));
}

bool equivalent(const Dfa& a, const Dfa& b) {
  if (!(a.alphabet() == b.alphabet())) return false;
  Dfa ma = minimize(a), mb = minimize(b);
  return ma.size() == mb.size() && ma.table() == mb.table() && ma.finals() == mb.finals();
}

bool is_empty_language(const Dfa& dfa) { return !dfa.live_states()[dfa.initial()]; }

namespace {

template <class Combine>
Dfa product(const Dfa& a, const Dfa& b, Combine combine) {
  if (!(a.alphabet() == b.alphabet())) throw PreconditionError("product of DFAs over different alphabets");
  const std::size_t k = a.alphabet().size(), nb = b.size();
  const std::size_t n = a.size() * nb;
  std::vector<int> delta(n * k);
  std::vector<bool> finals(n);
  for (std::size_t p = 0; p < a.size(); ++p)
    for (std::size_t q = 0; q < nb; ++q) {
      std::size_t s = p * nb + q;
      finals[s] = combine(a.is_final(static_cast<int>(p)), b.is_final(static_cast<int>(q)));
      for (std::size_t i = 0; i < k; ++i)
        delta[s * k + i] = static_cast<int>(a.next(static_cast<int>(p), i) * nb + b.next(static_cast<int>(q), i));
    }
  return minimize(Dfa(a.alphabet(), n, std::move(delta), static_cast<int>(a.initial() * nb + b.initial()), std::move(finals)));
}

}  // namespace

Dfa dfa_union(const Dfa& a, const Dfa& b) {
  return product(a, b, [](bool x, bool y) { return x || y; });
}

Dfa dfa_intersection(const Dfa& a, const Dfa& b) {
  return product(a, b, [](bool x, bool y) { return x && y; });
}

Dfa dfa_complement(const Dfa& a) {
  std::vector<bool> finals(a.size());
  for (std::size_t q = 0; q < a.size(); ++q) finals[q] = !a.is_final(static_cast<int>(q));
  return minimize(Dfa(a.alphabet(), a.size(), a.table(), a.initial(), std::move(finals)));
}

Dfa extend_alphabet(const Dfa& dfa, const Alphabet& alphabet) {
  for (char c : dfa.alphabet().symbols())
    if (!alphabet.contains(c)) throw PreconditionError(std::string("extend_alphabet drops symbol '") + c + "'");
  const std::size_t n = dfa.size() + 1, k = alphabet.size();
  const int sink = static_cast<int>(dfa.size());
  std::vector<int> delta(n * k, sink);
  std::vector<bool> finals(n, false);
  for (std::size_t q = 0; q < dfa.size(); ++q) {
    finals[q] = dfa.is_final(static_cast<int>(q));
    for (std::size_t i = 0; i < k; ++i) {
      int j = dfa.alphabet().index(alphabet.symbol(i));
      if (j >= 0) delta[q * k + i] = dfa.next(static_cast<int>(q), static_cast<std::size_t>(j));
    }
  }
  return minimize(Dfa(alphabet, n, std::move(delta), dfa.initial(), std::move(finals)));
}

Dfa left_quotient(const Dfa& dfa, std::string_view u) {
  return minimize(dfa.with_initial(dfa.run(dfa.initial(), u)));
}

namespace detail {

Dfa Nfa::determinize(const Alphabet& alphabet) const {
  const std::size_t k = alphabet.size();
  auto closure = [&](std::vector<int> set) {
    std::vector<bool> in(states.size(), false);
    for (int s : set) in[s] = true;
    for (std::size_t h = 0; h < set.size(); ++h)
      for (int t : states[set[h]].eps)
        if (!in[t]) in[t] = true, set.push_back(t);
    std::sort(set.begin(), set.end());
    return set;
  };
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> subsets;
  auto intern = [&](std::vector<int> set) {
    auto [it, fresh] = index.emplace(set, static_cast<int>(subsets.size()));
    if (fresh) subsets.push_back(std::move(set));
    return it->second;
  };
  intern(closure({start}));
  std::vector<int> delta;
  for (std::size_t h = 0; h < subsets.size(); ++h) {
    std::vector<std::vector<int>> targets(k);
    for (int s : subsets[h])
      for (auto [sym, t] : states[s].moves) targets[sym].push_back(t);
    for (std::size_t i = 0; i < k; ++i) delta.push_back(intern(closure(std::move(targets[i]))));
  }
  std::vector<bool> finals(subsets.size(), false);
  for (std::size_t h = 0; h < subsets.size(); ++h)
    for (int s : subsets[h])
      if (states[s].accepting) finals[h] = true;
  return minimize(Dfa(alphabet, subsets.size(), std::move(delta), 0, std::move(finals)));
}

}  // namespace detail

}  // namespace cts
