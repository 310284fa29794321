#include "cts/monoid.hpp"

#include <algorithm>
#include <numeric>

#include <boost/functional/hash.hpp>

#include "cts/errors.hpp"

namespace cts {

std::size_t TransformationHash::operator()(const Transformation& t) const noexcept {
  return boost::hash_range(t.begin(), t.end());
}

int TransitionMonoid::index_of(const Transformation& t) const {
  auto it = lookup_.find(t);
  return it == lookup_.end() ? -1 : it->second;
}

int TransitionMonoid::compose(int x, int y) const {
  const auto& fx = elements_[x];
  const auto& fy = elements_[y];
  Transformation t(states_);
  for (std::size_t q = 0; q < states_; ++q) t[q] = fy[fx[q]];
  return lookup_.at(t);
}

int TransitionMonoid::multiply(int x, int y) const {
  return table_.empty() ? compose(x, y) : table_[static_cast<std::size_t>(x) * size() + y];
}

int TransitionMonoid::power(int x, std::uint64_t k) const {
  int result = identity_, base = x;
  while (k) {
    if (k & 1) result = multiply(result, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return result;
}

int TransitionMonoid::of_word(std::string_view word) const {
  int x = identity_;
  for (char c : word) x = multiply(x, generators_[alphabet_.require(c)]);
  return x;
}

bool TransitionMonoid::is_group() const {
  for (const auto& t : elements_) {
    std::vector<bool> hit(states_, false);
    for (auto v : t) hit[v] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) return false;
  }
  return true;
}

TransitionMonoid transition_monoid(const Semiautomaton& sa, const Caps& caps) {
  if (sa.size() > caps.monoid_states) throw CapExceeded("monoid_states", caps.monoid_states);
  const std::size_t n = sa.size(), k = sa.alphabet().size();

  // Breadth-first closure under right multiplication by generators.
  std::vector<Transformation> found;
  std::vector<std::string> words;
  std::unordered_map<Transformation, int, TransformationHash> seen;
  Transformation id(n);
  std::iota(id.begin(), id.end(), 0);
  found.push_back(id);
  words.emplace_back();
  seen.emplace(id, 0);
  for (std::size_t h = 0; h < found.size(); ++h)
    for (std::size_t a = 0; a < k; ++a) {
      Transformation t(n);
      for (std::size_t q = 0; q < n; ++q) t[q] = static_cast<std::uint16_t>(sa.next(found[h][q], a));
      if (seen.count(t)) continue;
      if (found.size() >= caps.monoid_elements) throw CapExceeded("monoid_elements", caps.monoid_elements);
      seen.emplace(t, static_cast<int>(found.size()));
      found.push_back(std::move(t));
      words.push_back(words[h] + sa.alphabet().symbol(a));
    }

  // Sort lexicographically and reindex.
  std::vector<int> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return found[a] < found[b]; });
  TransitionMonoid m;
  m.alphabet_ = sa.alphabet();
  m.states_ = n;
  for (int old : order) {
    m.lookup_.emplace(found[old], static_cast<int>(m.elements_.size()));
    m.elements_.push_back(found[old]);
    m.words_.push_back(words[old]);
  }
  m.identity_ = m.lookup_.at(id);
  for (std::size_t a = 0; a < k; ++a) {
    Transformation t(n);
    for (std::size_t q = 0; q < n; ++q) t[q] = static_cast<std::uint16_t>(sa.next(static_cast<int>(q), a));
    m.generators_.push_back(m.lookup_.at(t));
  }
  const std::size_t size = m.elements_.size();
  if (size <= TransitionMonoid::kTableLimit) {
    std::vector<int> table(size * size);
    for (std::size_t x = 0; x < size; ++x)
      for (std::size_t y = 0; y < size; ++y) table[x * size + y] = m.compose(static_cast<int>(x), static_cast<int>(y));
    m.table_ = std::move(table);
  }

  // Index and period of every element; omega is the least multiple of the
  // common period that is at least every index.
  std::uint64_t period_lcm = 1, max_index = 1;
  m.idempotent_.resize(size);
  std::unordered_map<int, std::uint64_t> first_seen;
  for (std::size_t x = 0; x < size; ++x) {
    first_seen.clear();
    std::vector<int> powers{-1};  // powers[i] = x^i for i >= 1
    int cur = static_cast<int>(x);
    std::uint64_t i = 1;
    while (!first_seen.count(cur)) {
      first_seen.emplace(cur, i);
      powers.push_back(cur);
      cur = m.multiply(cur, static_cast<int>(x));
      ++i;
    }
    std::uint64_t index = first_seen[cur], period = i - index;
    std::uint64_t kx = ((index + period - 1) / period) * period;
    m.idempotent_[x] = powers[kx < powers.size() ? kx : index + (kx - index) % period];
    period_lcm = std::lcm(period_lcm, period);
    if (period_lcm > (1ull << 40)) throw CapExceeded("monoid_elements", caps.monoid_elements, "omega overflow");
    max_index = std::max(max_index, index);
  }
  m.omega_ = ((max_index + period_lcm - 1) / period_lcm) * period_lcm;
  return m;
}

TransitionMonoid syntactic_monoid(const Dfa& dfa, const Caps& caps) {
  return transition_monoid(Semiautomaton::of(minimize(dfa)), caps);
}

namespace {

template <class Pred>
std::optional<EquationWitness> first_pair(const TransitionMonoid& m, Pred holds) {
  const int n = static_cast<int>(m.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!holds(x, y)) return EquationWitness{x, y};
  return std::nullopt;
}

}  // namespace

std::optional<EquationWitness> aperiodic_violation(const TransitionMonoid& m) {
  for (int x = 0; x < static_cast<int>(m.size()); ++x) {
    int e = m.idempotent_power(x);
    if (m.multiply(e, x) != e) return EquationWitness{x, x};
  }
  return std::nullopt;
}

std::optional<EquationWitness> da_violation(const TransitionMonoid& m) {
  return first_pair(m, [&](int x, int y) {
    int e = m.idempotent_power(m.multiply(x, y));
    return m.multiply(m.multiply(e, x), e) == e;
  });
}

std::optional<EquationWitness> do_violation(const TransitionMonoid& m) {
  return first_pair(m, [&](int x, int y) {
    int e = m.idempotent_power(m.multiply(x, y));
    int f = m.idempotent_power(m.multiply(y, x));
    return m.multiply(m.multiply(e, f), e) == e;
  });
}

std::optional<EquationWitness> ds_violation(const TransitionMonoid& m) {
  return first_pair(m, [&](int x, int y) {
    int e = m.idempotent_power(m.multiply(x, y));
    int f = m.idempotent_power(m.multiply(y, x));
    return m.idempotent_power(m.multiply(m.multiply(e, f), e)) == e;
  });
}

std::string to_string(Complexity c) {
  switch (c) {
    case Complexity::NL: return "NL";
    case Complexity::NPComplete: return "NP-complete";
    case Complexity::Unknown: return "unknown";
  }
  return "unknown";
}

ClassificationReport classify(const Semiautomaton& sa, const Caps& caps) {
  TransitionMonoid m = transition_monoid(sa, caps);
  ClassificationReport r;
  r.monoid_size = m.size();
  r.omega = m.omega();
  r.group = m.is_group();
  auto ap = aperiodic_violation(m);
  auto da = da_violation(m);
  auto dO = do_violation(m);
  auto ds = ds_violation(m);
  r.aperiodic = !ap;
  r.da = !da;
  r.do_ = !dO;
  r.ds = !ds;
  if (r.aperiodic && r.da) {
    r.cts = r.csh = Complexity::NL;
  } else if (r.aperiodic) {
    r.cts = r.csh = Complexity::NPComplete;
    r.witness_equation = "DA";
    r.witness = da;
  } else if (r.do_) {
    r.cts = Complexity::Unknown;
    r.csh = Complexity::NL;
  } else if (!r.ds) {
    // CSh is the special case of CTS on disjoint strings, so hardness carries over.
    r.cts = r.csh = Complexity::NPComplete;
    r.witness_equation = "DS";
    r.witness = ds;
  } else {
    r.cts = r.csh = Complexity::Unknown;
    r.witness_equation = "DO";
    r.witness = dO;
  }
  if (r.witness) r.witness_words = std::make_pair(m.representative(r.witness->first), m.representative(r.witness->second));
  return r;
}

}  // namespace cts
