#include "cts/group.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

#include "cts/errors.hpp"

namespace cts {

GroupPresentation::GroupPresentation(Alphabet alphabet, std::vector<std::vector<int>> table, std::vector<int> mu,
                                     std::vector<int> accepting)
    : alphabet_(std::move(alphabet)), table_(std::move(table)), mu_(std::move(mu)) {
  const std::size_t n = table_.size();
  if (n == 0) throw PreconditionError("group table is empty");
  if (n > 64) throw CapExceeded("group_order", 64);
  for (const auto& row : table_) {
    if (row.size() != n) throw PreconditionError("group table is not square");
    std::vector<bool> hit(n, false);
    for (int x : row) {
      if (x < 0 || static_cast<std::size_t>(x) >= n) throw PreconditionError("group table entry out of range");
      hit[x] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) throw PreconditionError("group table row is not a permutation");
  }
  identity_ = -1;
  for (std::size_t e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = table_[e][x] == static_cast<int>(x) && table_[x][e] == static_cast<int>(x);
    if (ok) identity_ = static_cast<int>(e);
  }
  if (identity_ < 0) throw PreconditionError("group table has no identity");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (table_[table_[x][y]][z] != table_[x][table_[y][z]]) throw PreconditionError("group table is not associative");
  inverse_.assign(n, -1);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (table_[x][y] == identity_) inverse_[x] = static_cast<int>(y);
  if (mu_.size() != alphabet_.size()) throw PreconditionError("mu must map every alphabet symbol");
  for (int g : mu_)
    if (g < 0 || static_cast<std::size_t>(g) >= n) throw PreconditionError("mu image out of range");
  accepting_.assign(n, false);
  for (int g : accepting) {
    if (g < 0 || static_cast<std::size_t>(g) >= n) throw PreconditionError("accepting element out of range");
    accepting_[g] = true;
  }
}

int GroupPresentation::power(int x, std::uint64_t k) const {
  int r = identity_;
  while (k) {
    if (k & 1) r = multiply(r, x);
    x = multiply(x, x);
    k >>= 1;
  }
  return r;
}

std::size_t GroupPresentation::element_order(int x) const {
  std::size_t k = 1;
  for (int y = x; y != identity_; y = multiply(y, x)) ++k;
  return k;
}

int GroupPresentation::evaluate(std::string_view word) const {
  int h = identity_;
  for (char c : word) h = multiply(h, mu_of(c));
  return h;
}

std::vector<int> GroupPresentation::accepting() const {
  std::vector<int> out;
  for (std::size_t x = 0; x < order(); ++x)
    if (accepting_[x]) out.push_back(static_cast<int>(x));
  return out;
}

std::vector<bool> GroupPresentation::generated(std::string_view letters) const {
  std::vector<int> gens;
  for (char c : letters) gens.push_back(mu_of(c));
  std::vector<bool> in(order(), false);
  std::vector<int> stack{identity_};
  in[identity_] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int g : gens) {
      int y = multiply(x, g);
      if (!in[y]) in[y] = true, stack.push_back(y);
    }
  }
  return in;
}

bool GroupPresentation::is_surjective() const {
  auto in = generated(alphabet_.symbols());
  return std::find(in.begin(), in.end(), false) == in.end();
}

Dfa GroupPresentation::to_dfa() const {
  const std::size_t n = order(), k = alphabet_.size();
  std::vector<int> delta(n * k);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 0; a < k; ++a) delta[x * k + a] = multiply(static_cast<int>(x), mu_[a]);
  return minimize(Dfa(alphabet_, n, std::move(delta), identity_, accepting_));
}

GroupPresentation GroupPresentation::restricted(const Alphabet& sub) const {
  std::vector<int> mu;
  for (char c : sub.symbols()) mu.push_back(mu_of(c));
  return GroupPresentation(sub, table_, std::move(mu), accepting());
}

GroupPresentation GroupPresentation::with_accepting(std::vector<int> accepting) const {
  return GroupPresentation(alphabet_, table_, mu_, std::move(accepting));
}

GroupPresentation GroupPresentation::cyclic(std::size_t n, std::string_view letters, std::vector<int> accepting) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) table[x][y] = static_cast<int>((x + y) % n);
  return GroupPresentation(Alphabet(letters), std::move(table), std::vector<int>(letters.size(), n > 1 ? 1 : 0),
                           std::move(accepting));
}

GroupPresentation GroupPresentation::symmetric3(std::string_view letters, std::vector<int> mu, std::vector<int> accepting) {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  // x*y applies x first, then y.
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) {
      std::array<int, 3> r{};
      for (int i = 0; i < 3; ++i) r[i] = perms[y][perms[x][i]];
      table[x][y] = static_cast<int>(std::find(perms.begin(), perms.end(), r) - perms.begin());
    }
  return GroupPresentation(Alphabet(letters), std::move(table), std::move(mu), std::move(accepting));
}

namespace {

ElementSet bit(int x) { return ElementSet{1} << x; }

ElementSet shift(const GroupPresentation& gp, ElementSet s, int g) {
  ElementSet out = 0;
  while (s) {
    int x = std::countr_zero(s);
    s &= s - 1;
    out |= bit(gp.multiply(x, g));
  }
  return out;
}

// Reachable sets on a box, with coordinates beyond a threshold folded back by
// the order of the letter's image. For a saturated coordinate b with
// threshold t_b and period o_b the box stops at t_b + o_b - 1, and folding is
// exact once F(x) = F(x + o_b e_b) for every box vector with x_b = t_b - 1:
// then the folded function satisfies the defining recurrence everywhere.
class SaturatedTable {
public:
  SaturatedTable(const GroupPresentation& gp, const std::vector<std::size_t>& p) : gp_(gp), p_(p) {
    const std::size_t k = p.size(), h = gp.order();
    if (k != gp.alphabet().size()) throw PreconditionError("Parikh vector length differs from the alphabet size");
    period_.resize(k);
    threshold_.resize(k);
    for (std::size_t a = 0; a < k; ++a) {
      period_[a] = gp.element_order(gp.mu(a));
      threshold_[a] = std::max<std::size_t>(1, h * period_[a]);
    }
    for (;;) {
      build();
      std::vector<std::size_t> bad = failing_coordinates();
      if (bad.empty()) break;
      for (auto a : bad) threshold_[a] *= 2;
    }
  }

  // Folded coordinates of a vector below p.
  std::vector<std::size_t> fold(const std::vector<std::size_t>& x) const {
    std::vector<std::size_t> r(x);
    for (std::size_t a = 0; a < r.size(); ++a)
      if (saturated(a) && r[a] >= threshold_[a] + period_[a])
        r[a] = threshold_[a] + (r[a] - threshold_[a]) % period_[a];
    return r;
  }
  ElementSet at(const std::vector<std::size_t>& folded) const { return table_[index(folded)]; }
  ElementSet value() const { return at(fold(p_)); }

  std::optional<std::string> realize(int target) const {
    std::vector<std::size_t> x = fold(p_);
    if (!(at(x) & bit(target))) return std::nullopt;
    std::string rev;
    int h = target;
    while (std::any_of(x.begin(), x.end(), [](std::size_t c) { return c > 0; })) {
      bool moved = false;
      for (std::size_t a = 0; a < x.size() && !moved; ++a) {
        if (!x[a]) continue;
        int prev = gp_.multiply(h, gp_.inverse(gp_.mu(a)));
        --x[a];
        if (at(x) & bit(prev)) {
          rev.push_back(gp_.alphabet().symbol(a));
          h = prev;
          moved = true;
        } else {
          ++x[a];
        }
      }
      if (!moved) throw std::logic_error("reachable-set table is inconsistent");
    }
    std::string word(rev.rbegin(), rev.rend());
    // Folded-away letters come in blocks of the letter's order.
    std::vector<std::size_t> f = fold(p_);
    for (std::size_t a = 0; a < p_.size(); ++a) word.append(p_[a] - f[a], gp_.alphabet().symbol(a));
    return word;
  }

private:
  const GroupPresentation& gp_;
  std::vector<std::size_t> p_, period_, threshold_, dims_, stride_;
  std::vector<ElementSet> table_;

  bool saturated(std::size_t a) const { return p_[a] >= threshold_[a] + period_[a]; }

  std::size_t index(const std::vector<std::size_t>& x) const {
    std::size_t i = 0;
    for (std::size_t a = 0; a < x.size(); ++a) i += x[a] * stride_[a];
    return i;
  }

  void build() {
    const std::size_t k = p_.size();
    dims_.assign(k, 0);
    stride_.assign(k, 0);
    std::size_t cells = 1;
    for (std::size_t a = k; a-- > 0;) {
      dims_[a] = (saturated(a) ? threshold_[a] + period_[a] - 1 : p_[a]) + 1;
      stride_[a] = cells;
      cells *= dims_[a];
      if (cells > 50000000) throw CapExceeded("dp_states", 50000000, "reachable_set box");
    }
    table_.assign(cells, 0);
    std::vector<std::size_t> x(k, 0);
    for (std::size_t c = 0; c < cells; ++c) {
      std::size_t rem = c;
      for (std::size_t a = 0; a < k; ++a) x[a] = rem / stride_[a], rem %= stride_[a];
      if (c == 0) {
        table_[0] = bit(gp_.identity());
        continue;
      }
      ElementSet s = 0;
      for (std::size_t a = 0; a < k; ++a)
        if (x[a]) s |= shift(gp_, table_[c - stride_[a]], gp_.mu(a));
      table_[c] = s;
    }
  }

  std::vector<std::size_t> failing_coordinates() const {
    std::vector<std::size_t> bad;
    const std::size_t k = p_.size();
    for (std::size_t b = 0; b < k; ++b) {
      if (!saturated(b)) continue;
      bool ok = true;
      for (std::size_t c = 0; c < table_.size() && ok; ++c) {
        if ((c / stride_[b]) % dims_[b] != threshold_[b] - 1) continue;
        ok = table_[c] == table_[c + period_[b] * stride_[b]];
      }
      if (!ok) bad.push_back(b);
    }
    return bad;
  }
};

}  // namespace

ElementSet reachable_set(const GroupPresentation& gp, const std::vector<std::size_t>& p) {
  return SaturatedTable(gp, p).value();
}

std::optional<std::string> realize_element(const GroupPresentation& gp, const std::vector<std::size_t>& p, int h) {
  return SaturatedTable(gp, p).realize(h);
}

std::vector<std::optional<std::string>> shortest_words(const GroupPresentation& gp) {
  std::vector<std::optional<std::string>> words(gp.order());
  words[gp.identity()] = std::string();
  std::vector<int> queue{gp.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t a = 0; a < gp.alphabet().size(); ++a) {
      int y = gp.multiply(queue[i], gp.mu(a));
      if (!words[y]) {
        words[y] = *words[queue[i]] + gp.alphabet().symbol(a);
        queue.push_back(y);
      }
    }
  return words;
}

std::vector<std::size_t> insertion_compress(const std::vector<std::string>& words,
                                            const std::vector<std::string>& insertions, const GroupPresentation& gp) {
  if (insertions.size() != words.size() + 1) throw PreconditionError("need exactly one more insertion than words");
  // Current words u_1..u_m (0-based here) and the original index of the
  // insertion that precedes each position: ins[i] sits before u_i, ins[m] last.
  std::vector<int> u;
  for (const auto& w : words) u.push_back(gp.evaluate(w));
  std::vector<int> ins_value;
  for (const auto& w : insertions) ins_value.push_back(gp.evaluate(w));
  std::vector<std::size_t> ins(insertions.size());
  for (std::size_t i = 0; i < ins.size(); ++i) ins[i] = i;

  for (;;) {
    const std::size_t m = u.size();
    // color(i, j), i < j, over words i..j-1 and the insertions after each.
    struct Color {
      int g, g1, g2;
      bool operator==(const Color&) const = default;
    };
    std::vector<std::vector<Color>> color(m, std::vector<Color>(m + 1));
    for (std::size_t i = 0; i < m; ++i) {
      Color c{gp.identity(), gp.identity(), gp.identity()};
      for (std::size_t j = i + 1; j <= m; ++j) {
        int w = u[j - 1], after = ins_value[ins[j]];
        c = {gp.multiply(c.g, w), gp.multiply(gp.multiply(c.g1, w), after), gp.multiply(c.g2, after)};
        color[i][j] = c;
      }
    }
    bool spliced = false;
    for (std::size_t l = 0; l < m && !spliced; ++l)
      for (std::size_t mid = l + 1; mid < m && !spliced; ++mid)
        for (std::size_t r = mid + 1; r < m && !spliced; ++r) {
          if (!(color[l][mid] == color[mid][r] && color[l][mid] == color[l][r])) continue;
          // Merge u_l .. u_r and drop the insertions between them.
          int merged = gp.identity();
          for (std::size_t t = l; t <= r; ++t) merged = gp.multiply(merged, u[t]);
          u.erase(u.begin() + static_cast<long>(l) + 1, u.begin() + static_cast<long>(r) + 1);
          u[l] = merged;
          ins.erase(ins.begin() + static_cast<long>(l) + 1, ins.begin() + static_cast<long>(r) + 1);
          spliced = true;
        }
    if (!spliced) break;
  }
  return ins;
}

namespace {

// Segmented realization on prefixes len[i] of the strings of freq.
class SegmentBuilder {
public:
  SegmentBuilder(const ShuffleInstance& freq, const GroupPresentation& gp) : freq_(freq), gp_(gp) {
    words_ = shortest_words(gp);
  }

  std::vector<std::vector<int>> run(std::vector<std::size_t> len, const std::vector<int>& targets) {
    std::vector<std::vector<int>> segments(targets.size());
    for (std::size_t k = targets.size(); k > 0; --k) {
      std::vector<int> c = antichain(len);
      std::vector<int> before, after;
      for (std::size_t i = 0; i < len.size(); ++i) {
        std::size_t ci = c[i] < 0 ? len[i] : static_cast<std::size_t>(c[i]);
        for (std::size_t j = 0; j < ci; ++j) before.push_back(freq_.vertex(i, j));
        if (c[i] >= 0)
          for (std::size_t j = ci + 1; j < len[i]; ++j) after.push_back(freq_.vertex(i, j));
      }
      int mu_after = value(after);
      if (k == 1) {
        // Order the antichain so that the whole prefix evaluates to targets[0].
        int mu_before = value(before);
        int want = gp_.multiply(gp_.multiply(gp_.inverse(mu_before), targets[0]), gp_.inverse(mu_after));
        std::vector<std::size_t> p(gp_.alphabet().size(), 0);
        for (std::size_t i = 0; i < len.size(); ++i)
          if (c[i] >= 0) ++p[gp_.alphabet().index(letter(i, static_cast<std::size_t>(c[i])))];
        auto word = realize_element(gp_, p, want);
        if (!word) throw PreconditionError("antichain too poor to realize the first segment");
        auto order = place(*word, c, len.size());
        segments[0] = before;
        segments[0].insert(segments[0].end(), order.begin(), order.end());
        segments[0].insert(segments[0].end(), after.begin(), after.end());
        break;
      }
      int g = gp_.multiply(targets[k - 1], gp_.inverse(mu_after));
      const std::string& u = *words_[g];
      std::vector<int> chosen = place(u, c, len.size());  // may throw
      segments[k - 1] = chosen;
      segments[k - 1].insert(segments[k - 1].end(), after.begin(), after.end());
      std::vector<bool> used(len.size(), false);
      for (int v : chosen) used[freq_.position(v).first] = true;
      for (std::size_t i = 0; i < len.size(); ++i)
        if (c[i] >= 0) len[i] = used[i] ? static_cast<std::size_t>(c[i]) : static_cast<std::size_t>(c[i]) + 1;
    }
    return segments;
  }

private:
  const ShuffleInstance& freq_;
  const GroupPresentation& gp_;
  std::vector<std::optional<std::string>> words_;

  char letter(std::size_t i, std::size_t j) const { return freq_.strings()[i][j]; }

  int value(const std::vector<int>& vertices) const {
    int h = gp_.identity();
    for (int v : vertices) {
      auto [i, j] = freq_.position(v);
      h = gp_.multiply(h, gp_.mu_of(letter(i, j)));
    }
    return h;
  }

  // Maximal antichain on the prefixes (one position per non-empty prefix,
  // -1 for empty ones), as rich as possible in the letters present.
  std::vector<int> antichain(const std::vector<std::size_t>& len) const {
    std::vector<std::string> prefixes;
    std::string letters;
    for (std::size_t i = 0; i < len.size(); ++i) {
      prefixes.push_back(freq_.strings()[i].substr(0, len[i]));
      for (char ch : prefixes.back())
        if (letters.find(ch) == std::string::npos) letters += ch;
    }
    std::sort(letters.begin(), letters.end(), [&](char x, char y) {
      return gp_.alphabet().index(x) < gp_.alphabet().index(y);
    });
    ShuffleInstance pre(freq_.alphabet(), prefixes);
    LabeledDag dag = pre.to_dag();
    std::vector<int> best;
    std::size_t lo = 0, hi = len.size();
    while (lo < hi) {  // largest n with an n-rich antichain
      std::size_t mid = (lo + hi + 1) / 2;
      if (auto ac = rich_antichain(dag, mid, letters)) {
        lo = mid;
        best = *ac;
      } else {
        hi = mid - 1;
      }
    }
    std::vector<int> c(len.size(), -1);
    for (int v : best) {
      auto [i, j] = pre.position(v);
      c[i] = static_cast<int>(j);
    }
    for (std::size_t i = 0; i < len.size(); ++i)
      if (c[i] < 0 && len[i] > 0) c[i] = static_cast<int>(len[i]) - 1;
    return c;
  }

  // Antichain vertices spelling `word`, one per letter, in word order.
  std::vector<int> place(const std::string& word, const std::vector<int>& c, std::size_t strings) const {
    std::vector<bool> taken(strings, false);
    std::vector<int> out;
    for (char ch : word) {
      bool found = false;
      for (std::size_t i = 0; i < strings && !found; ++i) {
        if (taken[i] || c[i] < 0 || letter(i, static_cast<std::size_t>(c[i])) != ch) continue;
        taken[i] = true;
        out.push_back(freq_.vertex(i, static_cast<std::size_t>(c[i])));
        found = true;
      }
      if (!found) throw PreconditionError("antichain lacks letters to spell a segment");
    }
    return out;
  }
};

}  // namespace

std::vector<std::vector<int>> realize_segmented(const ShuffleInstance& freq, const GroupPresentation& gp,
                                                const std::vector<int>& targets) {
  if (targets.empty()) throw PreconditionError("realize_segmented needs at least one target");
  for (char c : freq.alphabet().symbols())
    if (!gp.alphabet().contains(c)) throw PreconditionError(std::string("letter '") + c + "' has no image in the group");
  std::vector<std::size_t> len;
  for (const auto& s : freq.strings()) len.push_back(s.size());
  auto segments = SegmentBuilder(freq, gp).run(len, targets);
  // Final check of the construction.
  std::vector<int> order;
  for (const auto& seg : segments) order.insert(order.end(), seg.begin(), seg.end());
  LabeledDag dag = freq.to_dag();
  if (!is_topological_sort(dag, order)) throw std::logic_error("realize_segmented produced an invalid order");
  for (std::size_t i = 0; i < segments.size(); ++i)
    if (gp.evaluate(spell(dag, segments[i])) != targets[i])
      throw std::logic_error("realize_segmented produced a wrong segment value");
  return segments;
}

}  // namespace cts
