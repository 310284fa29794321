#include <doctest.h>

#include "cts/errors.hpp"
#include "cts/group.hpp"
#include "oracles.hpp"

using namespace cts;

namespace {

GroupPresentation zn(std::size_t n, std::vector<int> mu, std::vector<int> accepting = {0}) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x][y] = static_cast<int>((x + y) % n);
  std::string letters = std::string("abc").substr(0, mu.size());
  return GroupPresentation(Alphabet(letters), t, std::move(mu), std::move(accepting));
}

// S3 with a -> a transposition and b -> a 3-cycle.
GroupPresentation s3(std::vector<int> accepting = {0}) {
  auto probe = GroupPresentation::symmetric3("ab", {1, 3}, accepting);
  return probe;
}

std::vector<GroupPresentation> small_groups() {
  return {zn(2, {1, 0}), zn(2, {1, 1}), zn(3, {1, 2}), zn(3, {1, 0}), zn(4, {1, 2}), zn(5, {2, 3}),
          zn(6, {2, 3}), s3(), GroupPresentation::symmetric3("ab", {1, 2}, {0})};
}

}  // namespace

TEST_CASE("group presentations are validated") {
  CHECK_THROWS_AS(GroupPresentation(Alphabet("a"), {{0, 1}, {1, 1}}, {1}, {0}), PreconditionError);
  CHECK_THROWS_AS(zn(3, {5, 0}), PreconditionError);
  auto g = s3();
  CHECK(g.order() == 6);
  CHECK(g.is_surjective());
  CHECK(g.element_order(g.mu(0)) == 2);
  CHECK(g.element_order(g.mu(1)) == 3);
  CHECK_FALSE(zn(4, {2, 0}).is_surjective());
  auto gen = zn(4, {2, 0}).generated("a");
  CHECK(std::count(gen.begin(), gen.end(), true) == 2);
  for (std::size_t x = 0; x < g.order(); ++x) CHECK(g.multiply(static_cast<int>(x), g.inverse(static_cast<int>(x))) == g.identity());
}

TEST_CASE("group DFA recognizes the accepted preimage") {
  for (const auto& g : small_groups()) {
    Dfa d = g.to_dfa();
    for (const auto& w : oracle::words_upto(g.alphabet().symbols(), 6)) CHECK(d.accepts(w) == g.is_accepting(g.evaluate(w)));
  }
}

TEST_CASE("reachable sets equal permutation brute force up to size 8") {
  for (const auto& g : small_groups()) {
    for (std::size_t pa = 0; pa <= 8; ++pa)
      for (std::size_t pb = 0; pa + pb <= 8; ++pb) {
        std::vector<std::size_t> p{pa, pb};
        auto expect = oracle::group_products(g, p);
        ElementSet got = reachable_set(g, p);
        ElementSet want = 0;
        for (int x : expect) want |= ElementSet{1} << x;
        CAPTURE(pa);
        CAPTURE(pb);
        REQUIRE(got == want);
        for (std::size_t h = 0; h < g.order(); ++h) {
          auto w = realize_element(g, p, static_cast<int>(h));
          REQUIRE(w.has_value() == ((want >> h & 1) != 0));
          if (w) {
            CHECK(parikh(g.alphabet(), *w) == p);
            CHECK(g.evaluate(*w) == static_cast<int>(h));
          }
        }
      }
  }
}

TEST_CASE("reachable sets stay exact past the saturation threshold") {
  auto g = s3();
  // Skewed vectors exercise saturated coordinates; brute force stays small.
  for (std::size_t big = 9; big <= 16; ++big)
    for (std::size_t small = 0; small <= 2; ++small)
      for (int flip = 0; flip < 2; ++flip) {
        std::vector<std::size_t> p = flip ? std::vector<std::size_t>{small, big} : std::vector<std::size_t>{big, small};
        ElementSet want = 0;
        for (int x : oracle::group_products(g, p)) want |= ElementSet{1} << x;
        CHECK(reachable_set(g, p) == want);
      }
  auto three = GroupPresentation::symmetric3("abc", {1, 3, 2}, {0});
  for (std::size_t n = 0; n <= 3; ++n) {
    std::vector<std::size_t> p{n, 12 - 2 * n, n};
    ElementSet want = 0;
    for (int x : oracle::group_products(three, p)) want |= ElementSet{1} << x;
    CHECK(reachable_set(three, p) == want);
  }
}

TEST_CASE("shortest words are shortest") {
  for (const auto& g : small_groups()) {
    auto words = shortest_words(g);
    std::vector<std::size_t> best(g.order(), 99);
    for (const auto& w : oracle::words_upto(g.alphabet().symbols(), 7)) {
      auto& b = best[g.evaluate(w)];
      b = std::min(b, w.size());
    }
    for (std::size_t h = 0; h < g.order(); ++h) {
      if (best[h] == 99) {
        CHECK_FALSE(words[h].has_value());
        continue;
      }
      REQUIRE(words[h].has_value());
      CHECK(words[h]->size() == best[h]);
      CHECK(g.evaluate(*words[h]) == static_cast<int>(h));
    }
  }
}

TEST_CASE("insertion compression keeps both products on 1000 inputs") {
  std::mt19937_64 rng(21);
  std::vector<GroupPresentation> groups{s3(), zn(4, {1, 2})};
  auto word = [&](std::size_t max) {
    std::string w;
    for (std::size_t l = rng() % (max + 1); l > 0; --l) w += "ab"[rng() % 2];
    return w;
  };
  for (int it = 0; it < 1000; ++it) {
    const auto& g = groups[it % 2];
    std::size_t n = rng() % 25;
    std::vector<std::string> w(n), ins(n + 1);
    for (auto& x : w) x = word(3);
    for (auto& x : ins) x = word(3);
    auto J = insertion_compress(w, ins, g);
    REQUIRE(std::is_sorted(J.begin(), J.end()));
    std::set<std::size_t> keep(J.begin(), J.end());
    REQUIRE(keep.size() == J.size());
    std::string u = ins[0], v = keep.count(0) ? ins[0] : "", all = ins[0], kept = v;
    for (std::size_t i = 1; i <= n; ++i) {
      u += w[i - 1] + ins[i];
      v += w[i - 1] + (keep.count(i) ? ins[i] : "");
      all += ins[i];
      if (keep.count(i)) kept += ins[i];
    }
    CHECK(g.evaluate(u) == g.evaluate(v));
    CHECK(g.evaluate(all) == g.evaluate(kept));
    for (auto j : J) CHECK(j <= n);
  }
  CHECK_THROWS_AS(insertion_compress({"a"}, {"a"}, s3()), PreconditionError);
}

TEST_CASE("segmented realization on rich instances") {
  auto g = s3();
  std::mt19937_64 rng(4);
  std::vector<std::vector<std::string>> instances{
      std::vector<std::string>(24, "a"),
      {},
      {},
  };
  for (int i = 0; i < 12; ++i) instances[0].push_back("b");
  for (int i = 0; i < 10; ++i) instances[1].insert(instances[1].end(), {"ab", "ba", "b"});
  for (int i = 0; i < 10; ++i) instances[2].insert(instances[2].end(), {"aab", "bba", "ab"});
  for (const auto& strings : instances) {
    ShuffleInstance freq(Alphabet("ab"), strings);
    LabeledDag dag = freq.to_dag();
    ElementSet reach = reachable_set(g, parikh_image(freq));
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<int> targets(1 + rng() % 3);
      int product = g.identity();
      for (auto& t : targets) t = static_cast<int>(rng() % 6), product = g.multiply(product, t);
      if (!(reach >> product & 1)) continue;
      auto segs = realize_segmented(freq, g, targets);
      REQUIRE(segs.size() == targets.size());
      std::vector<int> order;
      for (std::size_t s = 0; s < segs.size(); ++s) {
        CHECK(g.evaluate(spell(dag, segs[s])) == targets[s]);
        order.insert(order.end(), segs[s].begin(), segs[s].end());
      }
      CHECK(oracle::is_linear_extension(dag, order));
    }
  }
}
