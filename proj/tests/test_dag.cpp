#include <doctest.h>

#include "cts/dag.hpp"
#include "cts/errors.hpp"
#include "oracles.hpp"

using namespace cts;

namespace {

LabeledDag dag_g1() { return LabeledDag(Alphabet("abc"), {"a", "b", "b", "c"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

bool is_antichain(const LabeledDag& g, const std::vector<int>& s) {
  auto lt = oracle::closure(g);
  for (int u : s)
    for (int v : s)
      if (lt[u][v]) return false;
  return true;
}

}  // namespace

TEST_CASE("construction validates input") {
  CHECK_THROWS_AS(LabeledDag(Alphabet("ab"), {"a", "b"}, {{0, 1}, {1, 0}}), PreconditionError);
  CHECK_THROWS_AS(LabeledDag(Alphabet("ab"), {"a", "c"}, {}), PreconditionError);
  CHECK_THROWS_AS(LabeledDag(Alphabet("ab"), {"a", ""}, {}), PreconditionError);
  CHECK_THROWS_AS(LabeledDag(Alphabet("ab"), {"a"}, {{0, 0}}), PreconditionError);
  LabeledDag g(Alphabet("ab"), {"a", "b"}, {{0, 1}, {0, 1}}, {10, 20});
  CHECK(g.edges().size() == 1);
  CHECK(g.index_of_id(20) == 1);
  CHECK(g.single_letter());
  CHECK_FALSE(LabeledDag(Alphabet("ab"), {"ab"}, {}).single_letter());
}

TEST_CASE("shuffle instance layout") {
  ShuffleInstance s(Alphabet("ab"), {"ab", "", "bba"});
  CHECK(s.total_length() == 5);
  CHECK(s.vertex(2, 1) == 3);
  CHECK(s.position(3) == std::pair<std::size_t, std::size_t>{2, 1});
  LabeledDag g = s.to_dag();
  CHECK(g.size() == 5);
  CHECK(g.edges().size() == 3);
  CHECK(g.id(0) == 1);
  CHECK(parikh_image(s) == std::vector<std::size_t>{2, 3});
  CHECK(parikh_image(g) == std::vector<std::size_t>{2, 3});
}

TEST_CASE("topological sorts of the example DAGs and counts against the oracle") {
  auto sorts = topological_sorts(dag_g1());
  CHECK(sorts.size() == 2);
  for (const auto& s : sorts) CHECK(spell(dag_g1(), s) == "abbc");
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    auto g = oracle::random_dag(rng, 1 + static_cast<int>(rng() % 7), 0.3);
    std::size_t count = 0;
    for_each_topological_sort(g, [&](const std::vector<int>& o) {
      CHECK(oracle::is_linear_extension(g, o));
      CHECK(is_topological_sort(g, o));
      ++count;
      return true;
    });
    CHECK(count == oracle::count_linear_extensions(g));
  }
  LabeledDag wide(Alphabet("a"), std::vector<std::string>(13, "a"), {});
  CHECK_THROWS_AS(topological_sorts(wide, 12), CapExceeded);
  CHECK_FALSE(is_topological_sort(dag_g1(), {0, 3, 1, 2}));
  CHECK_FALSE(is_topological_sort(dag_g1(), {0, 1, 2}));
}

TEST_CASE("reachability and closures") {
  auto g = dag_g1();
  auto r = reachability(g);
  CHECK(r.less(0, 3));
  CHECK_FALSE(r.less(3, 0));
  CHECK_FALSE(r.comparable(1, 2));
  auto down = down_closure(g, {3});
  CHECK(down.count() == 4);
  auto sub = down_closure(g, {1});
  CHECK(sort_subset(g, sub) == std::vector<int>{0, 1});
}

TEST_CASE("width equals brute-force maximum antichain") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    auto g = oracle::random_dag(rng, 1 + static_cast<int>(rng() % 10), 0.25);
    auto w = width_and_antichain(g);
    CHECK(w.width == oracle::max_antichain(g));
    CHECK(w.antichain.size() == w.width);
    CHECK(is_antichain(g, w.antichain));
    auto cp = chain_partition(g);
    CHECK(cp.chains.size() == w.width);
    std::vector<int> seen(g.size(), 0);
    auto lt = oracle::closure(g);
    for (std::size_t c = 0; c < cp.chains.size(); ++c)
      for (std::size_t j = 0; j < cp.chains[c].size(); ++j) {
        int v = cp.chains[c][j];
        ++seen[v];
        CHECK(cp.chain_of[v] == static_cast<int>(c));
        CHECK(cp.index_in_chain[v] == static_cast<int>(j));
        if (j > 0) CHECK(lt[cp.chains[c][j - 1]][v]);
      }
    for (int s : seen) CHECK(s == 1);
  }
  CHECK(width_and_antichain(LabeledDag(Alphabet("a"), {}, {})).width == 0);
}

TEST_CASE("chain partitions are validated") {
  auto g = dag_g1();
  CHECK_NOTHROW(make_chain_partition(g, {{0, 1, 3}, {2}}));
  CHECK_THROWS_AS(make_chain_partition(g, {{0, 1, 2}, {3}}), PreconditionError);
  CHECK_THROWS_AS(make_chain_partition(g, {{0, 1, 3}}), PreconditionError);
}

TEST_CASE("rich antichains against brute force") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    auto g = oracle::random_dag(rng, 1 + static_cast<int>(rng() % 8), 0.2);
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::string sub : {"a", "b", "ab"}) {
        // Brute force over vertex subsets.
        bool exists = false;
        auto lt = oracle::closure(g);
        for (std::uint32_t mask = 0; mask < (1u << g.size()) && !exists; ++mask) {
          std::vector<int> s;
          for (std::size_t v = 0; v < g.size(); ++v)
            if (mask >> v & 1) s.push_back(static_cast<int>(v));
          bool ok = is_antichain(g, s);
          for (int v : s) ok = ok && sub.find(g.label(v)[0]) != std::string::npos;
          for (char c : sub)
            ok = ok && static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [&](int v) { return g.label(v)[0] == c; })) >= n;
          exists = ok;
        }
        auto got = rich_antichain(g, n, sub);
        REQUIRE(got.has_value() == exists);
        if (got) CHECK(is_antichain(g, *got));
      }
  }
}

TEST_CASE("rich antichains on strings use distinct strings") {
  ShuffleInstance s(Alphabet("ab"), {"ab", "ba", "aab", "b"});
  auto r = rich_antichain(s, 2, "ab");
  REQUIRE(r.has_value());
  CHECK(r->size() == 4);
  std::set<std::size_t> strings;
  for (int v : *r) strings.insert(s.position(v).first);
  CHECK(strings.size() == 4);
  CHECK_FALSE(rich_antichain(s, 4, "a").has_value());
  CHECK(rich_antichain(s, 4, "b").has_value());
}

TEST_CASE("rare-frequent partition is a fixpoint") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    std::vector<std::string> strings;
    std::size_t count = rng() % 30;
    for (std::size_t j = 0; j < count; ++j) {
      std::string w;
      for (std::size_t l = rng() % 4; l > 0; --l) w += "abc"[rng() % 3];
      strings.push_back(w);
    }
    ShuffleInstance inst(Alphabet("abc"), strings);
    std::size_t R = 1 + rng() % 3;
    auto rf = rare_frequent(inst, R);
    CHECK(rf.rare_strings.size() + rf.frequent_strings.size() == strings.size());
    for (auto s : rf.frequent_strings)
      for (char c : strings[s]) CHECK(rf.frequent_letters.find(c) != std::string::npos);
    for (char c : rf.frequent_letters) {
      std::size_t holders = 0;
      for (auto s : rf.frequent_strings) holders += strings[s].find(c) != std::string::npos;
      CHECK(holders >= 3 * R);
    }
    for (auto s : rf.rare_strings) {
      bool has_rare = false;
      for (char c : strings[s]) has_rare = has_rare || rf.rare_letters.find(c) != std::string::npos;
      CHECK(has_rare);
    }
  }
}
