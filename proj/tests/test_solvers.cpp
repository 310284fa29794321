#include <doctest.h>

#include <random>

#include "cts/errors.hpp"
#include "cts/regex.hpp"
#include "cts/solvers.hpp"
#include "oracles.hpp"
#include "solver_cases.hpp"

using namespace cts;

namespace {

LabeledDag load_fig(const std::vector<std::string>& labels, std::vector<std::pair<int, int>> edges) {
  return LabeledDag(Alphabet("abc"), labels, std::move(edges));
}

void check_witness(const LabeledDag& g, const Dfa& lang, const SolveResult& r) {
  REQUIRE(r.witness.has_value());
  CHECK(oracle::is_linear_extension(g, *r.witness));
  CHECK(lang.accepts(oracle::spell_order(g, *r.witness)));
}

void check_agrees(const LabeledDag& g, const Dfa& lang, const SolveResult& r) {
  bool expected = oracle::achieves(g, [&](const std::string& w) { return lang.accepts(w); });
  CHECK(r.decision == expected);
  if (r.decision) check_witness(g, lang, r);
}

GroupPresentation z2_on_a(const std::string& alphabet) {
  std::vector<int> mu;
  for (char c : alphabet) mu.push_back(c == 'a' ? 1 : 0);
  return GroupPresentation(Alphabet(alphabet), {{0, 1}, {1, 0}}, mu, {0});
}

}  // namespace

TEST_CASE("the three example DAGs") {
  Monomial abstar_c(Alphabet("abc"), {"", "b", ""}, "ac");
  Dfa lang = abstar_c.to_dfa();
  auto g1 = load_fig({"a", "b", "b", "c"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  auto g2 = load_fig({"a", "b", "b", "c"}, {{0, 1}, {2, 3}});
  auto g3 = load_fig({"a", "c", "b"}, {{0, 1}, {1, 2}});
  for (const auto* g : {&g1, &g2}) {
    auto brute = solve_brute(*g, lang);
    auto mono = solve_monomial(*g, abstar_c);
    CHECK(brute.decision);
    CHECK(mono.decision);
    check_witness(*g, lang, mono);
  }
  CHECK_FALSE(solve_brute(g3, lang).decision);
  CHECK_FALSE(solve_monomial(g3, abstar_c).decision);
}

TEST_CASE("brute force agrees with linear extensions") {
  std::vector<Dfa> langs = {cases::rx("(ab)*"), cases::rx("(a+b)*aa(a+b)*"), cases::rx("a*b*"), cases::rx("(aa+b)*"),
                            cases::rx("(ab+ba)*")};
  for (int n = 1; n <= 5; ++n)
    oracle::for_each_binary_dag(n, [&](const LabeledDag& g) {
      for (const auto& lang : langs) check_agrees(g, lang, solve_brute(g, lang));
    });
}

TEST_CASE("brute force on string instances and word labels") {
  Dfa lang = cases::rx("(ab)*");
  oracle::for_each_string_tuple(3, 7, [&](const std::vector<std::string>& s) {
    ShuffleInstance inst(Alphabet("ab"), s);
    auto r = solve_brute(inst, lang);
    bool expected = false;
    for (const auto& w : oracle::shuffle_all(s)) expected = expected || lang.accepts(w);
    CHECK(r.decision == expected);
  });
  // Word labels: "ab" then "ab" in either order.
  LabeledDag g(Alphabet("ab"), {"ab", "ba", "b"}, {{0, 2}});
  auto r = solve_brute(g, cases::rx("(ab)*"));
  CHECK_FALSE(r.decision);
  LabeledDag h(Alphabet("ab"), {"ab", "a", "b"}, {{1, 2}});
  CHECK(solve_brute(h, cases::rx("(ab)*")).decision);
}

TEST_CASE("multi-pair brute force") {
  // (ab)* from the start state: an antichain "ab", "ba" has no valid order.
  Semiautomaton sa(Alphabet("ab"), 3, {1, 2, 2, 0, 2, 2});
  std::vector<StatePair> pairs = {{0, {0}}};
  LabeledDag anti(Alphabet("ab"), {"ab", "ba"}, {});
  CHECK_FALSE(solve_brute_multi(anti, sa, pairs).decision);
  LabeledDag ok(Alphabet("ab"), {"ab", "ab"}, {});
  auto r = solve_brute_multi(ok, sa, pairs);
  CHECK(r.decision);
  // Second pair rejects everything that returns to 0 from 1.
  pairs.push_back({1, {1}});
  CHECK(solve_brute_multi(ok, sa, pairs).decision == false);
}

TEST_CASE("bounded width agrees with brute force") {
  std::mt19937_64 rng(7);
  Dfa lang = cases::rx("(ab)*+(a+b)*bbb(a+b)*");
  for (int trial = 0; trial < 300; ++trial) {
    auto g = oracle::random_dag(rng, 3 + static_cast<int>(rng() % 7), 0.3);
    auto cp = chain_partition(g);
    auto r = solve_bounded_width(g, lang, cp);
    CHECK(r.decision == solve_brute(g, lang).decision);
    if (r.decision) check_witness(g, lang, r);
  }
}

TEST_CASE("specialized DAG solvers agree with linear extensions") {
  auto solvers = cases::dag_solvers();
  for (int n = 1; n <= 5; ++n)
    oracle::for_each_binary_dag(n, [&](const LabeledDag& g) {
      for (const auto& s : solvers) {
        INFO(s.name);
        check_agrees(g, s.lang, s.solve(g));
      }
    });
}

TEST_CASE("specialized string solvers agree with shuffles") {
  auto solvers = cases::string_solvers();
  oracle::for_each_string_tuple(3, 7, [&](const std::vector<std::string>& s) {
    ShuffleInstance inst(Alphabet("ab"), s);
    LabeledDag g = inst.to_dag();
    for (const auto& solver : solvers) {
      INFO(solver.name);
      check_agrees(g, solver.lang, solver.solve(inst));
    }
  });
}

TEST_CASE("union of monomials for the complement of (ab)*") {
  auto solvers = cases::dag_solvers();
  const auto& u = *std::find_if(solvers.begin(), solvers.end(), [](const auto& s) { return s.name.rfind("union", 0) == 0; });
  for (const auto& w : oracle::words_upto("ab", 8)) {
    if (w.empty()) continue;
    ShuffleInstance inst(Alphabet("ab"), {w});
    auto g = inst.to_dag();
    CHECK(u.solve(g).decision == !cases::rx("(ab)*").accepts(w));
  }
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = oracle::random_dag(rng, 4 + static_cast<int>(rng() % 6), 0.35);
    auto r = u.solve(g);
    CHECK(r.decision == solve_brute(g, u.lang).decision);
  }
}

TEST_CASE("abelian group languages depend only on the Parikh image") {
  std::mt19937_64 rng(3);
  for (std::size_t n : {2u, 3u}) {
    for (int acc = 0; acc < static_cast<int>(n); ++acc) {
      auto gp = GroupPresentation::cyclic(n, "ab", {acc});
      for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::string> strings;
        std::size_t count = 6 + rng() % 9;
        std::string all;
        for (std::size_t i = 0; i < count; ++i) {
          std::string s;
          std::size_t len = 1 + rng() % 2;
          for (std::size_t j = 0; j < len; ++j) s += "ab"[rng() % 2];
          strings.push_back(s);
          all += s;
        }
        ShuffleInstance inst(Alphabet("ab"), strings);
        auto r = solve_group_csh(inst, gp, 2);
        CHECK(r.decision == gp.is_accepting(gp.evaluate(all)));
        if (r.decision) check_witness(inst.to_dag(), gp.to_dfa(), r);
      }
    }
  }
}

TEST_CASE("S3 solver on many short strings") {
  std::mt19937_64 rng(5);
  int incomplete = 0;
  for (std::vector<int> acc : {std::vector<int>{0}, {1}, {3}, {1, 2, 5}}) {
    auto gp = cases::s3(acc);
    Dfa lang = gp.to_dfa();
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<std::string> strings;
      std::size_t count = 3 + rng() % 6;
      for (std::size_t i = 0; i < count; ++i) {
        std::string s;
        std::size_t len = 1 + rng() % 3;
        for (std::size_t j = 0; j < len; ++j) s += "ab"[rng() % 2];
        strings.push_back(s);
      }
      ShuffleInstance inst(Alphabet("ab"), strings);
      auto r = solve_group_csh(inst, gp);
      bool expected = solve_brute(inst, lang).decision;
      if (r.decision) check_witness(inst.to_dag(), lang, r);
      if (!r.complete) ++incomplete;
      CHECK((r.decision == expected || (!r.decision && !r.complete)));
    }
  }
  MESSAGE("incomplete negatives: " << incomplete);
}

TEST_CASE("district monomials") {
  // (aa+b)* c (aa+b)*
  DistrictMonomial dm({z2_on_a("ab"), z2_on_a("ab")}, "c");
  Dfa lang = dm.to_dfa();
  CHECK(lang.accepts("aacbaa"));
  CHECK_FALSE(lang.accepts("aca"));
  auto yes = solve_district_monomial(ShuffleInstance(Alphabet("abc"), {"c"}), dm);
  CHECK(yes.decision);
  CHECK(yes.solver_tag == "district");
  CHECK_FALSE(solve_district_monomial(ShuffleInstance(Alphabet("abc"), {"aca"}), dm).decision);
  CHECK(solve_district_monomial(ShuffleInstance(Alphabet("abc"), {"aca", "a"}), dm).decision == false);
  CHECK(solve_district_monomial(ShuffleInstance(Alphabet("abc"), {"aca", "a", "a"}), dm).decision);

  // Segments over different sub-alphabets: (aa)* b (a+b with b counted mod 3)*.
  GroupPresentation left(Alphabet("a"), {{0, 1}, {1, 0}}, {1}, {0});
  GroupPresentation right(Alphabet("ab"), {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, {0, 1}, {0});
  DistrictMonomial mixed({left, right}, "c");
  for (const auto* d : {&dm, &mixed}) {
    Dfa l = d->to_dfa();
    oracle::for_each_string_tuple(3, 6, [&](const std::vector<std::string>& s) {
      ShuffleInstance inst(Alphabet("abc"), s);
      auto r = solve_district_monomial(inst, *d);
      bool expected = solve_brute(inst, l).decision;
      if (r.decision) check_witness(inst.to_dag(), l, r);
      CHECK((r.decision == expected || (!r.decision && !r.complete)));
    }, "abc");
  }
}

TEST_CASE("district monomial without pivots is the group solver") {
  auto gp = cases::s3({3});
  DistrictMonomial dm({gp}, "");
  oracle::for_each_string_tuple(3, 6, [&](const std::vector<std::string>& s) {
    ShuffleInstance inst(Alphabet("ab"), s);
    auto a = solve_district_monomial(inst, dm);
    auto b = solve_group_csh(inst, gp);
    CHECK(a.decision == b.decision);
    CHECK(a.complete == b.complete);
  });
}

TEST_CASE("dispatch picks the expected solver") {
  LabeledDag g(Alphabet("abc"), {"a", "b", "a", "b", "c"}, {{0, 1}, {2, 3}, {1, 4}, {3, 4}});
  Monomial m(Alphabet("abc"), {"", "b", ""}, "ac");
  CHECK(dispatch(g, m).solver_tag == "monomial");

  ShuffleInstance two(Alphabet("ab"), {"ab", "ab"});
  auto r = dispatch(two, RegexLanguage{"(ab)*"});
  CHECK(r.decision);
  CHECK(r.solver_tag == "bounded-width");

  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 10; ++i) labels.push_back(i % 2 ? "b" : "a");
  for (int i = 0; i + 2 < 10; i += 2) edges.emplace_back(i, i + 2);
  LabeledDag ten(Alphabet("ab"), labels, edges);
  CHECK(dispatch(ten, RegexLanguage{"(ab)*"}).solver_tag == "brute");

  CHECK(dispatch(two, RegexLanguage{"(aa+b)*"}).solver_tag == "aab");
  CHECK(dispatch(two, RegexLanguage{"(b+aa)*"}).solver_tag == "aab");
  CHECK(dispatch(ten, RegexLanguage{"(ab)*+(a+b)*aa(a+b)*"}).solver_tag == "ab-or-aa");
  CHECK(dispatch(ten, RegexLanguage{"(ab)*(ε+b(a+b)*)"}).solver_tag == "ab-star-btail");
  CHECK(dispatch(ten, RegexLanguage{"(ab)*+(a+b)*(aaa+bbb)(a+b)*"}).solver_tag == "kprime-or-power");
  CHECK(dispatch(two, cases::s3({0})).solver_tag == "group");
  CHECK(dispatch(ten, cases::abstar_complement()).solver_tag.rfind("union:", 0) == 0);

  DispatchOptions forced;
  forced.solver = "brute";
  CHECK(dispatch(two, RegexLanguage{"(ab)*"}, forced).solver_tag == "brute");
  forced.solver = "aab";
  CHECK_THROWS_AS(dispatch(two, RegexLanguage{"(ab)*"}, forced), PreconditionError);
  forced.solver = "nope";
  CHECK_THROWS_AS(dispatch(two, RegexLanguage{"(ab)*"}, forced), PreconditionError);
}

TEST_CASE("dispatch agrees with brute force on random DAGs") {
  std::mt19937_64 rng(19);
  std::vector<std::string> regexes = {"(ab)*", "(aa+b)*", "(ab)*+(a+b)*aa(a+b)*", "(ab)*(ε+b(a+b)*)", "a*b*a*",
                                      "(a+b)*abba(a+b)*"};
  for (int trial = 0; trial < 200; ++trial) {
    auto g = oracle::random_dag(rng, 2 + static_cast<int>(rng() % 8), 0.3);
    for (const auto& re : regexes) {
      Dfa lang = cases::rx(re);
      auto r = dispatch(g, RegexLanguage{re});
      CHECK(r.decision == solve_brute(g, lang).decision);
    }
  }
}

TEST_CASE("caps are enforced") {
  Caps caps;
  caps.brute_vertices = 4;
  std::vector<std::string> labels(6, "a");
  LabeledDag g(Alphabet("ab"), labels, {});
  CHECK_THROWS_AS(solve_brute(g, cases::rx("(aa)*"), caps), CapExceeded);
}
