#include <doctest.h>

#include "cts/errors.hpp"
#include "cts/io.hpp"
#include "cts/regex.hpp"
#include "solver_cases.hpp"

using namespace cts;

namespace {

bool same_language(const LanguageSpec& x, const LanguageSpec& y, const Alphabet& a) {
  return equivalent(x.to_dfa(a), y.to_dfa(a));
}

}  // namespace

TEST_CASE("instances round trip") {
  LabeledDag g(Alphabet("abc"), {"a", "bc", "c"}, {{0, 1}, {0, 2}}, {10, 20, 30});
  auto back = std::get<LabeledDag>(instance_from_json(instance_to_json(g)));
  CHECK(back.labels() == g.labels());
  CHECK(back.ids() == g.ids());
  CHECK(back.edges() == g.edges());
  CHECK(back.alphabet().symbols() == "abc");

  ShuffleInstance s(Alphabet("ab"), {"ab", "ba", "b"});
  auto sb = std::get<ShuffleInstance>(instance_from_json(instance_to_json(s)));
  CHECK(sb.strings() == s.strings());
  CHECK(instance_to_text(s) == "strings: ab,ba,b");
  auto parsed = std::get<ShuffleInstance>(parse_instance(instance_to_text(s)));
  CHECK(parsed.strings() == s.strings());
  CHECK(parsed.alphabet().symbols() == "ab");
}

TEST_CASE("languages round trip") {
  Alphabet ab("ab");
  std::vector<LanguageSpec> specs = {RegexLanguage{"(ab)*"}, cases::monomial({"ab", "", "ab"}, "ab"),
                                     cases::abstar_complement(), cases::s3({1, 2})};
  for (const auto& spec : specs) {
    auto back = language_from_json(language_to_json(spec));
    CHECK(back.kind() == spec.kind());
    CHECK(same_language(spec, back, ab));
  }
  GroupPresentation even(Alphabet("ab"), {{0, 1}, {1, 0}}, {1, 0}, {0});
  LanguageSpec district = DistrictMonomial({even, even}, "c");
  auto back = language_from_json(language_to_json(district));
  CHECK(same_language(district, back, Alphabet("abc")));

  Semiautomaton sa(ab, 2, {1, 0, 0, 1});
  LanguageSpec multi = MultiLanguage{sa, {{0, {0}}, {1, {1}}}};
  auto mb = language_from_json(language_to_json(multi));
  CHECK(mb.get<MultiLanguage>()->pairs.size() == 2);
  CHECK(same_language(multi, mb, ab));

  Dfa d = compile_regex("a*b", ab);
  CHECK(equivalent(dfa_from_json(dfa_to_json(d)), d));
  auto sj = semiautomaton_from_json(semiautomaton_to_json(sa));
  CHECK(sj.table() == sa.table());
}

TEST_CASE("malformed input reports positions") {
  try {
    parse_json("{\"alphabet\": \"ab\", ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() != ParseError::npos);
  }
  CHECK_THROWS_AS(parse_instance("{\"alphabet\": \"ab\"}"), ParseError);
  CHECK(std::get<ShuffleInstance>(parse_instance("strings: ")).strings().empty());
  CHECK_THROWS_AS(instance_from_json(parse_json(R"({"alphabet":"a","vertices":[{"id":1,"label":"b"}],"edges":[]})")),
                  Error);
  CHECK_THROWS_AS(instance_from_json(parse_json(
                      R"({"alphabet":"a","vertices":[{"id":1,"label":"a"},{"id":2,"label":"a"}],"edges":[[1,2],[2,1]]})")),
                  Error);
  CHECK_THROWS_AS(parse_language("{\"regex\": \"(ab\"}").to_dfa(Alphabet("ab")), ParseError);
  CHECK_THROWS_AS(parse_language("{\"nothing\": 1}"), ParseError);
}

TEST_CASE("reports carry external ids") {
  LabeledDag g(Alphabet("ab"), {"a", "b"}, {{0, 1}}, {7, 3});
  Dfa lang = compile_regex("ab", Alphabet("ab"));
  RunReport r{"inst", "spec", SolveResult::yes(g, lang, {0, 1}, "brute"), std::nullopt};
  Json j = report_to_json(r, g);
  CHECK(j.at("decision") == "yes");
  CHECK(j.at("witness") == Json::array({7, 3}));
  CHECK(j.at("word") == "ab");
  CHECK_FALSE(j.contains("wall_ms"));
  r.wall_ms = 1.5;
  CHECK(report_to_json(r, g).contains("wall_ms"));
  RunReport no{"inst", "spec", SolveResult::no("group", false), std::nullopt};
  Json nj = report_to_json(no, g);
  CHECK(nj.at("decision") == "no");
  CHECK(nj.at("complete") == false);
}

TEST_CASE("classification and monoid JSON") {
  auto sa = Semiautomaton::of(compile_regex("(ab)*", Alphabet("ab")));
  Json c = classification_to_json(classify(sa));
  CHECK(c.at("cts") == "NP-complete");
  CHECK(c.at("DA") == false);
  Json m = monoid_to_json(transition_monoid(sa));
  CHECK(m.at("size") == 6);
}
