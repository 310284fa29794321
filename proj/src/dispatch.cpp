#include <algorithm>
#include <optional>

#include "cts/errors.hpp"
#include "cts/regex.hpp"
#include "cts/solvers.hpp"
#include "search.hpp"

namespace cts {

namespace {

const char* const kTags[] = {"brute",         "brute-multi", "bounded-width", "monomial",
                             "union",         "ab-or-aa",    "kprime-or-power", "aab",
                             "apbp",          "ab-star-btail", "group",        "district"};

struct Pattern {
  const char* tag;
  const char* regex;
  bool shuffle_only;
};

const Pattern kPatterns[] = {
    {"ab-or-aa", "(ab)*+(a+b)*aa(a+b)*", false},
    {"aab", "(aa+b)*", true},
    {"apbp", "(aa*bb*aa*bb*)*", true},
    {"ab-star-btail", "(ab)*(ε+b(a+b)*)", false},
};

constexpr std::size_t kMaxPower = 8;

const Alphabet& ab() {
  static const Alphabet a("ab");
  return a;
}

bool within_ab(const Alphabet& a) { return a.symbols().find_first_not_of("ab") == std::string::npos; }

bool labels_within_ab(const LabeledDag& g) {
  if (!g.single_letter()) return false;
  return std::all_of(g.labels().begin(), g.labels().end(), [](const std::string& l) { return l == "a" || l == "b"; });
}

LabeledDag over_ab(const LabeledDag& g) { return LabeledDag(ab(), g.labels(), g.edges(), g.ids()); }

// Splits a top-level union into K' and a member equal to A*(a^i + b^i)A*.
std::optional<std::pair<Dfa, std::size_t>> kprime_split(const std::string& text) {
  Regex r = parse_regex(text, ab());
  if (r.kind != Regex::Kind::Union) return std::nullopt;
  for (std::size_t i = 1; i <= kMaxPower; ++i) {
    std::string power = "(a+b)*(" + std::string(i, 'a') + "+" + std::string(i, 'b') + ")(a+b)*";
    Dfa target = compile_regex(power, ab());
    for (std::size_t c = 0; c < r.children.size(); ++c) {
      if (!equivalent(regex_to_dfa(r.children[c], ab()), target)) continue;
      std::vector<Regex> rest;
      for (std::size_t o = 0; o < r.children.size(); ++o)
        if (o != c) rest.push_back(r.children[o]);
      Regex kprime = rest.empty() ? Regex::empty() : rest.size() == 1 ? rest[0] : Regex::alt(std::move(rest));
      return std::make_pair(regex_to_dfa(kprime, ab()), i);
    }
  }
  return std::nullopt;
}

const ShuffleInstance* shuffle_of(const Instance& inst) { return std::get_if<ShuffleInstance>(&inst); }

std::size_t non_empty_strings(const ShuffleInstance& s) {
  return static_cast<std::size_t>(
      std::count_if(s.strings().begin(), s.strings().end(), [](const std::string& x) { return !x.empty(); }));
}

SolveResult generic(const Instance& inst, const LabeledDag& g, const Dfa& lang, const DispatchOptions& opts,
                    const std::string& forced) {
  const Caps& caps = opts.caps;
  const ShuffleInstance* s = shuffle_of(inst);
  if (forced == "brute") return s ? solve_brute(*s, lang, caps) : solve_brute(g, lang, caps);
  if (forced == "bounded-width")
    return solve_bounded_width(g, lang, s ? detail::string_chains(*s) : chain_partition(g), caps);
  if (s && non_empty_strings(*s) <= caps.dispatch_chains)
    return solve_bounded_width(g, lang, detail::string_chains(*s), caps);
  if (!s && g.size() <= std::min<std::size_t>(caps.brute_vertices, 64)) return solve_brute(g, lang, caps);
  // Larger inputs: the chain search is exact and its state count is capped.
  return solve_bounded_width(g, lang, s ? detail::string_chains(*s) : chain_partition(g), caps);
}

SolveResult route(const Instance& inst, const LanguageSpec& spec, const DispatchOptions& opts,
                  const std::string& forced) {
  LabeledDag g = as_dag(inst);
  const ShuffleInstance* s = shuffle_of(inst);
  const Caps& caps = opts.caps;
  auto want = [&](const char* tag) { return forced.empty() || forced == tag; };
  auto language = [&] { return spec.to_dfa(g.alphabet().merged(spec.own_alphabet())); };

  if (const auto* m = spec.get<Monomial>(); m && want("monomial") && g.single_letter()) return solve_monomial(g, *m);
  if (const auto* u = spec.get<UnionLanguage>(); u && want("union")) {
    std::vector<UnionPart> parts;
    for (const auto& part : u->parts)
      parts.push_back({part.kind(), [&, &part = part](const LabeledDag&) { return route(inst, part, opts, ""); }});
    return solve_union(g, parts);
  }
  if (const auto* gp = spec.get<GroupPresentation>(); gp && s && want("group"))
    return solve_group_csh(*s, *gp, opts.insertions, caps);
  if (const auto* dm = spec.get<DistrictMonomial>(); dm && s && want("district"))
    return solve_district_monomial(*s, *dm, opts.insertions, caps);
  if (const auto* multi = spec.get<MultiLanguage>()) {
    if (want("brute-multi")) return solve_brute_multi(g, multi->automaton, multi->pairs, caps);
    return generic(inst, g, multi->to_dfa(), opts, forced);
  }
  if (const auto* rx = spec.get<RegexLanguage>(); rx && labels_within_ab(g) && within_ab(spec.own_alphabet())) {
    Dfa d = compile_regex(rx->text, ab());
    for (const auto& p : kPatterns) {
      if (!want(p.tag) || (p.shuffle_only && !s)) continue;
      if (!equivalent(d, compile_regex(p.regex, ab()))) continue;
      const std::string tag = p.tag;
      if (tag == "ab-or-aa") return solve_ab_or_aa(over_ab(g));
      if (tag == "ab-star-btail") return solve_ab_star_btail(over_ab(g));
      ShuffleInstance t(ab(), s->strings());
      return tag == "aab" ? solve_aab(t, caps) : solve_apbp(t, caps);
    }
    if (want("kprime-or-power"))
      if (auto split = kprime_split(rx->text)) return solve_kprime_or_power(over_ab(g), split->first, split->second, caps);
  }
  if (!forced.empty() && forced != "brute" && forced != "bounded-width")
    throw PreconditionError("solver '" + forced + "' does not apply to this instance and language");
  return generic(inst, g, language(), opts, forced);
}

}  // namespace

LabeledDag as_dag(const Instance& inst) {
  if (const auto* s = shuffle_of(inst)) return s->to_dag();
  return std::get<LabeledDag>(inst);
}

std::vector<std::string> solver_tags() { return {std::begin(kTags), std::end(kTags)}; }

SolveResult dispatch(const Instance& inst, const LanguageSpec& spec, const DispatchOptions& opts) {
  if (!opts.solver.empty() && std::find(std::begin(kTags), std::end(kTags), opts.solver) == std::end(kTags))
    throw PreconditionError("unknown solver '" + opts.solver + "'");
  return route(inst, spec, opts, opts.solver);
}

}  // namespace cts
