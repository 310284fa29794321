#include "cts/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cts/errors.hpp"

namespace cts {

namespace {

// Wraps json access errors so callers only see ParseError.
template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

Alphabet used_letters(const std::vector<std::string>& words) {
  std::set<char> letters;
  for (const auto& w : words) letters.insert(w.begin(), w.end());
  return Alphabet(std::string(letters.begin(), letters.end()));
}

Alphabet alphabet_of(const Json& j, const std::vector<std::string>& words) {
  if (j.contains("alphabet")) return Alphabet(j.at("alphabet").get<std::string>());
  return used_letters(words);
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<int> state_list(const Semiautomaton& sa, const Json& j) {
  std::vector<int> out;
  for (const auto& s : j) out.push_back(sa.state_index(s.get<std::string>()));
  return out;
}

GroupPresentation group_from_json(const Json& j) {
  auto table = j.at("table").get<std::vector<std::vector<int>>>();
  std::map<std::string, int> mu_map = j.at("mu").get<std::map<std::string, int>>();
  std::string letters;
  std::vector<int> mu;
  for (const auto& [k, v] : mu_map) {
    if (k.size() != 1) throw ParseError("group mu keys must be single symbols");
    letters += k;
    mu.push_back(v);
  }
  auto accepting = j.at("accepting").get<std::vector<int>>();
  return GroupPresentation(Alphabet(letters), std::move(table), std::move(mu), std::move(accepting));
}

Json group_to_json(const GroupPresentation& gp) {
  Json table = Json::array();
  for (std::size_t x = 0; x < gp.order(); ++x) {
    Json row = Json::array();
    for (std::size_t y = 0; y < gp.order(); ++y) row.push_back(gp.multiply(static_cast<int>(x), static_cast<int>(y)));
    table.push_back(row);
  }
  Json mu = Json::object();
  for (std::size_t a = 0; a < gp.alphabet().size(); ++a) mu[std::string(1, gp.alphabet().symbol(a))] = gp.mu(a);
  return {{"table", table}, {"mu", mu}, {"accepting", gp.accepting()}};
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Instance instance_from_json(const Json& j) {
  return guarded("instance", [&]() -> Instance {
    if (!j.is_object()) throw ParseError("instance must be a JSON object");
    if (j.contains("strings")) {
      auto strings = j.at("strings").get<std::vector<std::string>>();
      Alphabet a = alphabet_of(j, strings);
      return ShuffleInstance(std::move(a), std::move(strings));
    }
    if (!j.contains("vertices")) throw ParseError("instance needs \"strings\" or \"vertices\"");
    std::vector<std::string> labels;
    std::vector<long long> ids;
    std::map<long long, int> index;
    for (const auto& v : j.at("vertices")) {
      long long id = v.at("id").get<long long>();
      if (!index.emplace(id, static_cast<int>(ids.size())).second)
        throw ParseError("duplicate vertex id " + std::to_string(id));
      ids.push_back(id);
      labels.push_back(v.at("label").get<std::string>());
    }
    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges"))
      for (const auto& e : j.at("edges")) {
        auto pair = e.get<std::vector<long long>>();
        if (pair.size() != 2) throw ParseError("edges are [from, to] pairs");
        auto from = index.find(pair[0]), to = index.find(pair[1]);
        if (from == index.end() || to == index.end()) throw ParseError("edge mentions an unknown vertex id");
        edges.emplace_back(from->second, to->second);
      }
    Alphabet a = alphabet_of(j, labels);
    return LabeledDag(std::move(a), std::move(labels), std::move(edges), std::move(ids));
  });
}

Json instance_to_json(const Instance& inst) {
  if (const auto* s = std::get_if<ShuffleInstance>(&inst))
    return {{"alphabet", s->alphabet().symbols()}, {"strings", s->strings()}};
  const auto& g = std::get<LabeledDag>(inst);
  Json vertices = Json::array(), edges = Json::array();
  for (std::size_t v = 0; v < g.size(); ++v)
    vertices.push_back({{"id", g.id(static_cast<int>(v))}, {"label", g.label(static_cast<int>(v))}});
  for (auto [u, v] : g.edges()) edges.push_back({g.id(u), g.id(v)});
  return {{"alphabet", g.alphabet().symbols()}, {"vertices", vertices}, {"edges", edges}};
}

Instance parse_instance(std::string_view text) {
  std::string t = trim(text);
  if (t.rfind("strings:", 0) == 0) {
    std::vector<std::string> strings;
    std::string rest = trim(std::string_view(t).substr(8));
    if (!rest.empty()) {
      std::stringstream ss(rest);
      std::string item;
      while (std::getline(ss, item, ',')) strings.push_back(trim(item));
      if (rest.back() == ',') strings.emplace_back();
    }
    Alphabet a = used_letters(strings);
    return ShuffleInstance(std::move(a), std::move(strings));
  }
  return instance_from_json(parse_json(text));
}

std::string instance_to_text(const ShuffleInstance& inst) {
  std::string out = "strings:";
  for (std::size_t i = 0; i < inst.strings().size(); ++i) out += (i ? "," : " ") + inst.strings()[i];
  return out;
}

Semiautomaton semiautomaton_from_json(const Json& j) {
  return guarded("semiautomaton", [&] {
    auto names = j.at("states").get<std::vector<std::string>>();
    Alphabet a(j.at("alphabet").get<std::string>());
    std::map<std::string, int> index;
    for (std::size_t q = 0; q < names.size(); ++q)
      if (!index.emplace(names[q], static_cast<int>(q)).second) throw ParseError("duplicate state " + names[q]);
    std::vector<int> delta(names.size() * a.size(), -1);
    const Json& d = j.at("delta");
    for (std::size_t q = 0; q < names.size(); ++q) {
      const Json& row = d.at(names[q]);
      for (std::size_t c = 0; c < a.size(); ++c) {
        auto target = row.at(std::string(1, a.symbol(c))).get<std::string>();
        auto it = index.find(target);
        if (it == index.end()) throw ParseError("transition to unknown state " + target);
        delta[q * a.size() + c] = it->second;
      }
    }
    const std::size_t n = names.size();
    return Semiautomaton(a, n, std::move(delta), std::move(names));
  });
}

Json semiautomaton_to_json(const Semiautomaton& sa) {
  Json states = Json::array(), delta = Json::object();
  for (std::size_t q = 0; q < sa.size(); ++q) {
    std::string name = sa.state_name(static_cast<int>(q));
    states.push_back(name);
    Json row = Json::object();
    for (std::size_t c = 0; c < sa.alphabet().size(); ++c)
      row[std::string(1, sa.alphabet().symbol(c))] = sa.state_name(sa.next(static_cast<int>(q), c));
    delta[name] = row;
  }
  return {{"states", states}, {"alphabet", sa.alphabet().symbols()}, {"delta", delta}};
}

Dfa dfa_from_json(const Json& j) {
  return guarded("dfa", [&] {
    Semiautomaton sa = semiautomaton_from_json(j);
    Dfa d = sa.with(sa.state_index(j.at("initial").get<std::string>()), state_list(sa, j.at("finals")));
    d.set_state_names(sa.state_names());
    return d;
  });
}

Json dfa_to_json(const Dfa& d) {
  Json j = semiautomaton_to_json(Semiautomaton::of(d));
  j["initial"] = d.state_name(d.initial());
  Json finals = Json::array();
  for (std::size_t q = 0; q < d.size(); ++q)
    if (d.is_final(static_cast<int>(q))) finals.push_back(d.state_name(static_cast<int>(q)));
  j["finals"] = finals;
  return j;
}

LanguageSpec language_from_json(const Json& j) {
  return guarded("language", [&]() -> LanguageSpec {
    if (!j.is_object()) throw ParseError("language must be a JSON object");
    if (j.contains("regex")) return RegexLanguage{j.at("regex").get<std::string>()};
    if (j.contains("monomial")) {
      const Json& m = j.at("monomial");
      auto gaps = m.at("gaps").get<std::vector<std::string>>();
      auto pivots = m.at("pivots").get<std::string>();
      auto words = gaps;
      words.push_back(pivots);
      return Monomial(alphabet_of(m, words), std::move(gaps), std::move(pivots));
    }
    if (j.contains("union")) {
      UnionLanguage u;
      for (const auto& part : j.at("union")) u.parts.push_back(language_from_json(part));
      return u;
    }
    if (j.contains("group")) return group_from_json(j.at("group"));
    if (j.contains("district")) {
      const Json& d = j.at("district");
      std::vector<GroupPresentation> segments;
      for (const auto& s : d.at("segments")) segments.push_back(group_from_json(s));
      return DistrictMonomial(std::move(segments), d.value("pivots", std::string{}));
    }
    if (j.contains("semiautomaton")) {
      Semiautomaton sa = semiautomaton_from_json(j.at("semiautomaton"));
      std::vector<StatePair> pairs;
      for (const auto& p : j.at("pairs"))
        pairs.push_back({sa.state_index(p.at("initial").get<std::string>()), state_list(sa, p.at("finals"))});
      if (pairs.empty()) throw ParseError("semiautomaton language needs at least one pair");
      return MultiLanguage{std::move(sa), std::move(pairs)};
    }
    if (j.contains("dfa")) {
      const Json& d = j.at("dfa");
      Semiautomaton sa = semiautomaton_from_json(d);
      StatePair p{sa.state_index(d.at("initial").get<std::string>()), state_list(sa, d.at("finals"))};
      return MultiLanguage{std::move(sa), {std::move(p)}};
    }
    throw ParseError("unknown language kind");
  });
}

Json language_to_json(const LanguageSpec& spec) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RegexLanguage>) {
          return {{"regex", v.text}};
        } else if constexpr (std::is_same_v<T, Monomial>) {
          return {{"monomial", {{"alphabet", v.alphabet.symbols()}, {"gaps", v.gaps}, {"pivots", v.pivots}}}};
        } else if constexpr (std::is_same_v<T, UnionLanguage>) {
          Json parts = Json::array();
          for (const auto& p : v.parts) parts.push_back(language_to_json(p));
          return {{"union", parts}};
        } else if constexpr (std::is_same_v<T, GroupPresentation>) {
          return {{"group", group_to_json(v)}};
        } else if constexpr (std::is_same_v<T, DistrictMonomial>) {
          Json segments = Json::array();
          for (const auto& s : v.segments) segments.push_back(group_to_json(s));
          return {{"district", {{"segments", segments}, {"pivots", v.pivots}}}};
        } else {
          Json pairs = Json::array();
          for (const auto& p : v.pairs) {
            Json finals = Json::array();
            for (int q : p.finals) finals.push_back(v.automaton.state_name(q));
            pairs.push_back({{"initial", v.automaton.state_name(p.initial)}, {"finals", finals}});
          }
          return {{"semiautomaton", semiautomaton_to_json(v.automaton)}, {"pairs", pairs}};
        }
      },
      spec.value());
}

LanguageSpec parse_language(std::string_view text) { return language_from_json(parse_json(text)); }

Json monoid_to_json(const TransitionMonoid& m) {
  Json elements = Json::array(), table = Json::array();
  for (std::size_t x = 0; x < m.size(); ++x) {
    elements.push_back({{"word", m.representative(static_cast<int>(x))}, {"map", m.element(static_cast<int>(x))}});
    Json row = Json::array();
    for (std::size_t y = 0; y < m.size(); ++y) row.push_back(m.multiply(static_cast<int>(x), static_cast<int>(y)));
    table.push_back(row);
  }
  return {{"size", m.size()},
          {"identity", m.identity()},
          {"omega", m.omega()},
          {"elements", elements},
          {"table", table}};
}

Json classification_to_json(const ClassificationReport& r) {
  Json j = {{"monoid_size", r.monoid_size}, {"omega", r.omega}, {"group", r.group},
            {"aperiodic", r.aperiodic},     {"DA", r.da},         {"DO", r.do_},
            {"DS", r.ds},                   {"cts", to_string(r.cts)}, {"csh", to_string(r.csh)}};
  if (!r.witness_equation.empty()) j["witness_equation"] = r.witness_equation;
  if (r.witness_words) j["witness"] = {r.witness_words->first, r.witness_words->second};
  return j;
}

Json report_to_json(const RunReport& r, const LabeledDag& g) {
  Json j = {{"instance", r.instance_id},
            {"spec", r.spec_id},
            {"decision", r.result.decision ? "yes" : "no"},
            {"solver", r.result.solver_tag},
            {"complete", r.result.complete}};
  if (r.result.witness) {
    Json w = Json::array();
    for (int v : *r.result.witness) w.push_back(g.id(v));
    j["witness"] = w;
    j["word"] = spell(g, *r.result.witness);
  }
  if (r.wall_ms) j["wall_ms"] = *r.wall_ms;
  return j;
}

}  // namespace cts
