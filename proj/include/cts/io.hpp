#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cts/dag.hpp"
#include "cts/dfa.hpp"
#include "cts/language.hpp"
#include "cts/monoid.hpp"
#include "cts/semiautomaton.hpp"
#include "cts/solvers.hpp"

namespace cts {

using Json = nlohmann::json;

// Instances: {"alphabet":"ab","vertices":[{"id":1,"label":"a"}],"edges":[[1,2]]}
// or {"alphabet":"ab","strings":["ab","ba"]}; the text "strings: ab,ba" is the
// compact form of the latter. Without "alphabet" the used letters are taken.
Instance instance_from_json(const Json& j);
Json instance_to_json(const Instance& inst);
Instance parse_instance(std::string_view text);
std::string instance_to_text(const ShuffleInstance& inst);

// {"states":[..],"alphabet":"ab","delta":{"q":{"a":"r"}}} plus "initial" and
// "finals" for a DFA.
Semiautomaton semiautomaton_from_json(const Json& j);
Json semiautomaton_to_json(const Semiautomaton& sa);
Dfa dfa_from_json(const Json& j);
Json dfa_to_json(const Dfa& d);

// {"regex": ..} | {"monomial": ..} | {"union": [..]} | {"group": ..} |
// {"district": ..} | {"semiautomaton": .., "pairs": [..]} | {"dfa": ..}.
LanguageSpec language_from_json(const Json& j);
Json language_to_json(const LanguageSpec& spec);
LanguageSpec parse_language(std::string_view text);

Json monoid_to_json(const TransitionMonoid& m);
Json classification_to_json(const ClassificationReport& r);

struct RunReport {
  std::string instance_id;
  std::string spec_id;
  SolveResult result;
  std::optional<double> wall_ms;
};
// Witness vertices are written as external ids (string instances: 1-based
// positions in concatenation order).
Json report_to_json(const RunReport& r, const LabeledDag& g);

std::string read_file(const std::filesystem::path& path);
Json parse_json(std::string_view text);

}  // namespace cts
