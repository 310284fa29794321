// cts: command line front end.
//
// Exit codes: 0 yes (or success), 1 no (or bench mismatch), 2 parse/usage
// error, 3 cap exceeded, 4 internal error.

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "cts/caps.hpp"
#include "cts/errors.hpp"
#include "cts/io.hpp"
#include "cts/monoid.hpp"
#include "cts/reductions.hpp"
#include "cts/regex.hpp"
#include "cts/shuffle.hpp"
#include "cts/solvers.hpp"

namespace fs = std::filesystem;
using namespace cts;

namespace {

enum Exit { kYes = 0, kNo = 1, kUsage = 2, kCap = 3, kInternal = 4 };

Caps load_caps(const std::string& flag) {
  Caps caps = Caps::from_env();
  return flag.empty() ? caps : Caps::parse(flag, caps);
}

Instance load_instance(const std::string& arg) {
  if (arg.rfind("strings:", 0) == 0) return parse_instance(arg);
  return parse_instance(read_file(arg));
}

std::string stem(const std::string& arg) {
  if (arg.rfind("strings:", 0) == 0) return "inline";
  return fs::path(arg).stem().string();
}

Json parse_json_file(const fs::path& p) { return parse_json(read_file(p)); }

void write_json(const fs::path& p, const Json& j) {
  std::ofstream out(p);
  if (!out) throw ParseError("cannot write " + p.string());
  out << j.dump(2) << "\n";
}

// Semiautomaton for classify/monoid: a JSON file or the minimal DFA of a regex.
Semiautomaton load_semiautomaton(const std::string& path, const std::string& regex, const std::string& alphabet) {
  if (!regex.empty()) {
    Alphabet a = alphabet.empty() ? regex_symbols(regex) : Alphabet(alphabet);
    return Semiautomaton::of(compile_regex(regex, a));
  }
  if (path.empty()) throw ParseError("give a semiautomaton file or --regex");
  Json j = parse_json_file(path);
  if (j.contains("semiautomaton")) return semiautomaton_from_json(j.at("semiautomaton"));
  if (j.contains("dfa")) return Semiautomaton::of(minimize(dfa_from_json(j.at("dfa"))));
  if (j.contains("initial")) return Semiautomaton::of(minimize(dfa_from_json(j)));
  return semiautomaton_from_json(j);
}

std::vector<std::size_t> parse_ints(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoul(item));
  return out;
}

std::vector<std::string> parse_words(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (!text.empty() && text.back() == ',') out.emplace_back();
  return out;
}

struct Item {
  std::string instance, spec, expected;
};

struct Generator {
  fs::path dir;
  Json params = Json::object();
  std::vector<Item> items;

  void add(const std::string& name, const Instance& inst, const LanguageSpec& spec, const std::string& expected) {
    write_json(dir / (name + ".instance.json"), instance_to_json(inst));
    write_json(dir / (name + ".spec.json"), language_to_json(spec));
    items.push_back({name + ".instance.json", name + ".spec.json", expected});
  }

  void finish(const std::string& family) {
    Json list = Json::array();
    for (const auto& it : items) list.push_back({{"instance", it.instance}, {"spec", it.spec}, {"expected", it.expected}});
    write_json(dir / "manifest.json", {{"family", family}, {"params", params}, {"items", list}});
  }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string random_word(std::mt19937_64& rng, std::size_t n) {
  std::string w;
  for (std::size_t i = 0; i < n; ++i) w += (rng() & 1) ? 'b' : 'a';
  return w;
}

int run_gen_hard(const std::string& family, const std::string& out, const std::string& E_text, std::size_t B,
                 const std::string& words, const std::string& u, const std::string& w, const std::string& U,
                 std::size_t count, std::size_t length, std::size_t m, std::uint64_t seed) {
  Generator gen;
  gen.dir = out;
  fs::create_directories(gen.dir);
  std::mt19937_64 rng(seed);
  gen.params["seed"] = seed;

  if (family == "u3p") {
    std::vector<std::vector<std::size_t>> lists;
    if (!E_text.empty()) {
      lists.push_back(parse_ints(E_text));
    } else {
      if (B < 5) throw PreconditionError("random u3p needs B >= 5");
      std::uniform_int_distribution<std::size_t> pick(B / 4 + 1, (B - 1) / 2);
      for (std::size_t c = 0; c < count; ++c) {
        std::vector<std::size_t> E;
        for (std::size_t attempt = 0; attempt < 100000; ++attempt) {
          E.clear();
          std::size_t sum = 0;
          for (std::size_t i = 0; i < 3 * m; ++i) sum += E.emplace_back(pick(rng));
          if (sum == m * B) break;
        }
        lists.push_back(E);
      }
      gen.params["m"] = m;
      gen.params["count"] = count;
    }
    gen.params["B"] = B;
    for (std::size_t i = 0; i < lists.size(); ++i) {
      HardInstance h = gen_unary3partition(lists[i], B);
      gen.add("u3p-" + std::to_string(i), h.instance, RegexLanguage{h.target_regex},
              yes_no(three_partition_exists(lists[i], B)));
    }
  } else if (family == "ab-filter" || family == "ustar-filter" || family == "aabb-filter") {
    FilterSequence fs = family == "ab-filter" ? ab_filter(B) : family == "ustar-filter" ? ustar_filter(u) : aabb_filter();
    Dfa source = compile_regex(fs.source_regex, fs.alphabet);
    std::vector<std::string> sources = parse_words(words);
    if (words.empty())
      for (std::size_t c = 0; c < count; ++c) sources.push_back(random_word(rng, length));
    gen.params["source"] = fs.source_regex;
    gen.params["target"] = fs.target_regex;
    if (family == "ab-filter") gen.params["B"] = B;
    if (family == "ustar-filter") gen.params["u"] = u;
    if (sources.empty()) {
      // No source words: emit the bare filter word for length `length`.
      ShuffleInstance inst(fs.alphabet, {fs.word(length)});
      gen.add(family + "-filter", inst, RegexLanguage{fs.target_regex}, "depends");
    }
    for (std::size_t i = 0; i < sources.size(); ++i) {
      ShuffleInstance base(fs.alphabet, {sources[i]});
      gen.add(family + "-" + std::to_string(i), shuffle_reduce(base, fs), RegexLanguage{fs.target_regex},
              yes_no(source.accepts(sources[i])));
    }
  } else if (family == "tagged-shuffle") {
    auto parts = parse_words(U);
    HardInstance h = gen_tagged_shuffle(w, parts);
    gen.params["w"] = w;
    gen.params["U"] = parts;
    gen.add("tagged-shuffle-0", h.instance, RegexLanguage{h.target_regex}, yes_no(in_shuffle(w, parts)));
  } else {
    throw PreconditionError("unknown family '" + family + "'");
  }
  gen.finish(family);
  std::cout << Json({{"family", family}, {"instances", gen.items.size()}, {"dir", out}}).dump() << "\n";
  return kYes;
}

struct BenchRow {
  std::string instance, expected, decision, solver, error;
  bool complete = true;
  double wall_ms = 0;
};

int run_bench(const std::string& dir, std::size_t jobs, bool timing, const std::string& reports_path,
              const DispatchOptions& opts) {
  const std::string header = timing ? "instance,expected,decision,solver,complete,match,wall_ms"
                                    : "instance,expected,decision,solver,complete,match";
  fs::path manifest = fs::path(dir) / "manifest.json";
  if (!fs::exists(manifest)) {
    if (fs::is_directory(dir) && fs::is_empty(dir)) {
      std::cout << header << "\n";
      return kYes;
    }
    throw ParseError("no manifest.json in " + dir);
  }
  Json m = parse_json_file(manifest);
  std::vector<Item> items;
  for (const auto& it : m.at("items"))
    items.push_back({it.at("instance").get<std::string>(), it.at("spec").get<std::string>(),
                     it.value("expected", std::string("unknown"))});

  std::vector<BenchRow> rows(items.size());
  std::vector<Json> reports(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      BenchRow& row = rows[i];
      row.instance = items[i].instance;
      row.expected = items[i].expected;
      try {
        Instance inst = parse_instance(read_file(fs::path(dir) / items[i].instance));
        LanguageSpec spec = parse_language(read_file(fs::path(dir) / items[i].spec));
        auto t0 = std::chrono::steady_clock::now();
        SolveResult r = dispatch(inst, spec, opts);
        row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        row.decision = yes_no(r.decision);
        row.solver = r.solver_tag;
        row.complete = r.complete;
        RunReport rep{items[i].instance, items[i].spec, r, std::nullopt};
        if (timing) rep.wall_ms = row.wall_ms;
        reports[i] = report_to_json(rep, as_dag(inst));
      } catch (const CapExceeded& e) {
        row.decision = "cap";
        row.error = e.what();
      } catch (const std::exception& e) {
        row.decision = "error";
        row.error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::max<std::size_t>(jobs, 1); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  bool mismatch = false;
  std::cout << header << "\n";
  for (const auto& row : rows) {
    bool known = row.expected == "yes" || row.expected == "no";
    bool match = !known || row.decision == row.expected;
    mismatch = mismatch || !match;
    std::cout << row.instance << "," << row.expected << "," << row.decision << "," << row.solver << ","
              << (row.complete ? "true" : "false") << "," << (match ? "true" : "false");
    if (timing) std::cout << "," << row.wall_ms;
    std::cout << "\n";
  }
  if (!reports_path.empty()) {
    std::ofstream out(reports_path);
    for (std::size_t i = 0; i < rows.size(); ++i)
      out << (reports[i].is_null() ? Json({{"instance", rows[i].instance}, {"error", rows[i].error}}) : reports[i]).dump()
          << "\n";
  }
  return mismatch ? kNo : kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constrained topological sorting and shuffle solver"};
  app.require_subcommand(1);
  std::string caps_flag;
  app.add_option("--caps", caps_flag, "Cap overrides, e.g. brute_vertices=20,dp_states=1000000");

  auto* solve = app.add_subcommand("solve", "Decide whether an instance achieves a language");
  std::string inst_arg, spec_arg, regex, solver;
  bool witness = false, no_timing = false;
  std::size_t insertions = 0;
  solve->add_option("instance", inst_arg, "Instance JSON file or \"strings: ab,ba\"")->required();
  solve->add_option("language", spec_arg, "Language spec JSON file");
  solve->add_option("--regex", regex, "Target language as a regular expression");
  solve->add_flag("--witness", witness, "Include the witness order");
  solve->add_option("--solver", solver, "Force a solver tag");
  solve->add_option("--insertions", insertions, "Insertion bound for group solvers (default 2|H|)");
  solve->add_flag("--no-timing", no_timing, "Omit wall time from the report");

  auto* classify_cmd = app.add_subcommand("classify", "Classify a semiautomaton or regex");
  auto* monoid_cmd = app.add_subcommand("monoid", "Dump the transition monoid");
  std::string sa_path, sa_regex, sa_alphabet;
  for (auto* c : {classify_cmd, monoid_cmd}) {
    c->add_option("semiautomaton", sa_path, "Semiautomaton or DFA JSON file");
    c->add_option("--regex", sa_regex, "Use the minimal DFA of this regex");
    c->add_option("--alphabet", sa_alphabet, "Alphabet for --regex (default: its symbols)");
  }

  auto* gen = app.add_subcommand("gen-hard", "Generate hard instances with a manifest");
  std::string family, out_dir, E_text, words, u = "ab", w, U;
  std::size_t B = 1, count = 1, length = 4, m = 1;
  std::uint64_t seed = 1;
  gen->add_option("family", family, "u3p | ab-filter | ustar-filter | aabb-filter | tagged-shuffle")->required();
  gen->add_option("--out", out_dir, "Output directory")->required();
  gen->add_option("--E", E_text, "u3p integers, comma separated");
  gen->add_option("--B", B, "u3p target sum, or the power in ab-filter");
  gen->add_option("--m", m, "Random u3p: number of triples");
  gen->add_option("--words", words, "Filter families: source words, comma separated");
  gen->add_option("--u", u, "ustar-filter word");
  gen->add_option("--w", w, "tagged-shuffle target word");
  gen->add_option("--U", U, "tagged-shuffle words, comma separated");
  gen->add_option("--count", count, "Random instances to draw");
  gen->add_option("--length", length, "Random source word length");
  gen->add_option("--seed", seed, "Random seed");

  auto* bench = app.add_subcommand("bench", "Solve every instance of a generated directory");
  std::string bench_dir, reports_path;
  std::size_t jobs = 1;
  bool timing = false;
  bench->add_option("dir", bench_dir, "Directory with manifest.json")->required();
  bench->add_option("--jobs", jobs, "Worker threads");
  bench->add_flag("--timing", timing, "Add a wall time column");
  bench->add_option("--reports", reports_path, "Write one JSON report per line");
  bench->add_option("--solver", solver, "Force a solver tag");
  bench->add_option("--insertions", insertions, "Insertion bound for group solvers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kYes : kUsage;
  }

  try {
    DispatchOptions opts{load_caps(caps_flag), solver, insertions};
    if (*solve) {
      if (spec_arg.empty() == regex.empty()) throw ParseError("give exactly one of a language file or --regex");
      Instance inst = load_instance(inst_arg);
      LanguageSpec spec = regex.empty() ? parse_language(read_file(spec_arg)) : LanguageSpec(RegexLanguage{regex});
      auto t0 = std::chrono::steady_clock::now();
      SolveResult r = dispatch(inst, spec, opts);
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      if (!witness) r.witness.reset();
      RunReport rep{stem(inst_arg), regex.empty() ? stem(spec_arg) : "regex", r, std::nullopt};
      if (!no_timing) rep.wall_ms = ms;
      std::cout << report_to_json(rep, as_dag(inst)).dump() << "\n";
      return r.decision ? kYes : kNo;
    }
    if (*classify_cmd || *monoid_cmd) {
      Semiautomaton sa = load_semiautomaton(sa_path, sa_regex, sa_alphabet);
      if (sa.size() > opts.caps.monoid_states) throw CapExceeded("monoid_states", opts.caps.monoid_states);
      if (*classify_cmd) std::cout << classification_to_json(classify(sa, opts.caps)).dump(2) << "\n";
      else std::cout << monoid_to_json(transition_monoid(sa, opts.caps)).dump() << "\n";
      return kYes;
    }
    if (*gen) return run_gen_hard(family, out_dir, E_text, B, words, u, w, U, count, length, m, seed);
    if (*bench) return run_bench(bench_dir, jobs, timing, reports_path, opts);
  } catch (const CapExceeded& e) {
    std::cerr << "cts: " << e.what() << "\n";
    return kCap;
  } catch (const Error& e) {
    std::cerr << "cts: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "cts: bad number: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "cts: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
