#include "cts/shuffle.hpp"

#include <functional>
#include <map>

#include "cts/errors.hpp"

namespace cts {

namespace {

// Distinct suffix words reachable from a position tuple, memoized so that
// repeated letters do not multiply the work.
class Interleaver {
public:
  explicit Interleaver(const std::vector<std::string>& words) : words_(words) {}

  const std::set<std::string>& suffixes(std::vector<std::size_t>& pos) {
    auto it = memo_.find(pos);
    if (it != memo_.end()) return it->second;
    std::set<std::string> out;
    bool done = true;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (pos[i] == words_[i].size()) continue;
      done = false;
      char c = words_[i][pos[i]++];
      for (const auto& s : suffixes(pos)) out.insert(c + s);
      --pos[i];
    }
    if (done) out.insert(std::string());
    return memo_.emplace(pos, std::move(out)).first->second;
  }

private:
  const std::vector<std::string>& words_;
  std::map<std::vector<std::size_t>, std::set<std::string>> memo_;
};

}  // namespace

std::set<std::string> shuffle_tuple(const std::vector<std::string>& words, std::size_t cap) {
  std::size_t total = 0;
  for (const auto& w : words) total += w.size();
  if (total > cap) throw CapExceeded("shuffle_length", cap);
  Interleaver gen(words);
  std::vector<std::size_t> pos(words.size(), 0);
  return gen.suffixes(pos);
}

std::set<std::string> shuffle_pair(std::string_view u, std::string_view v, std::size_t cap) {
  return shuffle_tuple({std::string(u), std::string(v)}, cap);
}

bool in_shuffle(std::string_view w, const std::vector<std::string>& words) {
  std::size_t total = 0;
  for (const auto& u : words) total += u.size();
  if (total != w.size()) return false;
  std::set<std::vector<std::size_t>> dead;
  std::vector<std::size_t> pos(words.size(), 0);
  std::function<bool(std::size_t)> go = [&](std::size_t done) {
    if (done == w.size()) return true;
    if (dead.count(pos)) return false;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (pos[i] == words[i].size() || words[i][pos[i]] != w[done]) continue;
      ++pos[i];
      bool ok = go(done + 1);
      --pos[i];
      if (ok) return true;
    }
    dead.insert(pos);
    return false;
  };
  return go(0);
}

}  // namespace cts
