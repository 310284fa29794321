#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

#include <boost/functional/hash.hpp>

#include "cts/errors.hpp"
#include "cts/solvers.hpp"

namespace cts {

namespace {

// One group segment of the target: frequent material may be inserted as
// elements of `insertable`, and the product of insertions must land in
// `target` (the reachable set of the frequent part). When `needs_insertion`
// the frequent part is non-empty and must be placed in at least one slot.
struct Segment {
  const GroupPresentation* gp = nullptr;
  ElementSet target = 0;
  std::vector<int> insertable;
  bool needs_insertion = false;
};

struct Move {
  enum Kind { Consume, Insert, Pivot } kind;
  int value;  // chain for Consume/Pivot, element for Insert
};

// Depth-first search over (rare positions, segment, element, insertions
// used, insertion product) with memoized failures. Identical rare strings are
// interchangeable, so a class of equal strings is tracked by how many of its
// members sit at each position.
std::optional<std::vector<Move>> insertion_search(const std::vector<std::string>& rare, const std::vector<Segment>& segs,
                                                  const std::string& pivots, std::size_t budget, const Caps& caps) {
  const std::size_t m = pivots.size();
  std::size_t hmax = 0;
  for (const auto& s : segs) hmax = std::max(hmax, s.gp->order());

  struct Class {
    std::string word;
    std::vector<std::size_t> members;
    std::vector<std::size_t> count;      // count[p]: members at position p, p <= |word|
    std::vector<std::uint64_t> weight;  // code weight of one member at p; zero at the end
  };
  std::vector<Class> classes;
  {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < rare.size(); ++i) {
      auto [it, fresh] = index.emplace(rare[i], classes.size());
      if (fresh) classes.push_back({rare[i], {}, {}, {}});
      classes[it->second].members.push_back(i);
    }
  }
  struct Step {
    std::size_t cls, pos;
  };
  std::vector<Step> steps;  // consume moves, by class then position
  unsigned __int128 span = 1;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    Class& cl = classes[c];
    const std::size_t len = cl.word.size(), t = cl.members.size();
    cl.count.assign(len + 1, 0);
    cl.count[0] = t;
    cl.weight.assign(len + 1, 0);
    for (std::size_t p = 0; p < len; ++p) {
      cl.weight[p] = static_cast<std::uint64_t>(span);
      span *= t + 1;
      if (span > (static_cast<unsigned __int128>(1) << 62)) throw CapExceeded("dp_states", caps.dp_states, "state key space");
      steps.push_back({c, p});
    }
  }
  std::uint64_t code0 = 0;
  for (const auto& cl : classes)
    if (!cl.word.empty()) code0 += cl.weight[0] * cl.members.size();
  std::size_t total = 0;
  for (const auto& s : rare) total += s.size();

  struct Node {
    std::uint64_t code;
    std::size_t seg, ins;
    int h, pi;
    std::size_t next;  // next move index to try
    Move via;          // Consume/Pivot carry a step index here
  };
  auto pack = [&](const Node& n) {
    return ((static_cast<std::uint64_t>(n.seg) * hmax + static_cast<std::uint64_t>(n.h)) * (budget + 1) + n.ins) * hmax +
           static_cast<std::uint64_t>(n.pi);
  };
  using Key = std::pair<std::uint64_t, std::uint64_t>;
  std::unordered_set<Key, boost::hash<Key>> visited;
  std::size_t consumed = 0;

  auto closes = [&](const Node& n) {
    const Segment& s = segs[n.seg];
    return s.gp->is_accepting(n.h) && (s.target >> n.pi & 1) && (!s.needs_insertion || n.ins >= 1);
  };
  auto advance = [&](const Step& st, int dir) {
    Class& cl = classes[st.cls];
    if (dir > 0) --cl.count[st.pos], ++cl.count[st.pos + 1];
    else ++cl.count[st.pos], --cl.count[st.pos + 1];
    consumed = dir > 0 ? consumed + 1 : consumed - 1;
  };

  const Segment& s0 = segs[0];
  const std::size_t k = steps.size();
  std::vector<Node> stack{{code0, 0, 0, s0.gp->identity(), s0.gp->identity(), 0, {Move::Consume, -1}}};
  visited.emplace(code0, pack(stack[0]));
  while (!stack.empty()) {
    Node& n = stack.back();
    if (consumed == total && n.seg == m && closes(n)) {
      // Replay with concrete strings: any member of the class at that position.
      std::vector<std::size_t> pos(rare.size(), 0);
      std::vector<Move> path;
      for (std::size_t i = 1; i < stack.size(); ++i) {
        Move mv = stack[i].via;
        if (mv.kind != Move::Insert) {
          const Step& st = steps[static_cast<std::size_t>(mv.value)];
          for (std::size_t member : classes[st.cls].members)
            if (pos[member] == st.pos) {
              ++pos[member];
              mv.value = static_cast<int>(member);
              break;
            }
        }
        path.push_back(mv);
      }
      return path;
    }
    const Segment& s = segs[n.seg];
    // Moves: 0..k-1 consume, k..2k-1 pivot, 2k.. insert.
    const std::size_t moves = 2 * k + s.insertable.size();
    bool pushed = false;
    while (n.next < moves && !pushed) {
      std::size_t mv = n.next++;
      Node child = n;
      child.next = 0;
      int step = -1;
      if (mv < 2 * k) {
        const Step& st = steps[mv % k];
        const Class& cl = classes[st.cls];
        if (cl.count[st.pos] == 0) continue;
        char letter = cl.word[st.pos];
        if (mv < k) {
          int idx = s.gp->alphabet().index(letter);
          if (idx < 0) continue;
          child.h = s.gp->multiply(n.h, s.gp->mu(static_cast<std::size_t>(idx)));
          child.via = {Move::Consume, static_cast<int>(mv % k)};
        } else {
          if (n.seg >= m || pivots[n.seg] != letter || !closes(n)) continue;
          const Segment& t = segs[n.seg + 1];
          child.seg = n.seg + 1;
          child.h = child.pi = t.gp->identity();
          child.ins = 0;
          child.via = {Move::Pivot, static_cast<int>(mv % k)};
        }
        child.code = n.code - cl.weight[st.pos] + cl.weight[st.pos + 1];
        step = static_cast<int>(mv % k);
      } else {
        int x = s.insertable[mv - 2 * k];
        if (n.ins >= budget || (x == s.gp->identity() && n.ins > 0)) continue;
        child.h = s.gp->multiply(n.h, x);
        child.pi = s.gp->multiply(n.pi, x);
        child.ins = n.ins + 1;
        child.via = {Move::Insert, x};
      }
      if (!visited.emplace(child.code, pack(child)).second) continue;
      if (visited.size() > caps.dp_states) throw CapExceeded("dp_states", caps.dp_states);
      if (step >= 0) advance(steps[static_cast<std::size_t>(step)], +1);
      stack.push_back(child);
      pushed = true;
    }
    if (!pushed) {
      const Move& via = stack.back().via;
      if (via.kind != Move::Insert && via.value >= 0) advance(steps[static_cast<std::size_t>(via.value)], -1);
      stack.pop_back();
    }
  }
  return std::nullopt;
}

std::vector<int> elements_of(const std::vector<bool>& in) {
  std::vector<int> out;
  for (std::size_t x = 0; x < in.size(); ++x)
    if (in[x]) out.push_back(static_cast<int>(x));
  return out;
}

std::string letters_in(const Alphabet& alphabet, const std::vector<std::string>& strings) {
  std::string out;
  for (char c : alphabet.symbols())
    for (const auto& s : strings)
      if (s.find(c) != std::string::npos) {
        out += c;
        break;
      }
  return out;
}

// Richness parameters shared by the group and district procedures.
struct Richness {
  std::size_t gamma = 0, omega = 1;
  std::size_t value(std::size_t insertions) const { return omega + (insertions - 1) * gamma; }
};

Richness richness_of(const GroupPresentation& gp) {
  Richness r;
  for (const auto& w : shortest_words(gp))
    if (w) r.gamma = std::max(r.gamma, w->size());
  for (std::size_t a = 0; a < gp.alphabet().size(); ++a)
    r.omega = std::max(r.omega, gp.order() * gp.element_order(gp.mu(a)));
  return r;
}

}  // namespace

SolveResult solve_group_csh(const ShuffleInstance& inst, const GroupPresentation& gp, std::size_t insertions,
                            const Caps& caps) {
  const std::string tag = "group";
  if (gp.order() > caps.group_order) throw CapExceeded("group_order", caps.group_order);
  if (!gp.is_surjective()) throw PreconditionError("mu is not surjective onto the group");
  for (const auto& s : inst.strings())
    if (!gp.alphabet().contains_all(s)) throw PreconditionError("instance uses a letter without image in the group");
  const std::size_t budget = insertions ? insertions : 2 * gp.order();
  ShuffleInstance work(gp.alphabet(), inst.strings());
  LabeledDag g = inst.to_dag();
  Dfa lang = gp.to_dfa();
  std::size_t R = richness_of(gp).value(budget);

  for (;;) {
    RareFrequent rf = rare_frequent(work, R);
    std::vector<std::string> rare, freq;
    std::size_t rare_len = 0;
    for (auto i : rf.rare_strings) rare.push_back(inst.strings()[i]), rare_len += rare.back().size();
    for (auto i : rf.frequent_strings) freq.push_back(inst.strings()[i]);
    ShuffleInstance freq_inst(gp.alphabet(), freq);
    bool has_freq = freq_inst.total_length() > 0;

    Segment seg;
    seg.gp = &gp;
    seg.needs_insertion = has_freq;
    seg.target = has_freq ? reachable_set(gp, parikh_image(freq_inst)) : (ElementSet{1} << gp.identity());
    if (has_freq) seg.insertable = elements_of(gp.generated(letters_in(gp.alphabet(), freq)));
    auto path = insertion_search(rare, {seg}, "", has_freq ? budget : 0, caps);
    if (!path) return SolveResult::no(tag, !has_freq || budget >= rare_len + 1);

    std::vector<int> targets;
    for (const auto& mv : *path)
      if (mv.kind == Move::Insert) targets.push_back(mv.value);
    std::vector<std::vector<int>> slots;
    if (has_freq) {
      try {
        slots = realize_segmented(freq_inst, gp, targets);
      } catch (const PreconditionError&) {
        R *= 2;  // frequent part not rich enough for this bound; retry with a stricter split
        continue;
      }
    }
    std::vector<int> order;
    std::vector<std::size_t> rpos(rare.size(), 0);
    std::size_t slot = 0;
    for (const auto& mv : *path) {
      if (mv.kind == Move::Insert) {
        for (int v : slots[slot]) {
          auto [i, j] = freq_inst.position(v);
          order.push_back(inst.vertex(rf.frequent_strings[i], j));
        }
        ++slot;
      } else {
        auto c = static_cast<std::size_t>(mv.value);
        order.push_back(inst.vertex(rf.rare_strings[c], rpos[c]++));
      }
    }
    return SolveResult::yes(g, lang, std::move(order), tag);
  }
}

SolveResult solve_district_monomial(const ShuffleInstance& inst, const DistrictMonomial& dm, std::size_t insertions,
                                    const Caps& caps) {
  if (dm.pivots.empty()) {
    SolveResult r = solve_group_csh(inst, dm.segments[0], insertions, caps);
    r.solver_tag = "district";
    return r;
  }
  const std::string tag = "district";
  const std::size_t m = dm.pivots.size();
  for (const auto& seg : dm.segments) {
    if (seg.order() > caps.group_order) throw CapExceeded("group_order", caps.group_order);
    if (!seg.is_surjective()) throw PreconditionError("segment morphism is not surjective onto its group");
  }
  for (const auto& s : inst.strings())
    if (!dm.alphabet.contains_all(s)) throw PreconditionError("instance uses a letter outside the language alphabet");
  const std::size_t budget = insertions ? insertions : [&] {
    std::size_t h = 0;
    for (const auto& seg : dm.segments) h = std::max(h, seg.order());
    return 2 * h;
  }();
  ShuffleInstance work(dm.alphabet, inst.strings());
  LabeledDag g = inst.to_dag();
  Dfa lang = dm.to_dfa();
  std::size_t R = 0;
  for (const auto& seg : dm.segments) R = std::max(R, richness_of(seg).value(budget));
  R = (m + 1) * (R + 2);
  std::string segment_letters;
  for (char c : dm.alphabet.symbols())
    for (const auto& seg : dm.segments)
      if (seg.alphabet().contains(c)) {
        segment_letters += c;
        break;
      }

  for (;;) {
    RareFrequent rf = rare_frequent(work, R);
    std::vector<std::size_t> rare_idx, freq_idx;
    for (auto i : rf.rare_strings) rare_idx.push_back(i);
    for (auto i : rf.frequent_strings) {
      // Letters no segment can absorb must sit on pivots: keep those strings exact.
      if (inst.strings()[i].find_first_not_of(segment_letters) != std::string::npos) rare_idx.push_back(i);
      else freq_idx.push_back(i);
    }
    std::sort(rare_idx.begin(), rare_idx.end());
    std::vector<std::string> rare;
    for (auto i : rare_idx) rare.push_back(inst.strings()[i]);

    // Aggregate slicings of the frequent strings: cut points c_1 <= .. <= c_m
    // with slice j inside A_j. Each aggregate keeps one representative.
    using Agg = std::vector<std::size_t>;  // (m+1) x |A| Parikh counts
    const std::size_t k = dm.alphabet.size();
    std::map<Agg, std::vector<std::vector<std::size_t>>> level{{Agg((m + 1) * k, 0), {}}};
    std::size_t work_done = 0;
    for (auto i : freq_idx) {
      const std::string& s = inst.strings()[i];
      std::map<Agg, std::vector<std::vector<std::size_t>>> next;
      std::vector<std::size_t> cuts(m + 2, 0);
      cuts[m + 1] = s.size();
      std::function<void(std::size_t)> choose = [&](std::size_t j) {
        if (j == m + 1) {
          for (const auto& [agg, reps] : level) {
            if (++work_done > caps.enumeration) throw CapExceeded("enumeration", caps.enumeration, "district slicings");
            Agg a = agg;
            for (std::size_t t = 0; t <= m; ++t)
              for (std::size_t p = cuts[t]; p < cuts[t + 1]; ++p) ++a[t * k + dm.alphabet.index(s[p])];
            if (next.count(a)) continue;
            auto r = reps;
            r.push_back(cuts);
            next.emplace(std::move(a), std::move(r));
          }
          return;
        }
        // Slice j-1 = s[cuts[j-1], cuts[j]) must stay inside A_{j-1}.
        for (std::size_t c = cuts[j - 1]; c <= s.size(); ++c) {
          if (c > cuts[j - 1] && !dm.segments[j - 1].alphabet().contains(s[c - 1])) break;
          cuts[j] = c;
          if (j == m) {
            bool ok = true;
            for (std::size_t p = c; p < s.size() && ok; ++p) ok = dm.segments[m].alphabet().contains(s[p]);
            if (!ok) continue;
          }
          choose(j + 1);
        }
      };
      cuts[0] = 0;
      choose(1);
      level = std::move(next);
      if (level.empty()) break;
    }

    bool has_freq = false;
    for (auto i : freq_idx) has_freq = has_freq || !inst.strings()[i].empty();
    bool retry = false;
    for (const auto& [agg, reps] : level) {
      if (reps.size() != freq_idx.size()) continue;
      std::vector<Segment> segs(m + 1);
      for (std::size_t j = 0; j <= m; ++j) {
        const auto& gp = dm.segments[j];
        std::vector<std::size_t> p(gp.alphabet().size(), 0);
        std::string present;
        for (std::size_t a = 0; a < gp.alphabet().size(); ++a) {
          p[a] = agg[j * k + dm.alphabet.index(gp.alphabet().symbol(a))];
          if (p[a]) present += gp.alphabet().symbol(a);
        }
        segs[j].gp = &gp;
        segs[j].needs_insertion = !present.empty();
        segs[j].target = present.empty() ? (ElementSet{1} << gp.identity()) : reachable_set(gp, p);
        if (!present.empty()) segs[j].insertable = elements_of(gp.generated(present));
      }
      auto path = insertion_search(rare, segs, dm.pivots, has_freq ? budget : 0, caps);
      if (!path) continue;

      // Realize every slice of the frequent part.
      std::vector<std::vector<int>> targets(m + 1);
      std::size_t seg = 0;
      for (const auto& mv : *path) {
        if (mv.kind == Move::Pivot) ++seg;
        else if (mv.kind == Move::Insert) targets[seg].push_back(mv.value);
      }
      std::vector<std::vector<std::vector<int>>> slots(m + 1);  // global vertices per slot
      try {
        for (std::size_t j = 0; j <= m; ++j) {
          if (targets[j].empty()) continue;
          std::vector<std::string> slices;
          for (std::size_t t = 0; t < freq_idx.size(); ++t) {
            const auto& cuts = reps[t];
            slices.push_back(inst.strings()[freq_idx[t]].substr(cuts[j], cuts[j + 1] - cuts[j]));
          }
          ShuffleInstance slice_inst(dm.segments[j].alphabet(), slices);
          for (const auto& part : realize_segmented(slice_inst, dm.segments[j], targets[j])) {
            std::vector<int> global;
            for (int v : part) {
              auto [t, p] = slice_inst.position(v);
              global.push_back(inst.vertex(freq_idx[t], reps[t][j] + p));
            }
            slots[j].push_back(std::move(global));
          }
        }
      } catch (const PreconditionError&) {
        retry = true;
        break;
      }
      std::vector<int> order;
      std::vector<std::size_t> rpos(rare.size(), 0), next_slot(m + 1, 0);
      seg = 0;
      for (const auto& mv : *path) {
        if (mv.kind == Move::Insert) {
          for (int v : slots[seg][next_slot[seg]]) order.push_back(v);
          ++next_slot[seg];
        } else {
          auto c = static_cast<std::size_t>(mv.value);
          order.push_back(inst.vertex(rare_idx[c], rpos[c]++));
          if (mv.kind == Move::Pivot) ++seg;
        }
      }
      return SolveResult::yes(g, lang, std::move(order), tag);
    }
    if (retry) {
      R *= 2;
      continue;
    }
    return SolveResult::no(tag, !has_freq);
  }
}

}  // namespace cts
