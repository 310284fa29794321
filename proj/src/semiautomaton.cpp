#include "cts/semiautomaton.hpp"

#include "cts/errors.hpp"

namespace cts {

Semiautomaton::Semiautomaton(Alphabet alphabet, std::size_t states, std::vector<int> delta,
                             std::vector<std::string> names)
    : alphabet_(std::move(alphabet)), size_(states), delta_(std::move(delta)), names_(std::move(names)) {
  if (states == 0) throw PreconditionError("semiautomaton needs at least one state");
  if (delta_.size() != states * alphabet_.size()) throw PreconditionError("semiautomaton table has wrong size");
  for (int t : delta_)
    if (t < 0 || static_cast<std::size_t>(t) >= states) throw PreconditionError("semiautomaton target out of range");
  if (!names_.empty() && names_.size() != states) throw PreconditionError("state name count mismatch");
}

int Semiautomaton::run(int q, std::string_view word) const {
  for (char c : word) q = next(q, alphabet_.require(c));
  return q;
}

int Semiautomaton::state_index(const std::string& name) const {
  for (std::size_t q = 0; q < size_; ++q)
    if (state_name(static_cast<int>(q)) == name) return static_cast<int>(q);
  throw PreconditionError("unknown state '" + name + "'");
}

Dfa Semiautomaton::with(int initial, const std::vector<int>& finals) const {
  std::vector<bool> f(size_, false);
  for (int q : finals) {
    if (q < 0 || static_cast<std::size_t>(q) >= size_) throw PreconditionError("final state out of range");
    f[q] = true;
  }
  Dfa d(alphabet_, size_, delta_, initial, std::move(f));
  d.set_state_names(names_);
  return d;
}

Semiautomaton Semiautomaton::of(const Dfa& dfa) {
  return Semiautomaton(dfa.alphabet(), dfa.size(), dfa.table(), dfa.state_names());
}

}  // namespace cts
