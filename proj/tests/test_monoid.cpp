#include <doctest.h>

#include <map>

#include "cts/errors.hpp"
#include "cts/monoid.hpp"
#include "cts/regex.hpp"
#include "oracles.hpp"
#include "solver_cases.hpp"

using namespace cts;

namespace {

using Map = std::vector<int>;

// Independent closure: maps as vectors, apply-left-first composition.
struct RefMonoid {
  std::vector<Map> elems;

  explicit RefMonoid(const Semiautomaton& sa) {
    Map id(sa.size());
    std::iota(id.begin(), id.end(), 0);
    std::set<Map> seen{id};
    elems.push_back(id);
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t c = 0; c < sa.alphabet().size(); ++c) {
        Map next(sa.size());
        for (std::size_t q = 0; q < sa.size(); ++q) next[q] = sa.next(elems[i][q], c);
        if (seen.insert(next).second) elems.push_back(next);
      }
  }
  static Map mul(const Map& x, const Map& y) {
    Map r(x.size());
    for (std::size_t q = 0; q < x.size(); ++q) r[q] = y[x[q]];
    return r;
  }
  static Map omega(const Map& x) {
    Map p = x;
    for (;;) {
      if (mul(p, p) == p) return p;
      p = mul(p, x);
    }
  }
  bool all_pairs(const std::function<bool(const Map&, const Map&)>& eq) const {
    for (const auto& x : elems)
      for (const auto& y : elems)
        if (!eq(x, y)) return false;
    return true;
  }
  bool aperiodic() const {
    return all_pairs([](const Map& x, const Map&) { return mul(omega(x), x) == omega(x); });
  }
  bool da() const {
    return all_pairs([](const Map& x, const Map& y) {
      Map e = omega(mul(x, y));
      return mul(mul(e, x), e) == e;
    });
  }
  bool do_() const {
    return all_pairs([](const Map& x, const Map& y) {
      Map e = omega(mul(x, y)), f = omega(mul(y, x));
      return mul(mul(e, f), e) == e;
    });
  }
  bool ds() const {
    return all_pairs([](const Map& x, const Map& y) {
      Map e = omega(mul(x, y)), f = omega(mul(y, x));
      return omega(mul(mul(e, f), e)) == e;
    });
  }
  // Counter-free test: some map u and state q with u^n(q) = q, n > 1, u(q) != q.
  bool counter_free() const {
    for (const auto& u : elems)
      for (std::size_t q = 0; q < u.size(); ++q) {
        if (u[q] == static_cast<int>(q)) continue;
        int p = static_cast<int>(q);
        for (std::size_t n = 1; n <= u.size(); ++n) {
          p = u[p];
          if (n > 1 && p == static_cast<int>(q)) return false;
        }
      }
    return true;
  }
};

Semiautomaton sa_of(const char* regex, const char* letters = "ab") {
  return Semiautomaton::of(compile_regex(regex, Alphabet(letters)));
}

Semiautomaton swap_identity() { return Semiautomaton(Alphabet("ab"), 2, {1, 0, 0, 1}); }

std::vector<Semiautomaton> all_three_state() {
  std::vector<Semiautomaton> out;
  for (int code = 0; code < 729; ++code) {
    std::vector<int> delta(6);
    int c = code;
    for (int i = 0; i < 6; ++i) delta[i] = c % 3, c /= 3;
    out.emplace_back(Alphabet("ab"), 3, delta);
  }
  return out;
}

}  // namespace

TEST_CASE("transition monoid fixtures") {
  auto m = transition_monoid(sa_of("(ab)*"));
  CHECK(m.size() == 6);
  CHECK_FALSE(m.is_group());
  CHECK(is_aperiodic(m));

  auto trivial = transition_monoid(Semiautomaton(Alphabet("a"), 1, {0}));
  CHECK(trivial.size() == 1);
  CHECK(trivial.omega() == 1);
  CHECK(trivial.is_group());
  CHECK(is_aperiodic(trivial));

  auto swap = transition_monoid(swap_identity());
  CHECK(swap.size() == 2);
  CHECK(swap.omega() == 2);
  CHECK(swap.is_group());
  CHECK_FALSE(is_aperiodic(swap));

  CHECK(syntactic_monoid(compile_regex("a*", Alphabet("a"))).size() == 1);
  auto aab = syntactic_monoid(compile_regex("(aa+b)*", Alphabet("ab")));
  int a = aab.generator(0);
  CHECK(a != aab.identity());
  CHECK(aab.multiply(a, a) != a);
  CHECK(aab.power(a, 3) == a);
}

TEST_CASE("monoid closure, words and omega") {
  for (const char* r : {"(ab)*", "(aa+b)*", "(aa*bb*aa*bb*)*", "(a+b)*ab(a+b)*", "(abb+ba)*a", "(aaa)*b"}) {
    CAPTURE(r);
    auto sa = sa_of(r);
    auto m = transition_monoid(sa);
    RefMonoid ref(sa);
    CHECK(m.size() == ref.elems.size());
    for (std::size_t x = 0; x < m.size(); ++x) {
      const auto& w = m.representative(static_cast<int>(x));
      CHECK(m.of_word(w) == static_cast<int>(x));
      for (std::size_t y = 0; y < m.size(); ++y) {
        int xy = m.multiply(static_cast<int>(x), static_cast<int>(y));
        REQUIRE(xy >= 0);
        CHECK(m.of_word(w + m.representative(static_cast<int>(y))) == xy);
      }
    }
    auto omega = m.omega();
    for (std::size_t x = 0; x < m.size(); ++x)
      CHECK(m.power(static_cast<int>(x), 2 * omega) == m.power(static_cast<int>(x), omega));
    for (std::uint64_t k = 1; k < omega; ++k) {
      bool fails = false;
      for (std::size_t x = 0; x < m.size() && !fails; ++x)
        fails = m.power(static_cast<int>(x), 2 * k) != m.power(static_cast<int>(x), k);
      CHECK(fails);
    }
  }
}

TEST_CASE("variety fixtures") {
  auto ab = transition_monoid(sa_of("(ab)*"));
  CHECK_FALSE(in_da(ab));
  CHECK_FALSE(in_ds(ab));
  CHECK_FALSE(in_da(transition_monoid(sa_of("(ab+b)*"))));
  CHECK(in_da(transition_monoid(sa_of("(a+b)*ab(a+b)*"))));
  CHECK(in_da(transition_monoid(sa_of("ab*c", "abc"))));
  CHECK(in_da(transition_monoid(sa_of("a(a+b)*b(a+b)*", "ab"))));
  auto parity = transition_monoid(swap_identity());
  CHECK(parity.is_group());
  CHECK(in_do(parity));
  auto apbp = transition_monoid(sa_of("(aa*bb*aa*bb*)*"));
  CHECK(in_ds(apbp));
  CHECK_FALSE(in_do(apbp));
}

TEST_CASE("classification verdicts") {
  auto ab = classify(sa_of("(ab)*"));
  CHECK(ab.cts == Complexity::NPComplete);
  CHECK(ab.csh == Complexity::NPComplete);
  CHECK(ab.witness.has_value());
  auto mono = classify(sa_of("(a+b)*ab(a+b)*"));
  CHECK(mono.cts == Complexity::NL);
  CHECK(mono.csh == Complexity::NL);
  auto group = classify(swap_identity());
  CHECK(group.csh == Complexity::NL);
  CHECK(group.cts == Complexity::Unknown);
  auto ds = classify(sa_of("(aa*bb*aa*bb*)*"));
  CHECK(ds.cts == Complexity::Unknown);
  CHECK(ds.csh == Complexity::Unknown);
  auto trivial = classify(Semiautomaton(Alphabet("a"), 1, {0}));
  CHECK(trivial.da);
  CHECK(trivial.cts == Complexity::NL);
}

TEST_CASE("every 3-state semiautomaton: equations against the reference closure") {
  for (const auto& sa : all_three_state()) {
    auto m = transition_monoid(sa);
    RefMonoid ref(sa);
    REQUIRE(m.size() == ref.elems.size());
    auto r = classify(sa);
    REQUIRE(r.aperiodic == ref.aperiodic());
    REQUIRE(r.aperiodic == ref.counter_free());
    REQUIRE(r.da == ref.da());
    REQUIRE(r.do_ == ref.do_());
    REQUIRE(r.ds == ref.ds());
    // Lattice invariants.
    CHECK((!r.da || r.do_));
    CHECK((!r.do_ || r.ds));
    CHECK((!(r.aperiodic && r.ds) || r.da));
    CHECK((!(r.aperiodic && r.do_) || r.da));
    CHECK((!r.group || r.do_));
  }
}

TEST_CASE("monoid caps") {
  Caps caps;
  caps.monoid_elements = 3;
  CHECK_THROWS_AS(transition_monoid(sa_of("(ab)*"), caps), CapExceeded);
  caps = Caps{};
  caps.monoid_states = 2;
  CHECK_THROWS_AS(transition_monoid(sa_of("(ab)*"), caps), CapExceeded);
}

TEST_CASE("unambiguous monomial fixtures are in DA") {
  std::size_t unambiguous = 0;
  for (const auto& m : cases::monomial_fixtures()) {
    bool ok = true;
    for (const auto& w : oracle::words_upto("ab", 8)) ok = ok && oracle::monomial_parses(m, w) <= 1;
    if (!ok) continue;
    ++unambiguous;
    CHECK(in_da(transition_monoid(sa_of(m.to_regex().c_str()))));
  }
  CHECK(unambiguous >= 5);
  CHECK(oracle::monomial_parses(Monomial(Alphabet("ab"), {"ab", "", "ab"}, "aa"), "aaa") == 2);
}
