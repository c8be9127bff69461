#include <doctest.h>

#include <random>

#include "qwa/discounted.hpp"
#include "qwa/eval.hpp"
#include "qwa/oracle.hpp"
#include "support/oracles.hpp"
#include "support/random_automata.hpp"

using namespace qwa;

namespace {

const ValueFunction kLimits[] = {ValueFunction::limsup(), ValueFunction::liminf(), ValueFunction::limavg()};
const Semantics kAll[] = {Semantics::Positive, Semantics::AlmostSure, Semantics::Nondeterministic, Semantics::Universal};

std::vector<ValueFunction> all_functions() {
  return {ValueFunction::sup(), ValueFunction::limsup(), ValueFunction::liminf(), ValueFunction::limavg(),
          ValueFunction::disc(Rational(1, 2)), ValueFunction::disc(Rational(3, 4))};
}

LassoWord word(const WeightedAutomaton& a, std::string_view loop, std::string_view prefix = "") {
  auto ids = [&](std::string_view s) {
    std::vector<Letter> out;
    for (char c : s) out.push_back(*a.alphabet().find(std::string(1, c)));
    return out;
  };
  return LassoWord(ids(prefix), ids(loop));
}

} // namespace

TEST_CASE("value distributions of the fixtures") {
  const auto f2 = fixture("fig2").automaton;
  const auto d2 = value_distribution(f2, ValueFunction::limavg(), word(f2, "b"));
  CHECK(d2.atoms == std::map<Rational, Rational>{{1, 1}});

  const auto f3 = fixture("fig3").automaton;
  CHECK(value_distribution(f3, ValueFunction::limavg(), word(f3, "b")).atoms == std::map<Rational, Rational>{{0, 1}});

  const auto da = fixture("da_counter").automaton;
  const auto dd = value_distribution(da, ValueFunction::limavg(), word(da, "aab", "b"));
  CHECK(dd.atoms == std::map<Rational, Rational>{{Rational(2, 3), 1}});
  CHECK_THROWS(value_distribution(da, ValueFunction::sup(), word(da, "a")));

  const auto f4 = fixture("fig4").automaton;
  const auto d4 = value_distribution(f4, ValueFunction::limsup(), word(f4, "a", "ab"));
  CHECK(d4.atoms.size() == 2);
  CHECK(d4.probability_at_least(1) == Rational(1, 2));
  CHECK(value_distribution(f4, ValueFunction::limsup(), word(f4, "a", "aa")).atoms == std::map<Rational, Rational>{{1, 1}});
}

TEST_CASE("evaluate on the fixture examples") {
  const auto f3 = fixture("fig3").automaton;
  CHECK(evaluate(f3, ValueFunction::limavg(), Semantics::AlmostSure, word(f3, "ab")) == Rational(1));
  CHECK(evaluate(f3, ValueFunction::limavg(), Semantics::AlmostSure, word(f3, "a")) == Rational(1));
  CHECK(evaluate(f3, ValueFunction::limavg(), Semantics::AlmostSure, word(f3, "b")) == Rational(0));

  const auto f4 = fixture("fig4").automaton;
  CHECK(evaluate(f4, ValueFunction::limsup(), Semantics::Positive, word(f4, "a")) == Rational(1));
  CHECK(evaluate(f4, ValueFunction::limsup(), Semantics::Positive, word(f4, "ab")) == Rational(0));

  const auto f2 = fixture("fig2").automaton;
  CHECK(evaluate(f2, ValueFunction::limavg(), Semantics::Positive, word(f2, "ba")) == Rational(0));
  CHECK(evaluate(f2, ValueFunction::limavg(), Semantics::Positive, word(f2, "b")) == Rational(1));

  for (auto s : {Semantics::Positive, Semantics::AlmostSure}) {
    const auto low = fixture("fig1_low").automaton;
    const auto high = fixture("fig1_high").automaton;
    const LassoWord sa({}, {0, 1});
    CHECK(evaluate({low, ValueFunction::limavg(), s, sa}) == Rational(33, 20));
    CHECK(evaluate({high, ValueFunction::limavg(), s, sa}) == Rational(619, 200));
  }
}

TEST_CASE("almost-sure sup differs from the universal reading") {
  WeightedAutomaton a({"q0", "q1"}, Alphabet({"b"}));
  a.set_initial(0, 1);
  a.add_edge(0, 0, 0, Rational(1, 2), 0);
  a.add_edge(0, 0, 1, Rational(1, 2), 1);
  a.add_edge(1, 0, 1, 1, 0);
  const LassoWord b({}, {0});
  CHECK(evaluate(a, ValueFunction::sup(), Semantics::AlmostSure, b) == Rational(1));
  CHECK(evaluate(a, ValueFunction::sup(), Semantics::Universal, b) == Rational(0));
  CHECK(evaluate(a, ValueFunction::sup(), Semantics::Positive, b) == Rational(1));
}

TEST_CASE("optimal discounted values") {
  ChoiceGraph one = {{{0, 1}, {0, 0}}};
  CHECK(optimal_discounted_value(one, Rational(1, 2), Optimize::Max).values[0] == Rational(2));
  CHECK(optimal_discounted_value(one, Rational(1, 2), Optimize::Min).values[0] == Rational(0));
  ChoiceGraph two = {{{1, 1}}, {{0, 0}}};
  CHECK(optimal_discounted_value(two, Rational(1, 2), Optimize::Max).values[0] == Rational(4, 3));
  CHECK_THROWS(optimal_discounted_value({{}}, Rational(1, 2), Optimize::Max));
  CHECK_THROWS(optimal_discounted_value(one, Rational(1), Optimize::Max));

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    ChoiceGraph g(n);
    for (auto& row : g) {
      const std::size_t k = 1 + rng() % 3;
      for (std::size_t i = 0; i < k; ++i) row.push_back({rng() % n, Rational(static_cast<long>(rng() % 7) - 3)});
    }
    const Rational lambda(1 + static_cast<long>(rng() % 4), 5);
    for (auto mode : {Optimize::Max, Optimize::Min}) {
      const auto s = optimal_discounted_value(g, lambda, mode);
      for (std::size_t x = 0; x < n; ++x) {
        Rational best;
        bool first = true;
        for (const auto& c : g[x]) {
          const Rational q = c.weight + lambda * s.values[c.to];
          if (first || (mode == Optimize::Max ? q > best : q < best)) best = q;
          first = false;
        }
        CHECK(best == s.values[x]);
        CHECK(s.values[x] <= Rational(3) / (Rational(1) - lambda));
        CHECK(s.values[x] >= Rational(-3) / (Rational(1) - lambda));
      }
    }
  }
}

TEST_CASE("nondeterministic and universal values match run enumeration") {
  std::mt19937_64 rng(21);
  gen::Shape shape;
  shape.max_states = 3;
  shape.dirac_initial = false;
  for (int trial = 0; trial < 150; ++trial) {
    const auto a = gen::automaton(rng, shape);
    const auto w = gen::lasso(rng, a.alphabet().size(), 3, 3);
    for (const auto& f : all_functions()) {
      CHECK(evaluate(a, f, Semantics::Nondeterministic, w) == oracle::extreme_run_value(a, f, w, true));
      CHECK(evaluate(a, f, Semantics::Universal, w) == oracle::extreme_run_value(a, f, w, false));
    }
  }
}

TEST_CASE("deterministic automata: all semantics agree with the single run") {
  std::mt19937_64 rng(4);
  gen::Shape shape;
  shape.max_branch = 1;
  for (int trial = 0; trial < 150; ++trial) {
    const auto a = gen::automaton(rng, shape);
    REQUIRE(a.is_deterministic());
    const auto w = gen::lasso(rng, a.alphabet().size());
    const auto run = oracle::deterministic_run(a, w);
    for (const auto& f : all_functions())
      for (auto s : kAll) CHECK(evaluate(a, f, s, w) == periodic_value(f, run));
    for (const auto& f : kLimits) CHECK(value_distribution(a, f, w).atoms.size() == 1);
  }
}

TEST_CASE("evaluation laws on random automata") {
  std::mt19937_64 rng(99);
  gen::Shape shape;
  shape.dirac_initial = false;
  for (int trial = 0; trial < 150; ++trial) {
    const auto a = gen::automaton(rng, shape);
    const auto w = gen::lasso(rng, a.alphabet().size());
    const auto neg = negate_weights(a);
    const auto ws = a.weights();
    for (const auto& f : kLimits) {
      const auto d = value_distribution(a, f, w);
      Rational total;
      for (const auto& [v, p] : d.atoms) total += p;
      CHECK(total == Rational(1));
      const Rational pos = evaluate(a, f, Semantics::Positive, w);
      const Rational as = evaluate(a, f, Semantics::AlmostSure, w);
      CHECK(pos == d.max_value());
      CHECK(as == d.min_value());
      CHECK(as <= pos);
      CHECK(ws.front() <= as);
      CHECK(pos <= ws.back());
      CHECK(evaluate(a, f, Semantics::Universal, w) <= as);
      CHECK(pos <= evaluate(a, f, Semantics::Nondeterministic, w));
    }
    CHECK(evaluate(neg, ValueFunction::limsup(), Semantics::Positive, w) ==
          -evaluate(a, ValueFunction::liminf(), Semantics::AlmostSure, w));
    CHECK(evaluate(neg, ValueFunction::liminf(), Semantics::Positive, w) ==
          -evaluate(a, ValueFunction::limsup(), Semantics::AlmostSure, w));
    const auto disc = ValueFunction::disc(Rational(1, 2));
    CHECK(evaluate(a, disc, Semantics::Positive, w) == evaluate(a, disc, Semantics::Nondeterministic, w));
    CHECK(evaluate(a, disc, Semantics::AlmostSure, w) == evaluate(a, disc, Semantics::Universal, w));
    CHECK(evaluate(a, ValueFunction::sup(), Semantics::AlmostSure, w) <=
          evaluate(a, ValueFunction::sup(), Semantics::Positive, w));
    CHECK(evaluate(a, ValueFunction::sup(), Semantics::Universal, w) <=
          evaluate(a, ValueFunction::sup(), Semantics::AlmostSure, w));
  }
}
