#include <doctest.h>

#include <random>

#include "qwa/construct.hpp"
#include "qwa/eval.hpp"
#include "qwa/oracle.hpp"
#include "support/random_automata.hpp"

using namespace qwa;

namespace {

WeightedAutomaton constant(long w, std::size_t letters = 2) {
  std::vector<std::string> ls;
  for (std::size_t i = 0; i < letters; ++i) ls.push_back(std::string(1, static_cast<char>('a' + i)));
  WeightedAutomaton a({"c"}, Alphabet(ls));
  a.set_initial(0, 1);
  for (Letter l = 0; l < letters; ++l) a.add_edge(0, l, 0, 1, w);
  return a;
}

const LassoWord kA({}, {0});
const LassoWord kB({}, {1});
const LassoWord kAB({}, {0, 1});

} // namespace

TEST_CASE("with_dirac_initial keeps every value") {
  std::mt19937_64 rng(3);
  gen::Shape shape;
  shape.dirac_initial = false;
  int mixed = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = gen::automaton(rng, shape);
    const auto d = with_dirac_initial(a);
    CHECK(validate(d).empty());
    REQUIRE(d.dirac_initial());
    if (!a.dirac_initial()) ++mixed;
    for (int i = 0; i < 5; ++i) {
      const auto w = gen::lasso(rng, a.alphabet().size());
      for (auto f : {ValueFunction::limsup(), ValueFunction::liminf(), ValueFunction::limavg(), ValueFunction::sup()})
        for (auto s : {Semantics::Positive, Semantics::AlmostSure}) CHECK(evaluate(d, f, s, w) == evaluate(a, f, s, w));
      for (auto f : {ValueFunction::limsup(), ValueFunction::limavg()})
        CHECK(value_distribution(d, f, w).atoms == value_distribution(a, f, w).atoms);
    }
  }
  CHECK(mixed > 20);
}

TEST_CASE("initial_choice examples") {
  const auto f2 = fixture("fig2").automaton;
  const auto f3 = fixture("fig3").automaton;
  const auto both = initial_choice(f2, f2);
  CHECK(both.num_states() == 7);
  CHECK(validate(both).empty());

  const auto same = initial_choice(f3, f3);
  for (const auto& w : enumerate_lassos(2, 2, 2))
    CHECK(evaluate(same, ValueFunction::limavg(), Semantics::Positive, w) ==
          evaluate(f3, ValueFunction::limavg(), Semantics::Positive, w));

  const auto mixed = initial_choice(constant(0), f2);
  CHECK(evaluate(mixed, ValueFunction::limavg(), Semantics::Positive, kB) == Rational(1));
  CHECK(evaluate(mixed, ValueFunction::limavg(), Semantics::AlmostSure, kB) == Rational(0));
  CHECK_THROWS_AS(initial_choice(constant(0, 1), f2), std::invalid_argument);
}

TEST_CASE("synchronized_product examples") {
  WeightedAutomaton det({"x", "y"}, Alphabet({"a", "b"}));
  det.set_initial(0, 1);
  det.add_edge(0, 0, 1, 1, 3);
  det.add_edge(0, 1, 0, 1, 1);
  det.add_edge(1, 0, 0, 1, 0);
  det.add_edge(1, 1, 1, 1, 2);
  const auto p = synchronized_product(det, det, Combiner::Max);
  CHECK(p.num_states() == 4);
  CHECK(validate(p).empty());
  for (const auto& w : enumerate_lassos(2, 2, 3))
    for (auto f : {ValueFunction::limsup(), ValueFunction::liminf(), ValueFunction::limavg()})
      CHECK(evaluate(p, f, Semantics::Positive, w) == evaluate(det, f, Semantics::Positive, w));

  const auto m = synchronized_product(constant(4), constant(7), Combiner::Min);
  CHECK(m.weights() == std::vector<Rational>{4});
  const auto s = synchronized_product(constant(4), constant(7), Combiner::Sum);
  CHECK(s.weights() == std::vector<Rational>{11});
}

TEST_CASE("limsup_sum examples") {
  for (auto sem : {Semantics::Positive, Semantics::AlmostSure}) {
    const auto s = limsup_sum(constant(1), constant(2), sem);
    CHECK(validate(s).empty());
    for (const auto& w : enumerate_lassos(2, 1, 2)) CHECK(evaluate(s, ValueFunction::limsup(), sem, w) == Rational(3));
  }
  const auto f4 = fixture("fig4").automaton;
  const auto s = limsup_sum(f4, f4);
  CHECK(validate(s).empty());
  CHECK(evaluate(s, ValueFunction::limsup(), Semantics::Positive, kA) == Rational(2));
  CHECK(evaluate(s, ValueFunction::limsup(), Semantics::Positive, kAB) == Rational(0));
  CHECK(s.num_states() <= 2 * 2 * 2 * 3 * 3 + 1);
  CHECK_THROWS(limsup_sum(f4, f4, Semantics::Universal));
}

TEST_CASE("threshold_boolean examples") {
  const auto f1 = fixture("fig1_low").automaton;
  CHECK(threshold_boolean(f1, 0, Acceptance::Buchi).automaton.weights() == std::vector<Rational>{1});
  CHECK(threshold_boolean(f1, 6, Acceptance::Buchi).automaton.weights() == std::vector<Rational>{0});
  const auto b = threshold_boolean(fixture("fig4").automaton, 1, Acceptance::Buchi);
  CHECK(b.kind == Acceptance::Buchi);
  CHECK(evaluate(b.automaton, ValueFunction::limsup(), Semantics::Positive, kA) == Rational(1));
  CHECK(evaluate(b.automaton, ValueFunction::limsup(), Semantics::Positive, kAB) == Rational(0));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = gen::automaton(rng);
    const auto ws = a.weights();
    const Rational v = ws[rng() % ws.size()];
    const auto buchi = threshold_boolean(a, v, Acceptance::Buchi).automaton;
    const auto co = threshold_boolean(a, v, Acceptance::CoBuchi).automaton;
    const auto w = gen::lasso(rng, a.alphabet().size());
    for (auto s : {Semantics::Positive, Semantics::AlmostSure}) {
      CHECK((evaluate(a, ValueFunction::limsup(), s, w) >= v) ==
            (evaluate(buchi, ValueFunction::limsup(), s, w) == Rational(1)));
      CHECK((evaluate(a, ValueFunction::liminf(), s, w) >= v) ==
            (evaluate(co, ValueFunction::liminf(), s, w) == Rational(1)));
    }
  }
}

TEST_CASE("cobuchi_to_buchi examples") {
  const auto f2 = fixture("fig2").automaton;
  const auto co = threshold_boolean(f2, 1, Acceptance::CoBuchi);
  const auto acc = uniform_accepting_states(co);
  REQUIRE(acc);
  CHECK(*acc == std::vector<StateId>{1});
  const auto buchi = cobuchi_to_buchi(co.automaton, *acc);
  CHECK(buchi.automaton.num_states() == 6);
  CHECK(validate(buchi.automaton).empty());
  CHECK(evaluate(co.automaton, ValueFunction::liminf(), Semantics::Positive, kB) == Rational(1));
  CHECK(evaluate(buchi.automaton, ValueFunction::limsup(), Semantics::Positive, kB) == Rational(1));

  const auto none = cobuchi_to_buchi(co.automaton, {});
  for (const auto& w : enumerate_lassos(2, 2, 2))
    CHECK(evaluate(none.automaton, ValueFunction::limsup(), Semantics::Positive, w) == Rational(0));

  WeightedAutomaton split({"p", "q"}, Alphabet({"a"}));
  split.set_initial(0, Rational(1, 2));
  split.set_initial(1, Rational(1, 2));
  split.add_edge(0, 0, 0, 1, 0);
  split.add_edge(1, 0, 1, 1, 1);
  CHECK_THROWS_AS(cobuchi_to_buchi(split, {}), std::invalid_argument);
}

TEST_CASE("state-level acceptance adapter") {
  std::mt19937_64 rng(29);
  gen::Shape shape;
  shape.weights = {0, 1};
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = gen::automaton(rng, shape);
    const BooleanAutomaton b{a, Acceptance::CoBuchi};
    const auto sl = state_level_acceptance(b);
    CHECK(validate(sl.automaton).empty());
    const auto buchi = cobuchi_to_buchi(sl.automaton, sl.accepting);
    for (int i = 0; i < 5; ++i) {
      const auto w = gen::lasso(rng, a.alphabet().size());
      const Rational co = evaluate(a, ValueFunction::liminf(), Semantics::Positive, w);
      CHECK(evaluate(state_acceptance_weights(sl.automaton, sl.accepting), ValueFunction::liminf(),
                     Semantics::Positive, w) == co);
      CHECK(evaluate(buchi.automaton, ValueFunction::limsup(), Semantics::Positive, w) == co);
    }
  }
}

TEST_CASE("support round trip") {
  const auto f1 = fixture("fig1_low").automaton;
  const auto u = from_nondeterministic(to_nondeterministic(f1));
  CHECK(u.edges(0, 0)[0].prob == Rational(1, 2));
  const auto f3 = fixture("fig3").automaton;
  CHECK(from_nondeterministic(to_nondeterministic(f3)) == f3);
  const auto da = fixture("da_counter").automaton;
  CHECK(to_nondeterministic(from_nondeterministic(to_nondeterministic(da))) == to_nondeterministic(da));
  std::mt19937_64 rng(2);
  const auto disc = ValueFunction::disc(Rational(1, 2));
  for (int i = 0; i < 50; ++i) {
    const auto w = gen::lasso(rng, 2);
    CHECK(evaluate(u, disc, Semantics::Positive, w) == evaluate(f1, disc, Semantics::Positive, w));
  }
}
