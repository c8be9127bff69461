#include <doctest.h>

#include <cmath>

#include "qwa/oracle.hpp"

using namespace qwa;

TEST_CASE("fixtures") {
  const auto f3 = fixture("fig3_LI");
  CHECK(f3.automaton.num_states() == 2);
  CHECK(f3.automaton.edges(0, 0).size() == 2);
  CHECK(f3.automaton.edges(0, 0)[1].prob == Rational(1, 2));
  CHECK(fixture("fig3").automaton == f3.automaton);

  const auto low = fixture("fig1_low").automaton;
  CHECK(low.edges(0, 0)[0].prob == Rational(9, 10));
  CHECK(low.edges(0, 0)[0].weight == Rational(1));
  CHECK(low.edges(1, 1)[0].weight == Rational(2));
  CHECK(low.edges(2, 1)[0].weight == Rational(5));
  CHECK(low.edges(1, 0)[0].weight == Rational(0)); // omitted zero-cost self-loop

  const auto da = fixture("da_counter").automaton;
  CHECK(da.num_states() == 1);
  CHECK(da.edges(0, *da.alphabet().find("a"))[0].weight == Rational(1));
  CHECK(da.edges(0, *da.alphabet().find("b"))[0].weight == Rational(0));

  CHECK_THROWS_AS(fixture("fig5"), std::invalid_argument);
  for (const auto& n : fixture_names()) CHECK(fixture(n).name == n);
}

TEST_CASE("enumerate_lassos counts and order") {
  const auto one = enumerate_lassos(1, 0, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == LassoWord({}, {0}));
  CHECK(enumerate_lassos(2, 0, 2).size() == 6);
  CHECK(enumerate_lassos(2, 1, 1).size() == 6);
  const auto all = enumerate_lassos(2, 2, 2);
  CHECK(all.size() == (1 + 2 + 4) * (2 + 4));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(all[i] == all[j]);
  CHECK(enumerate_lassos(2, 0, 2)[2] == LassoWord({}, {0, 0}));
}

TEST_CASE("monte carlo determinism and basic statistics") {
  const auto f3 = fixture("fig3").automaton;
  const LassoWord ab({}, {0, 1});
  const auto r1 = monte_carlo(f3, ValueFunction::limavg(), ab, 1000, 2000, 42, {Rational(9, 10)});
  const auto r2 = monte_carlo(f3, ValueFunction::limavg(), ab, 1000, 2000, 42, {Rational(9, 10)});
  CHECK(r1.str() == r2.str());
  CHECK(r1.at_or_above.at(0).second >= 0.99);
  CHECK(r1.str().find("p_ge[9/10]=") != std::string::npos);

  const auto da = fixture("da_counter").automaton;
  const auto stats = sample_statistics(da, ValueFunction::limavg(), LassoWord({}, {0, 1}), 100, 50, 3);
  for (double s : stats) CHECK(s == 0.5);

  CHECK_THROWS(monte_carlo(f3, ValueFunction::limavg(), LassoWord({0, 0}, {0}), 2, 10, 1));
  CHECK_THROWS(monte_carlo(f3, ValueFunction::limavg(), ab, 10, 0, 1));

  const auto s = sample_statistics(f3, ValueFunction::disc(Rational(1, 2)), LassoWord({}, {1}), 60, 3, 9);
  for (double x : s) CHECK(x == doctest::Approx(0.0));
}
