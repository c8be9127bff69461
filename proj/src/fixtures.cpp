#include <stdexcept>

#include "qwa/oracle.hpp"

namespace qwa {

namespace {

// Builder for automata written with named states and letters.
class Sketch {
public:
  Sketch(std::vector<std::string> states, std::vector<std::string> letters)
      : a_(std::move(states), Alphabet(std::move(letters))) {}

  Sketch& start(std::string_view q) {
    a_.set_initial(id(q), Rational(1));
    return *this;
  }
  Sketch& edge(std::string_view from, std::string_view letter, std::string_view to, Rational prob, Rational weight) {
    a_.add_edge(id(from), *a_.alphabet().find(letter), id(to), std::move(prob), std::move(weight));
    return *this;
  }
  WeightedAutomaton done() { return std::move(a_); }

private:
  StateId id(std::string_view q) const { return *a_.find_state(q); }
  WeightedAutomaton a_;
};

// channel: q0 sends, the message is carried by q1 (likely) or q2 (rare),
// and the ack returns to q0. Zero-cost self-loops are implicit there.
WeightedAutomaton channel(long send_cost, Rational p_main, long ack_main, long ack_rare) {
  const Rational p_rare = Rational(1) - p_main;
  return Sketch({"q0", "q1", "q2"}, {"send", "ack"})
      .start("q0")
      .edge("q0", "send", "q1", p_main, send_cost)
      .edge("q0", "send", "q2", p_rare, send_cost)
      .edge("q0", "ack", "q0", 1, 0)
      .edge("q1", "ack", "q0", 1, ack_main)
      .edge("q1", "send", "q1", 1, 0)
      .edge("q2", "ack", "q0", 1, ack_rare)
      .edge("q2", "send", "q2", 1, 0)
      .done();
}

WeightedAutomaton fig2() {
  return Sketch({"q0", "q1", "sink"}, {"a", "b"})
      .start("q0")
      .edge("q0", "a", "q0", Rational(1, 2), 0)
      .edge("q0", "a", "q1", Rational(1, 2), 0)
      .edge("q0", "b", "q0", Rational(1, 2), 0)
      .edge("q0", "b", "q1", Rational(1, 2), 0)
      .edge("q1", "a", "sink", 1, 1)
      .edge("q1", "b", "q1", 1, 1)
      .edge("sink", "a", "sink", 1, 0)
      .edge("sink", "b", "sink", 1, 0)
      .done();
}

WeightedAutomaton fig3() {
  return Sketch({"q0", "sink"}, {"a", "b"})
      .start("q0")
      .edge("q0", "a", "q0", Rational(1, 2), 0)
      .edge("q0", "a", "sink", Rational(1, 2), 0)
      .edge("q0", "b", "q0", 1, 0)
      .edge("sink", "a", "sink", 1, 1)
      .edge("sink", "b", "sink", 1, 1)
      .done();
}

WeightedAutomaton fig4() {
  return Sketch({"q0", "q1", "sink"}, {"a", "b"})
      .start("q0")
      .edge("q0", "a", "q0", Rational(1, 2), 1)
      .edge("q0", "a", "q1", Rational(1, 2), 1)
      .edge("q0", "b", "sink", 1, 1)
      .edge("q1", "a", "q1", 1, 1)
      .edge("q1", "b", "q0", 1, 1)
      .edge("sink", "a", "sink", 1, 0)
      .edge("sink", "b", "sink", 1, 0)
      .done();
}

WeightedAutomaton counter(long weight_a, long weight_b) {
  return Sketch({"q"}, {"a", "b"}).start("q").edge("q", "a", "q", 1, weight_a).edge("q", "b", "q", 1, weight_b).done();
}

} // namespace

std::vector<std::string> fixture_names() {
  return {"fig1_low", "fig1_high", "fig2_LF", "fig3_LI", "fig4_Lz", "da_counter", "db_counter"};
}

Fixture fixture(std::string_view name) {
  const auto limavg = ValueFunction::limavg();
  if (name == "fig1_low") return {"fig1_low", channel(1, Rational(9, 10), 2, 5), limavg, Semantics::Positive};
  if (name == "fig1_high") return {"fig1_high", channel(5, Rational(99, 100), 1, 20), limavg, Semantics::Positive};
  if (name == "fig2_LF" || name == "fig2") return {"fig2_LF", fig2(), limavg, Semantics::Positive};
  if (name == "fig3_LI" || name == "fig3") return {"fig3_LI", fig3(), limavg, Semantics::AlmostSure};
  if (name == "fig4_Lz" || name == "fig4") return {"fig4_Lz", fig4(), ValueFunction::limsup(), Semantics::Positive};
  if (name == "da_counter") return {"da_counter", counter(1, 0), limavg, Semantics::AlmostSure};
  if (name == "db_counter") return {"db_counter", counter(0, 1), limavg, Semantics::AlmostSure};
  throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

} // namespace qwa
