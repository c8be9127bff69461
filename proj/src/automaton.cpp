#include "qwa/automaton.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace qwa {

std::optional<Letter> Alphabet::find(std::string_view name) const {
  for (Letter l = 0; l < letters_.size(); ++l)
    if (letters_[l] == name) return l;
  return std::nullopt;
}

WeightedAutomaton::WeightedAutomaton(std::vector<std::string> states, Alphabet alphabet)
    : states_(std::move(states)),
      alphabet_(std::move(alphabet)),
      initial_(states_.size()),
      rows_(states_.size() * alphabet_.size()) {}

std::optional<StateId> WeightedAutomaton::find_state(std::string_view name) const {
  for (StateId q = 0; q < states_.size(); ++q)
    if (states_[q] == name) return q;
  return std::nullopt;
}

std::vector<StateId> WeightedAutomaton::initial_support() const {
  std::vector<StateId> out;
  for (StateId q = 0; q < initial_.size(); ++q)
    if (initial_[q].sign() > 0) out.push_back(q);
  return out;
}

std::optional<StateId> WeightedAutomaton::dirac_initial() const {
  auto support = initial_support();
  if (support.size() == 1 && initial_[support[0]] == Rational(1)) return support[0];
  return std::nullopt;
}

void WeightedAutomaton::set_initial(StateId q, Rational p) { initial_.at(q) = std::move(p); }

void WeightedAutomaton::add_edge(StateId from, Letter a, StateId to, Rational prob, Rational weight) {
  if (to >= states_.size()) throw std::out_of_range("successor state out of range");
  rows_.at(index(from, a)).push_back(Edge{to, std::move(prob), std::move(weight)});
}

std::vector<Rational> WeightedAutomaton::weights() const {
  std::set<Rational> ws;
  for (const auto& row : rows_)
    for (const auto& e : row) ws.insert(e.weight);
  return {ws.begin(), ws.end()};
}

bool WeightedAutomaton::is_deterministic() const {
  if (!dirac_initial()) return false;
  return std::all_of(rows_.begin(), rows_.end(), [](const auto& row) { return row.size() == 1; });
}

std::vector<Violation> validate(const WeightedAutomaton& a) {
  std::vector<Violation> out;
  auto report = [&](std::string where, std::string what) { out.push_back({std::move(where), std::move(what)}); };

  if (a.alphabet().size() == 0) report("alphabet", "alphabet is empty");
  {
    std::unordered_set<std::string> seen;
    for (const auto& l : a.alphabet().letters()) {
      if (l.empty()) report("alphabet", "empty letter name");
      if (!seen.insert(l).second) report("alphabet", "duplicate letter '" + l + "'");
    }
  }
  if (a.num_states() == 0) report("states", "no states declared");
  {
    std::unordered_set<std::string> seen;
    for (const auto& s : a.states()) {
      if (s.empty()) report("states", "empty state name");
      if (!seen.insert(s).second) report("states", "duplicate state '" + s + "'");
    }
  }

  Rational total;
  for (StateId q = 0; q < a.num_states(); ++q) {
    const auto& p = a.initial()[q];
    if (p.sign() < 0) report("initial(" + a.state_name(q) + ")", "negative probability " + p.str());
    total += p;
  }
  if (a.num_states() > 0 && total != Rational(1))
    report("initial", "initial distribution sums to " + total.str() + ", expected 1");

  for (StateId q = 0; q < a.num_states(); ++q) {
    for (Letter l = 0; l < a.alphabet().size(); ++l) {
      const std::string where = "delta(" + a.state_name(q) + "," + a.alphabet().name(l) + ")";
      Rational sum;
      std::unordered_set<StateId> targets;
      for (const auto& e : a.edges(q, l)) {
        if (e.prob.sign() < 0) report(where, "negative probability " + e.prob.str());
        if (e.prob.is_zero())
          report(where, "zero-probability edge to " + a.state_name(e.to) + " carries a weight");
        if (!targets.insert(e.to).second) report(where, "duplicate successor " + a.state_name(e.to));
        sum += e.prob;
      }
      if (sum != Rational(1)) report(where, "row sum is " + sum.str() + ", expected 1");
    }
  }
  return out;
}

void require_valid(const WeightedAutomaton& a) {
  auto violations = validate(a);
  if (!violations.empty()) throw ValidationError(std::move(violations));
}

SupportGraph support_automaton(const WeightedAutomaton& a) {
  SupportGraph g;
  g.states = a.states();
  g.alphabet = a.alphabet();
  g.initial = a.initial_support();
  for (StateId q = 0; q < a.num_states(); ++q)
    for (Letter l = 0; l < a.alphabet().size(); ++l)
      for (const auto& e : a.edges(q, l))
        if (e.prob.sign() > 0) g.edges.push_back({q, l, e.to, e.weight});
  return g;
}

WeightedAutomaton uniformize(const SupportGraph& g) {
  if (g.initial.empty()) throw std::invalid_argument("not total: no initial state");
  const std::size_t n = g.states.size();
  const std::size_t k = g.alphabet.size();
  std::vector<std::vector<const SupportEdge*>> rows(n * k);
  for (const auto& e : g.edges) {
    if (e.from >= n || e.to >= n || e.letter >= k) throw std::invalid_argument("support edge out of range");
    auto& row = rows[e.from * k + e.letter];
    const bool duplicate = std::any_of(row.begin(), row.end(), [&](const SupportEdge* o) { return o->to == e.to; });
    if (duplicate) throw std::invalid_argument("support graph lists a successor twice");
    row.push_back(&e);
  }

  WeightedAutomaton a(g.states, g.alphabet);
  std::set<StateId> initial(g.initial.begin(), g.initial.end());
  for (StateId q : initial) a.set_initial(q, Rational(1, static_cast<long>(initial.size())));
  for (StateId q = 0; q < n; ++q) {
    for (Letter l = 0; l < k; ++l) {
      const auto& row = rows[q * k + l];
      if (row.empty())
        throw std::invalid_argument("not total: no successor for (" + g.states[q] + "," + g.alphabet.name(l) + ")");
      const Rational p(1, static_cast<long>(row.size()));
      for (const SupportEdge* e : row) a.add_edge(q, l, e->to, p, e->weight);
    }
  }
  return a;
}

WeightedAutomaton negate_weights(const WeightedAutomaton& a) {
  WeightedAutomaton out(a.states(), a.alphabet());
  for (StateId q = 0; q < a.num_states(); ++q) out.set_initial(q, a.initial()[q]);
  for (StateId q = 0; q < a.num_states(); ++q)
    for (Letter l = 0; l < a.alphabet().size(); ++l)
      for (const auto& e : a.edges(q, l)) out.add_edge(q, l, e.to, e.prob, -e.weight);
  return out;
}

std::vector<std::string> make_unique_names(std::vector<std::string> names) {
  std::unordered_set<std::string> used;
  for (auto& n : names) {
    while (!used.insert(n).second) n += "'";
  }
  return names;
}

} // namespace qwa
