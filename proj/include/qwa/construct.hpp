#pragma once

#include <optional>
#include <vector>

#include "qwa/automaton.hpp"
#include "qwa/value.hpp"

namespace qwa {

/// Equivalent automaton with a single initial state. If rho_I is already
/// Dirac the input is returned unchanged; otherwise a fresh state "init" is
/// appended whose rows mix the rows of the initial states by rho_I. A target
/// reached with two different weights is cloned so each edge keeps its own
/// weight.
WeightedAutomaton with_dirac_initial(const WeightedAutomaton& a);

/// Fresh initial state branching uniformly, on each letter, to the union
/// of the operands' initial successors. Operand states are prefixed with
/// "1:", "2:", ... Throws std::invalid_argument on an alphabet mismatch.
///
/// Positive value of the result is the max of the operands' Positive values
/// and AlmostSure value the min of their AlmostSure values (limit functions).
WeightedAutomaton initial_choice(const std::vector<WeightedAutomaton>& operands);
WeightedAutomaton initial_choice(const WeightedAutomaton& a1, const WeightedAutomaton& a2);

enum class Combiner { Max, Min, Sum };

/// States Q1 x Q2 named "(q1,q2)", probabilities multiplied, weights combined.
WeightedAutomaton synchronized_product(const WeightedAutomaton& a1, const WeightedAutomaton& a2, Combiner c);

/// Automaton whose LimSup value is the sum of the operands' LimSup values.
/// For Positive the result is the initial choice over one bit-tagged copy
/// of the product per weight pair (v1, v2). For AlmostSure a single product
/// run tracks one pair at a time and moves on to the next pair at random.
/// Other semantics are rejected.
WeightedAutomaton limsup_sum(const WeightedAutomaton& a1, const WeightedAutomaton& a2,
                             Semantics target = Semantics::Positive);

enum class Acceptance { Buchi, CoBuchi };

/// Weights in {0, 1}; Buchi reads as LimSup, coBuchi as LimInf.
struct BooleanAutomaton {
  WeightedAutomaton automaton;
  Acceptance kind;
};

/// Weight 1 on edges of weight >= v, 0 elsewhere.
BooleanAutomaton threshold_boolean(const WeightedAutomaton& a, const Rational& v, Acceptance kind);

/// Moves edge weights onto states: state (q, w) means "entered q through an
/// edge of weight w". Returns the split automaton and the states entered
/// with weight 1, so that edge-level coBuchi acceptance becomes state-level.
struct StateLevel {
  WeightedAutomaton automaton;
  std::vector<StateId> accepting;
};
StateLevel state_level_acceptance(const BooleanAutomaton& b);

/// States all of whose outgoing edges weigh 1, if every state has uniform
/// outgoing weights; empty optional otherwise.
std::optional<std::vector<StateId>> uniform_accepting_states(const BooleanAutomaton& b);

/// Positive coBuchi -> Positive Buchi. `accepting` is the coBuchi set C.
/// States Q then copies Q' (suffix "~"); every original edge is split in half
/// between the original and the copied target; copies of C follow the
/// original edges inside the copy, copies of other states are absorbing.
/// Edges leaving copies of C weigh 1, all others 0. Requires a Dirac initial
/// distribution (std::invalid_argument otherwise).
BooleanAutomaton cobuchi_to_buchi(const WeightedAutomaton& a, const std::vector<StateId>& accepting);

/// LimInf-readable automaton whose edges weigh 1 exactly when leaving C.
WeightedAutomaton state_acceptance_weights(const WeightedAutomaton& a, const std::vector<StateId>& accepting);

/// Support graph and back; Disc values under Positive/Nondeterministic (and
/// AlmostSure/Universal) survive the round trip.
SupportGraph to_nondeterministic(const WeightedAutomaton& a);
WeightedAutomaton from_nondeterministic(const SupportGraph& g);

} // namespace qwa
