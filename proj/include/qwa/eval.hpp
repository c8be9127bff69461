#pragma once

#include <map>

#include "qwa/automaton.hpp"
#include "qwa/markov.hpp"
#include "qwa/rational.hpp"
#include "qwa/value.hpp"

namespace qwa {

/// Finite law of a run value: value -> probability, all probabilities > 0.
struct ValueDistribution {
  std::map<Rational, Rational> atoms;

  const Rational& min_value() const { return atoms.begin()->first; }
  const Rational& max_value() const { return atoms.rbegin()->first; }
  /// P(Val >= eta).
  Rational probability_at_least(const Rational& eta) const;
};

struct EvaluationRequest {
  const WeightedAutomaton& automaton;
  ValueFunction valfn;
  Semantics semantics;
  LassoWord word;
};

/// Law of Val over the runs on `word`; valfn must be LimSup, LimInf or LimAvg.
ValueDistribution value_distribution(const WeightedAutomaton& a, const ValueFunction& valfn, const LassoWord& word);

Rational evaluate(const WeightedAutomaton& a, const ValueFunction& valfn, Semantics semantics, const LassoWord& word);
inline Rational evaluate(const EvaluationRequest& r) { return evaluate(r.automaton, r.valfn, r.semantics, r.word); }

/// Maximum (Max) or minimum mean weight of a cycle in the graph of `chain`,
/// ignoring probabilities. Throws if the chain has no cycle (impossible for
/// a product chain, whose nodes all have successors).
Rational extreme_cycle_mean(const ProductChain& chain, bool maximize);

} // namespace qwa
