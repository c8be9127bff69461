#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qwa/automaton.hpp"
#include "qwa/discounted.hpp"
#include "qwa/value.hpp"

namespace qwa {

enum class ProblemKind { Emptiness, Universality };

/// Is there a word (emptiness) / is every word (universality) of value >= threshold?
struct DecisionProblem {
  ProblemKind kind;
  Rational threshold;
};

enum class Status { Decidable, Undecidable, Open };

struct ClassificationEntry {
  ValueKind value;
  Semantics semantics;
  ProblemKind problem;
  Status status;
  std::string note; // empty unless the cell carries the footnote
};

/// Decidability of the problem for Positive and AlmostSure semantics.
/// Throws std::invalid_argument for the other semantics.
ClassificationEntry classify(ValueKind value, Semantics semantics, ProblemKind problem);

enum class ClosureOp { Max, Min, Complement, Sum };
/// Yes, No, or Open (nothing known), for Positive and AlmostSure.
Status closure_status(ValueKind value, Semantics semantics, ClosureOp op);

std::string to_string(ProblemKind p);
std::string to_string(Status s);
std::string to_string(ClosureOp op);
std::optional<ProblemKind> parse_problem(std::string_view s);

/// Result of a decision procedure. `witness` is a lasso word with
/// value >= threshold for a true emptiness instance, or a word with value
/// below the threshold for a false universality instance.
struct Decision {
  bool holds;
  std::optional<LassoWord> witness;
  std::string description;
};

/// Sup problems via subset graphs. AlmostSure is decided through the
/// Universal reading (every run must reach a high edge).
Decision decide_sup(const WeightedAutomaton& a, Semantics semantics, const DecisionProblem& problem);

/// Disc problems; only Positive emptiness and AlmostSure universality.
/// Other cells throw UnsupportedProblem quoting their status.
Decision decide_disc(const WeightedAutomaton& a, Semantics semantics, const DecisionProblem& problem,
                     const Rational& lambda);

/// Dispatch on the value function; limit functions throw UnsupportedProblem.
Decision decide(const WeightedAutomaton& a, const ValueFunction& valfn, Semantics semantics,
                const DecisionProblem& problem);

/// Support graph of `a` as a one-player graph: choices ordered by letter,
/// then successor order. letters[q][i] is the letter of choice i at q.
struct LetteredChoiceGraph {
  ChoiceGraph graph;
  std::vector<std::vector<Letter>> letters;
};
LetteredChoiceGraph choice_graph(const WeightedAutomaton& a);

} // namespace qwa
