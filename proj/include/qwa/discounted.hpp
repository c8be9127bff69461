#pragma once

#include <cstddef>
#include <vector>

#include "qwa/rational.hpp"

namespace qwa {

/// One move out of a node: go to `to`, collecting `weight`.
struct Choice {
  std::size_t to;
  Rational weight;
};

/// Finite one-player graph; out[n] lists the choices of node n in a fixed
/// order, which is the tie-break order of the solver.
using ChoiceGraph = std::vector<std::vector<Choice>>;

enum class Optimize { Max, Min };

struct DiscountedSolution {
  std::vector<Rational> values;
  std::vector<std::size_t> policy; // index into out[n]
};

/// Unique fixpoint of V(n) = opt_c [w_c + lambda V(to_c)], by exact policy
/// iteration. Each round switches every node whose best choice is strictly
/// better than its current one, preferring the lowest index on ties.
/// Throws std::invalid_argument on a node without choices or a bad lambda.
DiscountedSolution optimal_discounted_value(const ChoiceGraph& g, const Rational& lambda, Optimize mode);

/// Values of the positional policy `policy` (one choice per node).
std::vector<Rational> policy_values(const ChoiceGraph& g, const Rational& lambda,
                                    const std::vector<std::size_t>& policy);

} // namespace qwa
