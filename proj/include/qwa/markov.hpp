#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qwa/automaton.hpp"
#include "qwa/graph.hpp"
#include "qwa/rational.hpp"
#include "qwa/value.hpp"

namespace qwa {

/// (state, word position). Positions index prefix . loop; the loop wraps.
struct ChainNode {
  StateId state;
  std::size_t position;

  friend bool operator==(const ChainNode&, const ChainNode&) = default;
};

struct ChainEdge {
  std::size_t to;
  Rational prob;
  Rational weight;

  friend bool operator==(const ChainEdge&, const ChainEdge&) = default;
};

/// Markov chain of an automaton reading a fixed lasso word. Only nodes
/// reachable from the initial support are present, and only edges with
/// positive probability.
struct ProductChain {
  std::vector<ChainNode> nodes;
  std::vector<std::vector<ChainEdge>> out;
  std::vector<Rational> initial; // indexed like nodes

  std::size_t size() const { return nodes.size(); }
  std::optional<std::size_t> find(StateId q, std::size_t position) const;
  std::vector<std::size_t> initial_support() const;
  Adjacency adjacency() const;
};

ProductChain build_product(const WeightedAutomaton& a, const LassoWord& word);

struct ClassEdge {
  std::size_t from;
  std::size_t to;
  Rational prob;
  Rational weight;
};

/// Bottom SCC of a chain. Node ids refer to the chain, sorted ascending.
struct RecurrentClass {
  std::vector<std::size_t> nodes;
  std::vector<ClassEdge> internal_edges;
};

std::vector<RecurrentClass> bottom_sccs(const ProductChain& chain);

/// Probability of eventually entering each class, aligned with `classes`.
std::vector<Rational> absorption_probabilities(const ProductChain& chain,
                                               const std::vector<RecurrentClass>& classes);

/// Stationary distribution of the class, aligned with cls.nodes.
std::vector<Rational> stationary_distribution(const RecurrentClass& cls);

/// Value reached almost surely by runs trapped in `cls`. For LimAvg the
/// stationary distribution is computed when `stationary` is empty.
Rational class_value(const ValueFunction& valfn, const RecurrentClass& cls,
                     std::span<const Rational> stationary = {});

} // namespace qwa
