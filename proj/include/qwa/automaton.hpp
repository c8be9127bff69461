#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qwa/errors.hpp"
#include "qwa/rational.hpp"

namespace qwa {

using StateId = std::size_t;
using Letter = std::size_t;

/// Ordered, duplicate-free list of letter names.
class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  const std::string& name(Letter l) const { return letters_.at(l); }
  const std::vector<std::string>& letters() const { return letters_; }
  std::optional<Letter> find(std::string_view name) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
  std::vector<std::string> letters_;
};

/// A successor of a (state, letter) pair.
struct Edge {
  StateId to;
  Rational prob;
  Rational weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Probabilistic weighted automaton <Q, rho_I, Sigma, delta, gamma>.
///
/// Rows are stored per (state, letter) as lists of successor edges. The
/// structure may hold invalid data while being assembled; `validate` reports
/// every broken invariant. Algorithms assume a valid automaton.
class WeightedAutomaton {
public:
  WeightedAutomaton() = default;
  WeightedAutomaton(std::vector<std::string> states, Alphabet alphabet);

  std::size_t num_states() const { return states_.size(); }
  const std::vector<std::string>& states() const { return states_; }
  const std::string& state_name(StateId q) const { return states_.at(q); }
  std::optional<StateId> find_state(std::string_view name) const;
  const Alphabet& alphabet() const { return alphabet_; }

  const std::vector<Rational>& initial() const { return initial_; }
  std::vector<StateId> initial_support() const;
  /// The single initial state if rho_I is a Dirac distribution.
  std::optional<StateId> dirac_initial() const;

  std::span<const Edge> edges(StateId q, Letter a) const { return rows_.at(index(q, a)); }

  void set_initial(StateId q, Rational p);
  /// Appends a successor; a repeated `to` in the same row is kept (and
  /// reported by `validate`).
  void add_edge(StateId from, Letter a, StateId to, Rational prob, Rational weight);
  void clear_row(StateId q, Letter a) { rows_.at(index(q, a)).clear(); }

  /// Sorted distinct weights over all edges.
  std::vector<Rational> weights() const;
  bool is_deterministic() const;

  friend bool operator==(const WeightedAutomaton&, const WeightedAutomaton&) = default;

private:
  std::size_t index(StateId q, Letter a) const {
    if (q >= states_.size() || a >= alphabet_.size()) throw std::out_of_range("state or letter out of range");
    return q * alphabet_.size() + a;
  }

  std::vector<std::string> states_;
  Alphabet alphabet_;
  std::vector<Rational> initial_;
  std::vector<std::vector<Edge>> rows_;
};

/// Every violated invariant of `a`; empty iff the automaton is valid.
std::vector<Violation> validate(const WeightedAutomaton& a);

/// Throws ValidationError unless `a` is valid.
void require_valid(const WeightedAutomaton& a);

/// Non-probabilistic automaton obtained by forgetting probabilities.
struct SupportEdge {
  StateId from;
  Letter letter;
  StateId to;
  Rational weight;

  friend bool operator==(const SupportEdge&, const SupportEdge&) = default;
};

struct SupportGraph {
  std::vector<std::string> states;
  Alphabet alphabet;
  std::vector<StateId> initial;
  std::vector<SupportEdge> edges;

  friend bool operator==(const SupportGraph&, const SupportGraph&) = default;
};

SupportGraph support_automaton(const WeightedAutomaton& a);

/// Turns a support graph back into a probabilistic automaton with uniform
/// distributions. Throws std::invalid_argument ("not total") when some
/// (state, letter) has no successor or there is no initial state.
WeightedAutomaton uniformize(const SupportGraph& g);

WeightedAutomaton negate_weights(const WeightedAutomaton& a);

/// Renames states so that all names are distinct, appending primes.
std::vector<std::string> make_unique_names(std::vector<std::string> names);

} // namespace qwa
