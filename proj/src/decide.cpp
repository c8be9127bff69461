#include "qwa/decide.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "qwa/graph.hpp"

namespace qwa {

namespace {

using Subset = std::vector<StateId>; // sorted, duplicate-free
using Step = std::function<std::optional<Subset>(const Subset&, Letter)>;

struct SubsetGraph {
  std::vector<Subset> nodes;
  std::vector<std::vector<std::pair<Letter, std::size_t>>> out;
  std::vector<std::pair<std::size_t, Letter>> parent; // BFS tree; root points to itself
};

SubsetGraph explore(const Subset& start, std::size_t letters, const Step& step) {
  SubsetGraph g;
  std::map<Subset, std::size_t> id;
  auto intern = [&](const Subset& s, std::size_t from, Letter l) {
    auto [it, fresh] = id.emplace(s, g.nodes.size());
    if (fresh) {
      g.nodes.push_back(s);
      g.out.emplace_back();
      g.parent.push_back({from, l});
    }
    return it->second;
  };
  intern(start, 0, 0);
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    for (Letter l = 0; l < letters; ++l)
      if (auto next = step(g.nodes[i], l)) {
        const std::size_t j = intern(*next, i, l);
        g.out[i].push_back({l, j});
      }
  return g;
}

std::vector<Letter> path_to(const SubsetGraph& g, std::size_t node) {
  std::vector<Letter> letters;
  while (node != 0) {
    letters.push_back(g.parent[node].second);
    node = g.parent[node].first;
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

// Some reachable node lying on a cycle, as prefix letters + cycle letters.
std::optional<LassoWord> find_lasso(const SubsetGraph& g) {
  Adjacency adj(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    for (const auto& [l, j] : g.out[i]) adj[i].push_back(j);
  const auto comps = strongly_connected_components(adj);
  std::vector<std::size_t> comp_of(g.nodes.size());
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (std::size_t n : comps[c]) comp_of[n] = c;

  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    const bool cyclic = std::any_of(g.out[v].begin(), g.out[v].end(),
                                    [&](const auto& e) { return comp_of[e.second] == comp_of[v]; });
    if (!cyclic) continue;
    // shortest cycle through v inside its component
    std::vector<std::optional<std::pair<std::size_t, Letter>>> prev(g.nodes.size());
    std::deque<std::size_t> queue;
    std::optional<std::pair<std::size_t, Letter>> closing;
    queue.push_back(v);
    while (!queue.empty() && !closing) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (const auto& [l, y] : g.out[x]) {
        if (comp_of[y] != comp_of[v]) continue;
        if (y == v) {
          closing = std::pair{x, l};
          break;
        }
        if (!prev[y]) {
          prev[y] = std::pair{x, l};
          queue.push_back(y);
        }
      }
    }
    std::vector<Letter> cycle = {closing->second};
    for (std::size_t x = closing->first; x != v; x = prev[x]->first) cycle.push_back(prev[x]->second);
    std::reverse(cycle.begin(), cycle.end());
    return LassoWord(path_to(g, v), cycle);
  }
  return std::nullopt;
}

Subset successors(const WeightedAutomaton& a, const Subset& from, Letter l, const std::function<bool(const Edge&)>& keep) {
  Subset out;
  for (StateId q : from)
    for (const auto& e : a.edges(q, l))
      if (e.prob.sign() > 0 && keep(e)) out.push_back(e.to);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Decision positive_emptiness(const WeightedAutomaton& a, const Rational& nu) {
  // BFS over states for a reachable edge of weight >= nu
  const std::size_t k = a.alphabet().size();
  std::vector<std::optional<std::pair<StateId, Letter>>> prev(a.num_states());
  std::vector<bool> seen(a.num_states(), false);
  std::deque<StateId> queue;
  for (StateId q : a.initial_support()) {
    seen[q] = true;
    queue.push_back(q);
  }
  while (!queue.empty()) {
    const StateId q = queue.front();
    queue.pop_front();
    for (Letter l = 0; l < k; ++l)
      for (const auto& e : a.edges(q, l)) {
        if (e.prob.sign() <= 0) continue;
        if (e.weight >= nu) {
          std::vector<Letter> word = {l};
          for (StateId x = q; prev[x]; x = prev[x]->first) word.push_back(prev[x]->second);
          std::reverse(word.begin(), word.end());
          return {true, LassoWord(word, {0}),
                  "reachable edge " + a.state_name(q) + " -" + a.alphabet().name(l) + "-> " + a.state_name(e.to) +
                      " of weight " + e.weight.str()};
        }
        if (!seen[e.to]) {
          seen[e.to] = true;
          prev[e.to] = std::pair{q, l};
          queue.push_back(e.to);
        }
      }
  }
  return {false, std::nullopt, "no reachable edge of weight >= " + nu.str()};
}

Decision universal_emptiness(const WeightedAutomaton& a, const Rational& nu) {
  const auto low = [&](const Edge& e) { return e.weight < nu; };
  const auto g = explore(a.initial_support(), a.alphabet().size(),
                         [&](const Subset& s, Letter l) -> std::optional<Subset> {
                           if (s.empty()) return std::nullopt;
                           return successors(a, s, l, low);
                         });
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    if (g.nodes[i].empty())
      return {true, LassoWord(path_to(g, i), {0}),
              "survivor subset graph reaches {}: after the prefix every run has taken an edge of weight >= " + nu.str()};
  return {false, std::nullopt, "survivor subset graph never reaches {} (" + std::to_string(g.nodes.size()) + " subsets)"};
}

Decision positive_universality(const WeightedAutomaton& a, const Rational& nu) {
  const auto g = explore(a.initial_support(), a.alphabet().size(),
                         [&](const Subset& s, Letter l) -> std::optional<Subset> {
                           for (StateId q : s)
                             for (const auto& e : a.edges(q, l))
                               if (e.prob.sign() > 0 && e.weight >= nu) return std::nullopt;
                           return successors(a, s, l, [](const Edge&) { return true; });
                         });
  if (auto w = find_lasso(g))
    return {false, *w, "reachable subset cycle on which no run takes an edge of weight >= " + nu.str()};
  return {true, std::nullopt, "every word has a run reaching an edge of weight >= " + nu.str()};
}

Decision universal_universality(const WeightedAutomaton& a, const Rational& nu) {
  const auto low = [&](const Edge& e) { return e.weight < nu; };
  const auto g = explore(a.initial_support(), a.alphabet().size(),
                         [&](const Subset& s, Letter l) -> std::optional<Subset> {
                           auto next = successors(a, s, l, low);
                           if (next.empty()) return std::nullopt;
                           return next;
                         });
  if (auto w = find_lasso(g))
    return {false, *w, "non-empty survivor subset cycle: some run avoids weight >= " + nu.str() + " forever"};
  return {true, std::nullopt, "every run of every word takes an edge of weight >= " + nu.str()};
}

} // namespace

LetteredChoiceGraph choice_graph(const WeightedAutomaton& a) {
  LetteredChoiceGraph g;
  g.graph.resize(a.num_states());
  g.letters.resize(a.num_states());
  for (StateId q = 0; q < a.num_states(); ++q)
    for (Letter l = 0; l < a.alphabet().size(); ++l)
      for (const auto& e : a.edges(q, l))
        if (e.prob.sign() > 0) {
          g.graph[q].push_back({e.to, e.weight});
          g.letters[q].push_back(l);
        }
  return g;
}

Decision decide_sup(const WeightedAutomaton& a, Semantics semantics, const DecisionProblem& problem) {
  const bool existential = semantics == Semantics::Positive || semantics == Semantics::Nondeterministic;
  if (problem.kind == ProblemKind::Emptiness)
    return existential ? positive_emptiness(a, problem.threshold) : universal_emptiness(a, problem.threshold);
  return existential ? positive_universality(a, problem.threshold) : universal_universality(a, problem.threshold);
}

Decision decide_disc(const WeightedAutomaton& a, Semantics semantics, const DecisionProblem& problem,
                     const Rational& lambda) {
  const bool pos_empty = semantics == Semantics::Positive && problem.kind == ProblemKind::Emptiness;
  const bool as_univ = semantics == Semantics::AlmostSure && problem.kind == ProblemKind::Universality;
  if (!pos_empty && !as_univ) {
    if (semantics != Semantics::Positive && semantics != Semantics::AlmostSure)
      throw UnsupportedProblem("Disc " + to_string(problem.kind) + " is only provided for Positive and AlmostSure");
    const auto c = classify(ValueKind::Disc, semantics, problem.kind);
    throw UnsupportedProblem(to_string(c.status) + " per Table 1" + (c.note.empty() ? "" : ": " + c.note));
  }

  const auto g = choice_graph(a);
  const auto sol = optimal_discounted_value(g.graph, lambda, pos_empty ? Optimize::Max : Optimize::Min);
  std::optional<StateId> best;
  for (StateId q : a.initial_support())
    if (!best || (pos_empty ? sol.values[q] > sol.values[*best] : sol.values[q] < sol.values[*best])) best = q;
  const Rational value = sol.values[*best];
  const bool holds = value >= problem.threshold;

  // the optimal positional path from the best initial state, as a lasso word
  std::vector<Letter> letters;
  std::vector<StateId> visited;
  StateId q = *best;
  while (std::find(visited.begin(), visited.end(), q) == visited.end()) {
    visited.push_back(q);
    letters.push_back(g.letters[q][sol.policy[q]]);
    q = g.graph[q][sol.policy[q]].to;
  }
  const auto cut = static_cast<std::ptrdiff_t>(std::find(visited.begin(), visited.end(), q) - visited.begin());
  LassoWord path({letters.begin(), letters.begin() + cut}, {letters.begin() + cut, letters.end()});

  const std::string desc = std::string(pos_empty ? "max" : "min") + " discounted value " + value.str() + " from " +
                           a.state_name(*best);
  const bool show = pos_empty ? holds : !holds;
  return {holds, show ? std::optional<LassoWord>(path) : std::nullopt, desc};
}

Decision decide(const WeightedAutomaton& a, const ValueFunction& valfn, Semantics semantics,
                const DecisionProblem& problem) {
  switch (valfn.kind()) {
    case ValueKind::Sup: return decide_sup(a, semantics, problem);
    case ValueKind::Disc: return decide_disc(a, semantics, problem, valfn.discount());
    default: break;
  }
  if (semantics != Semantics::Positive && semantics != Semantics::AlmostSure)
    throw UnsupportedProblem(to_string(valfn.kind()) + " " + to_string(problem.kind) + " under " +
                             to_string(semantics) + " semantics is not covered");
  const auto c = classify(valfn.kind(), semantics, problem.kind);
  if (c.status == Status::Decidable)
    throw UnsupportedProblem("Decidable, but no procedure is implemented for this cell");
  throw UnsupportedProblem(to_string(c.status) + " per Table 1");
}

} // namespace qwa
