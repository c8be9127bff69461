#include "qwa/eval.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "qwa/discounted.hpp"
#include "qwa/graph.hpp"

namespace qwa {

namespace {

struct SccInfo {
  std::vector<std::vector<std::size_t>> comps;
  std::vector<std::size_t> comp_of;
};

SccInfo sccs_of(const Adjacency& adj) {
  SccInfo s;
  s.comps = strongly_connected_components(adj);
  s.comp_of.assign(adj.size(), 0);
  for (std::size_t c = 0; c < s.comps.size(); ++c)
    for (std::size_t n : s.comps[c]) s.comp_of[n] = c;
  return s;
}

// Does the subgraph of edges accepted by `keep` contain a cycle?
template <class Keep>
bool has_cycle(const ProductChain& chain, Keep keep) {
  Adjacency adj(chain.size());
  for (std::size_t n = 0; n < chain.size(); ++n)
    for (const auto& e : chain.out[n])
      if (keep(e)) adj[n].push_back(e.to);
  const auto s = sccs_of(adj);
  for (std::size_t n = 0; n < chain.size(); ++n)
    for (std::size_t m : adj[n])
      if (s.comp_of[n] == s.comp_of[m]) return true;
  return false;
}

std::vector<Rational> chain_weights(const ProductChain& chain) {
  std::vector<Rational> ws;
  for (const auto& row : chain.out)
    for (const auto& e : row) ws.push_back(e.weight);
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  return ws;
}

// Karp's maximum mean cycle on one strongly connected component.
Rational karp_max_mean(const ProductChain& chain, const std::vector<std::size_t>& comp,
                       const std::vector<std::size_t>& comp_of, std::size_t cid) {
  const std::size_t k = comp.size();
  std::vector<std::size_t> local(chain.size(), SIZE_MAX);
  for (std::size_t i = 0; i < k; ++i) local[comp[i]] = i;

  // d[j][v]: best weight of a walk of exactly j edges from comp[0] to v
  std::vector<std::vector<std::optional<Rational>>> d(k + 1, std::vector<std::optional<Rational>>(k));
  d[0][0] = Rational(0);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t v = 0; v < k; ++v) {
      if (!d[j][v]) continue;
      for (const auto& e : chain.out[comp[v]]) {
        if (comp_of[e.to] != cid) continue;
        auto& slot = d[j + 1][local[e.to]];
        const Rational cand = *d[j][v] + e.weight;
        if (!slot || cand > *slot) slot = cand;
      }
    }

  std::optional<Rational> best;
  for (std::size_t v = 0; v < k; ++v) {
    if (!d[k][v]) continue;
    std::optional<Rational> worst;
    for (std::size_t j = 0; j < k; ++j) {
      if (!d[j][v]) continue;
      const Rational r = (*d[k][v] - *d[j][v]) / Rational(static_cast<long>(k - j));
      if (!worst || r < *worst) worst = r;
    }
    if (worst && (!best || *worst > *best)) best = worst;
  }
  if (!best) throw std::logic_error("component without a cycle");
  return *best;
}

// Probability-free limit values over every cycle reachable in the product.
Rational support_limit_value(const ProductChain& chain, const ValueFunction& valfn, bool maximize) {
  const auto ws = chain_weights(chain);
  if (valfn.kind() == ValueKind::LimAvg) return extreme_cycle_mean(chain, maximize);
  if (valfn.kind() == ValueKind::LimSup && !maximize) {
    // min over cycles of the max weight
    for (const auto& t : ws)
      if (has_cycle(chain, [&](const ChainEdge& e) { return e.weight <= t; })) return t;
  }
  if (valfn.kind() == ValueKind::LimInf && maximize) {
    // max over cycles of the min weight
    for (auto it = ws.rbegin(); it != ws.rend(); ++it)
      if (has_cycle(chain, [&](const ChainEdge& e) { return e.weight >= *it; })) return *it;
  }
  throw std::logic_error("support_limit_value: unexpected case");
}

Rational max_edge_on_cycle(const ProductChain& chain) {
  // max over cycles of the max weight = max weight of an edge inside an SCC
  const auto s = sccs_of(chain.adjacency());
  std::optional<Rational> best;
  for (std::size_t n = 0; n < chain.size(); ++n)
    for (const auto& e : chain.out[n])
      if (s.comp_of[n] == s.comp_of[e.to] && (!best || e.weight > *best)) best = e.weight;
  return *best;
}

Rational min_edge_on_cycle(const ProductChain& chain) {
  const auto s = sccs_of(chain.adjacency());
  std::optional<Rational> best;
  for (std::size_t n = 0; n < chain.size(); ++n)
    for (const auto& e : chain.out[n])
      if (s.comp_of[n] == s.comp_of[e.to] && (!best || e.weight < *best)) best = e.weight;
  return *best;
}

Rational sup_universal(const ProductChain& chain) {
  // smallest t such that some initial node has an infinite run on edges <= t
  for (const auto& t : chain_weights(chain)) {
    std::vector<bool> alive(chain.size(), true);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t n = 0; n < chain.size(); ++n) {
        if (!alive[n]) continue;
        const bool ok = std::any_of(chain.out[n].begin(), chain.out[n].end(),
                                    [&](const ChainEdge& e) { return e.weight <= t && alive[e.to]; });
        if (!ok) {
          alive[n] = false;
          changed = true;
        }
      }
    }
    for (std::size_t n : chain.initial_support())
      if (alive[n]) return t;
  }
  throw std::logic_error("sup_universal: no threshold admits an infinite run");
}

// P(some edge of weight >= eta is taken) == 1 ?
bool surely_hits(const ProductChain& chain, const Rational& eta) {
  // Nodes reachable from the initial support through low edges only.
  Adjacency low(chain.size());
  Adjacency reverse(chain.size());
  std::vector<bool> emits_high(chain.size(), false);
  for (std::size_t n = 0; n < chain.size(); ++n)
    for (const auto& e : chain.out[n]) {
      if (e.weight >= eta) emits_high[n] = true;
      else {
        low[n].push_back(e.to);
        reverse[e.to].push_back(n);
      }
    }
  const auto live = reachable_from(low, chain.initial_support());
  // Every live node must be able to reach a high edge along low edges.
  std::vector<std::size_t> seeds;
  for (std::size_t n = 0; n < chain.size(); ++n)
    if (emits_high[n]) seeds.push_back(n);
  const auto can_hit = reachable_from(reverse, seeds);
  for (std::size_t n = 0; n < chain.size(); ++n)
    if (live[n] && !can_hit[n]) return false;
  return true;
}

Rational sup_almost_sure(const ProductChain& chain) {
  const auto ws = chain_weights(chain);
  for (auto it = ws.rbegin(); it != ws.rend(); ++it)
    if (surely_hits(chain, *it)) return *it;
  throw std::logic_error("sup_almost_sure: minimum weight must be hit surely");
}

Rational discounted(const ProductChain& chain, const Rational& lambda, bool maximize) {
  ChoiceGraph g(chain.size());
  for (std::size_t n = 0; n < chain.size(); ++n)
    for (const auto& e : chain.out[n]) g[n].push_back({e.to, e.weight});
  const auto sol = optimal_discounted_value(g, lambda, maximize ? Optimize::Max : Optimize::Min);
  std::optional<Rational> best;
  for (std::size_t n : chain.initial_support())
    if (!best || (maximize ? sol.values[n] > *best : sol.values[n] < *best)) best = sol.values[n];
  return *best;
}

} // namespace

Rational ValueDistribution::probability_at_least(const Rational& eta) const {
  Rational p;
  for (auto it = atoms.lower_bound(eta); it != atoms.end(); ++it) p += it->second;
  return p;
}

Rational extreme_cycle_mean(const ProductChain& chain, bool maximize) {
  const auto s = sccs_of(chain.adjacency());
  std::optional<Rational> best;
  for (std::size_t c = 0; c < s.comps.size(); ++c) {
    const auto& comp = s.comps[c];
    bool cyclic = false;
    for (std::size_t n : comp)
      for (const auto& e : chain.out[n])
        if (s.comp_of[e.to] == c) cyclic = true;
    if (!cyclic) continue;
    Rational m;
    if (maximize) {
      m = karp_max_mean(chain, comp, s.comp_of, c);
    } else {
      ProductChain neg = chain;
      for (auto& row : neg.out)
        for (auto& e : row) e.weight = -e.weight;
      m = -karp_max_mean(neg, comp, s.comp_of, c);
    }
    if (!best || (maximize ? m > *best : m < *best)) best = m;
  }
  if (!best) throw std::logic_error("chain without a cycle");
  return *best;
}

ValueDistribution value_distribution(const WeightedAutomaton& a, const ValueFunction& valfn, const LassoWord& word) {
  if (!valfn.is_limit())
    throw std::invalid_argument("value distribution is only defined here for LimSup, LimInf and LimAvg");
  const auto chain = build_product(a, word);
  const auto classes = bottom_sccs(chain);
  const auto absorb = absorption_probabilities(chain, classes);
  ValueDistribution d;
  for (std::size_t c = 0; c < classes.size(); ++c) d.atoms[class_value(valfn, classes[c])] += absorb[c];
  return d;
}

Rational evaluate(const WeightedAutomaton& a, const ValueFunction& valfn, Semantics semantics, const LassoWord& word) {
  const auto chain = build_product(a, word);
  const bool maximize = semantics == Semantics::Positive || semantics == Semantics::Nondeterministic;

  switch (valfn.kind()) {
    case ValueKind::LimSup:
    case ValueKind::LimInf:
    case ValueKind::LimAvg: {
      if (semantics == Semantics::Nondeterministic || semantics == Semantics::Universal) {
        if (valfn.kind() == ValueKind::LimSup && maximize) return max_edge_on_cycle(chain);
        if (valfn.kind() == ValueKind::LimInf && !maximize) return min_edge_on_cycle(chain);
        return support_limit_value(chain, valfn, maximize);
      }
      // Every bottom class of the pruned chain is reached with positive
      // probability, so the extreme atoms are the extreme class values.
      std::optional<Rational> best;
      for (const auto& cls : bottom_sccs(chain)) {
        const Rational v = class_value(valfn, cls);
        if (!best || (maximize ? v > *best : v < *best)) best = v;
      }
      return *best;
    }
    case ValueKind::Sup:
      switch (semantics) {
        case Semantics::Positive:
        case Semantics::Nondeterministic: return chain_weights(chain).back();
        case Semantics::Universal: return sup_universal(chain);
        case Semantics::AlmostSure: return sup_almost_sure(chain);
      }
      break;
    case ValueKind::Disc: return discounted(chain, valfn.discount(), maximize);
  }
  throw std::logic_error("evaluate: unhandled case");
}

} // namespace qwa
