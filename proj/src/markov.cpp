#include "qwa/markov.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "qwa/linear.hpp"

namespace qwa {

std::optional<std::size_t> ProductChain::find(StateId q, std::size_t position) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].state == q && nodes[i].position == position) return i;
  return std::nullopt;
}

std::vector<std::size_t> ProductChain::initial_support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < initial.size(); ++i)
    if (initial[i].sign() > 0) out.push_back(i);
  return out;
}

Adjacency ProductChain::adjacency() const {
  Adjacency adj(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (const auto& e : out[i]) adj[i].push_back(e.to);
  return adj;
}

ProductChain build_product(const WeightedAutomaton& a, const LassoWord& word) {
  word.check_letters(a.alphabet().size());
  const std::size_t period = word.period_end();
  std::vector<std::size_t> id(a.num_states() * period, SIZE_MAX);
  ProductChain chain;
  std::vector<std::size_t> work;

  auto intern = [&](StateId q, std::size_t p) {
    std::size_t& slot = id[q * period + p];
    if (slot == SIZE_MAX) {
      slot = chain.nodes.size();
      chain.nodes.push_back({q, p});
      chain.out.emplace_back();
      chain.initial.emplace_back();
      work.push_back(slot);
    }
    return slot;
  };

  for (StateId q : a.initial_support()) chain.initial[intern(q, 0)] = a.initial()[q];

  while (!work.empty()) {
    const std::size_t n = work.back();
    work.pop_back();
    const auto [q, p] = chain.nodes[n];
    const std::size_t next = word.next_position(p);
    std::vector<ChainEdge> edges;
    for (const auto& e : a.edges(q, word.letter_at(p)))
      if (e.prob.sign() > 0) edges.push_back({intern(e.to, next), e.prob, e.weight});
    chain.out[n] = std::move(edges);
  }
  return chain;
}

std::vector<RecurrentClass> bottom_sccs(const ProductChain& chain) {
  const auto comps = strongly_connected_components(chain.adjacency());
  std::vector<std::size_t> comp_of(chain.size());
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (std::size_t n : comps[c]) comp_of[n] = c;

  std::vector<RecurrentClass> out;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    bool bottom = true;
    RecurrentClass cls;
    cls.nodes = comps[c];
    for (std::size_t n : comps[c])
      for (const auto& e : chain.out[n]) {
        if (comp_of[e.to] != c) bottom = false;
        else cls.internal_edges.push_back({n, e.to, e.prob, e.weight});
      }
    if (bottom) out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(),
            [](const RecurrentClass& x, const RecurrentClass& y) { return x.nodes.front() < y.nodes.front(); });
  return out;
}

std::vector<Rational> absorption_probabilities(const ProductChain& chain,
                                               const std::vector<RecurrentClass>& classes) {
  constexpr std::size_t none = SIZE_MAX;
  std::vector<std::size_t> class_of(chain.size(), none);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::size_t n : classes[c].nodes) class_of[n] = c;

  std::vector<std::size_t> transient, local(chain.size(), none);
  for (std::size_t n = 0; n < chain.size(); ++n)
    if (class_of[n] == none) {
      local[n] = transient.size();
      transient.push_back(n);
    }

  std::vector<Rational> result(classes.size());
  for (std::size_t n = 0; n < chain.size(); ++n)
    if (class_of[n] != none) result[class_of[n]] += chain.initial[n];
  if (transient.empty() || classes.empty()) return result;

  // x_c(n) = sum_{n' transient} P(n,n') x_c(n') + P(n, class c)
  const std::size_t t = transient.size();
  Matrix a(t, t);
  Matrix b(t, classes.size());
  for (std::size_t i = 0; i < t; ++i) {
    a(i, i) += Rational(1);
    for (const auto& e : chain.out[transient[i]]) {
      if (class_of[e.to] == none) a(i, local[e.to]) -= e.prob;
      else b(i, class_of[e.to]) += e.prob;
    }
  }
  const Matrix x = solve(std::move(a), std::move(b));
  for (std::size_t i = 0; i < t; ++i) {
    const Rational& mass = chain.initial[transient[i]];
    if (mass.is_zero()) continue;
    for (std::size_t c = 0; c < classes.size(); ++c) result[c] += mass * x(i, c);
  }
  return result;
}

std::vector<Rational> stationary_distribution(const RecurrentClass& cls) {
  const std::size_t k = cls.nodes.size();
  std::map<std::size_t, std::size_t> local;
  for (std::size_t i = 0; i < k; ++i) local[cls.nodes[i]] = i;

  // Row j: sum_i pi_i P(i,j) - pi_j = 0, with row 0 replaced by sum pi = 1.
  Matrix a(k, k);
  std::vector<Rational> b(k);
  for (std::size_t j = 0; j < k; ++j) a(j, j) -= Rational(1);
  for (const auto& e : cls.internal_edges) a(local.at(e.to), local.at(e.from)) += e.prob;
  for (std::size_t i = 0; i < k; ++i) a(0, i) = Rational(1);
  b[0] = Rational(1);
  return solve(std::move(a), b);
}

Rational class_value(const ValueFunction& valfn, const RecurrentClass& cls, std::span<const Rational> stationary) {
  if (cls.internal_edges.empty()) throw std::invalid_argument("recurrent class without edges");
  auto by_weight = [](const ClassEdge& x, const ClassEdge& y) { return x.weight < y.weight; };
  const auto& es = cls.internal_edges;
  switch (valfn.kind()) {
    case ValueKind::LimSup: return std::max_element(es.begin(), es.end(), by_weight)->weight;
    case ValueKind::LimInf: return std::min_element(es.begin(), es.end(), by_weight)->weight;
    case ValueKind::LimAvg: {
      std::vector<Rational> owned;
      if (stationary.empty()) {
        owned = stationary_distribution(cls);
        stationary = owned;
      }
      if (stationary.size() != cls.nodes.size()) throw std::invalid_argument("stationary distribution size mismatch");
      std::map<std::size_t, std::size_t> local;
      for (std::size_t i = 0; i < cls.nodes.size(); ++i) local[cls.nodes[i]] = i;
      Rational total;
      for (const auto& e : es) total += stationary[local.at(e.from)] * e.prob * e.weight;
      return total;
    }
    case ValueKind::Sup:
    case ValueKind::Disc: break;
  }
  throw std::invalid_argument("class_value needs LimSup, LimInf or LimAvg, got " + to_string(valfn.kind()));
}

} // namespace qwa
