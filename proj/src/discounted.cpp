#include "qwa/discounted.hpp"

#include <stdexcept>

namespace qwa {

std::vector<Rational> policy_values(const ChoiceGraph& g, const Rational& lambda,
                                    const std::vector<std::size_t>& policy) {
  const std::size_t n = g.size();
  enum Mark : unsigned char { Fresh, OnPath, Done };
  std::vector<Mark> mark(n, Fresh);
  std::vector<Rational> v(n);

  auto next = [&](std::size_t x) { return g[x][policy[x]].to; };
  auto weight = [&](std::size_t x) -> const Rational& { return g[x][policy[x]].weight; };

  for (std::size_t start = 0; start < n; ++start) {
    if (mark[start] == Done) continue;
    std::vector<std::size_t> path;
    std::size_t x = start;
    while (mark[x] == Fresh) {
      mark[x] = OnPath;
      path.push_back(x);
      x = next(x);
    }
    std::size_t stop = path.size();
    if (mark[x] == OnPath) {
      // x closes a cycle: path[k..] with path[k] == x
      std::size_t k = 0;
      while (path[k] != x) ++k;
      Rational sum, scale(1);
      for (std::size_t i = k; i < path.size(); ++i) {
        sum += scale * weight(path[i]);
        scale *= lambda;
      }
      v[x] = sum / (Rational(1) - scale);
      mark[x] = Done;
      for (std::size_t i = path.size(); i-- > k + 1;) {
        v[path[i]] = weight(path[i]) + lambda * v[next(path[i])];
        mark[path[i]] = Done;
      }
      stop = k;
    }
    for (std::size_t i = stop; i-- > 0;) {
      v[path[i]] = weight(path[i]) + lambda * v[next(path[i])];
      mark[path[i]] = Done;
    }
  }
  return v;
}

DiscountedSolution optimal_discounted_value(const ChoiceGraph& g, const Rational& lambda, Optimize mode) {
  if (lambda.sign() <= 0 || lambda >= Rational(1))
    throw std::invalid_argument("discount factor must lie strictly between 0 and 1");
  for (std::size_t x = 0; x < g.size(); ++x)
    if (g[x].empty()) throw std::invalid_argument("dead-end node " + std::to_string(x) + " in discounted game");

  auto better = [&](const Rational& a, const Rational& b) { return mode == Optimize::Max ? a > b : a < b; };

  DiscountedSolution s;
  s.policy.assign(g.size(), 0);
  while (true) {
    s.values = policy_values(g, lambda, s.policy);
    bool changed = false;
    for (std::size_t x = 0; x < g.size(); ++x) {
      std::size_t best = s.policy[x];
      Rational best_value = s.values[x];
      for (std::size_t c = 0; c < g[x].size(); ++c) {
        const Rational q = g[x][c].weight + lambda * s.values[g[x][c].to];
        if (better(q, best_value)) {
          best = c;
          best_value = q;
        }
      }
      if (best != s.policy[x]) {
        s.policy[x] = best;
        changed = true;
      }
    }
    if (!changed) break;
  }

  for (std::size_t x = 0; x < g.size(); ++x)
    for (const auto& c : g[x])
      if (better(c.weight + lambda * s.values[c.to], s.values[x]))
        throw std::logic_error("policy iteration stopped before the fixpoint");
  return s;
}

} // namespace qwa
