#include "qwa/construct.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace qwa {

namespace {

void require_same_alphabet(const WeightedAutomaton& a1, const WeightedAutomaton& a2) {
  if (!(a1.alphabet() == a2.alphabet())) throw std::invalid_argument("operands have different alphabets");
}

// Incremental builder: states are created on demand from a key and then
// explored breadth-first, so only reachable states exist.
template <class Key>
class Explorer {
public:
  StateId intern(const Key& k, const std::string& name) {
    auto [it, fresh] = ids_.emplace(k, names_.size());
    if (fresh) {
      names_.push_back(name);
      keys_.push_back(k);
    }
    return it->second;
  }
  bool has_pending() const { return next_ < keys_.size(); }
  std::pair<StateId, Key> pop() {
    const StateId id = next_++;
    return {id, keys_[id]};
  }
  const std::vector<std::string>& names() const { return names_; }

private:
  std::map<Key, StateId> ids_;
  std::vector<std::string> names_;
  std::vector<Key> keys_;
  std::size_t next_ = 0;
};

struct PendingEdge {
  StateId from;
  Letter letter;
  StateId to;
  Rational prob;
  Rational weight;
};

WeightedAutomaton assemble(const std::vector<std::string>& names, const Alphabet& sigma,
                           const std::vector<std::pair<StateId, Rational>>& initial,
                           const std::vector<PendingEdge>& edges) {
  WeightedAutomaton out(make_unique_names(names), sigma);
  for (const auto& [q, p] : initial) out.set_initial(q, out.initial()[q] + p);
  for (const auto& e : edges) out.add_edge(e.from, e.letter, e.to, e.prob, e.weight);
  return out;
}

Rational combine(Combiner c, const Rational& x, const Rational& y) {
  switch (c) {
    case Combiner::Max: return std::max(x, y);
    case Combiner::Min: return std::min(x, y);
    case Combiner::Sum: return x + y;
  }
  return x;
}

} // namespace

WeightedAutomaton with_dirac_initial(const WeightedAutomaton& a) {
  if (a.dirac_initial()) return a;
  const std::size_t n = a.num_states();
  const std::size_t k = a.alphabet().size();

  // rows[l]: (target, weight) -> mixed probability, in first-seen order
  std::vector<std::vector<std::pair<std::pair<StateId, Rational>, Rational>>> rows(k);
  for (Letter l = 0; l < k; ++l)
    for (StateId q : a.initial_support())
      for (const auto& e : a.edges(q, l)) {
        auto& row = rows[l];
        auto it = std::find_if(row.begin(), row.end(),
                               [&](const auto& x) { return x.first.first == e.to && x.first.second == e.weight; });
        const Rational mass = a.initial()[q] * e.prob;
        if (it == row.end()) row.push_back({{e.to, e.weight}, mass});
        else it->second += mass;
      }

  // clone targets that appear with several weights in one row
  std::vector<std::string> names = a.states();
  std::vector<StateId> clone_of; // clone index -> original
  std::vector<std::vector<std::pair<std::pair<StateId, Rational>, Rational>>> fresh_rows(k);
  std::map<StateId, std::size_t> clones_needed;
  for (Letter l = 0; l < k; ++l) {
    std::map<StateId, std::size_t> seen;
    for (const auto& entry : rows[l]) {
      const std::size_t idx = seen[entry.first.first]++;
      clones_needed[entry.first.first] = std::max(clones_needed[entry.first.first], idx);
    }
  }
  std::map<std::pair<StateId, std::size_t>, StateId> clone_id;
  for (const auto& [q, count] : clones_needed)
    for (std::size_t i = 1; i <= count; ++i) {
      clone_id[{q, i}] = names.size();
      clone_of.push_back(q);
      names.push_back(a.state_name(q) + "'");
    }
  const StateId init = names.size();
  names.push_back("init");

  WeightedAutomaton out(make_unique_names(names), a.alphabet());
  out.set_initial(init, Rational(1));
  for (StateId q = 0; q < n; ++q)
    for (Letter l = 0; l < k; ++l)
      for (const auto& e : a.edges(q, l)) out.add_edge(q, l, e.to, e.prob, e.weight);
  for (std::size_t c = 0; c < clone_of.size(); ++c)
    for (Letter l = 0; l < k; ++l)
      for (const auto& e : a.edges(clone_of[c], l)) out.add_edge(n + c, l, e.to, e.prob, e.weight);
  for (Letter l = 0; l < k; ++l) {
    std::map<StateId, std::size_t> seen;
    for (const auto& [tw, p] : rows[l]) {
      const std::size_t idx = seen[tw.first]++;
      const StateId target = idx == 0 ? tw.first : clone_id.at({tw.first, idx});
      out.add_edge(init, l, target, p, tw.second);
    }
  }
  return out;
}

WeightedAutomaton initial_choice(const std::vector<WeightedAutomaton>& operands) {
  if (operands.empty()) throw std::invalid_argument("initial_choice needs at least one operand");
  for (const auto& op : operands) require_same_alphabet(operands.front(), op);
  const Alphabet& sigma = operands.front().alphabet();

  std::vector<std::string> names = {"init"};
  std::vector<PendingEdge> edges;
  std::vector<std::vector<std::pair<StateId, Rational>>> init_rows(sigma.size()); // (target, weight)

  for (std::size_t i = 0; i < operands.size(); ++i) {
    const bool fresh = !operands[i].dirac_initial();
    const WeightedAutomaton d = with_dirac_initial(operands[i]);
    const StateId start = *d.dirac_initial();
    // a freshly added start state has no incoming edges and is dropped
    std::vector<StateId> id(d.num_states(), SIZE_MAX);
    for (StateId q = 0; q < d.num_states(); ++q) {
      if (fresh && q == start) continue;
      id[q] = names.size();
      names.push_back(std::to_string(i + 1) + ":" + d.state_name(q));
    }
    for (StateId q = 0; q < d.num_states(); ++q) {
      if (id[q] == SIZE_MAX) continue;
      for (Letter l = 0; l < sigma.size(); ++l)
        for (const auto& e : d.edges(q, l)) edges.push_back({id[q], l, id[e.to], e.prob, e.weight});
    }
    for (Letter l = 0; l < sigma.size(); ++l)
      for (const auto& e : d.edges(start, l)) init_rows[l].push_back({id[e.to], e.weight});
  }
  for (Letter l = 0; l < sigma.size(); ++l) {
    const Rational p(1, static_cast<long>(init_rows[l].size()));
    for (const auto& [to, w] : init_rows[l]) edges.push_back({0, l, to, p, w});
  }
  return assemble(names, sigma, {{0, Rational(1)}}, edges);
}

WeightedAutomaton initial_choice(const WeightedAutomaton& a1, const WeightedAutomaton& a2) {
  return initial_choice(std::vector<WeightedAutomaton>{a1, a2});
}

WeightedAutomaton synchronized_product(const WeightedAutomaton& a1, const WeightedAutomaton& a2, Combiner c) {
  require_same_alphabet(a1, a2);
  const std::size_t n2 = a2.num_states();
  std::vector<std::string> names;
  for (StateId q1 = 0; q1 < a1.num_states(); ++q1)
    for (StateId q2 = 0; q2 < n2; ++q2) names.push_back("(" + a1.state_name(q1) + "," + a2.state_name(q2) + ")");

  std::vector<std::pair<StateId, Rational>> initial;
  for (StateId q1 : a1.initial_support())
    for (StateId q2 : a2.initial_support()) initial.push_back({q1 * n2 + q2, a1.initial()[q1] * a2.initial()[q2]});

  std::vector<PendingEdge> edges;
  for (StateId q1 = 0; q1 < a1.num_states(); ++q1)
    for (StateId q2 = 0; q2 < n2; ++q2)
      for (Letter l = 0; l < a1.alphabet().size(); ++l)
        for (const auto& e1 : a1.edges(q1, l))
          for (const auto& e2 : a2.edges(q2, l))
            edges.push_back({q1 * n2 + q2, l, e1.to * n2 + e2.to, e1.prob * e2.prob, combine(c, e1.weight, e2.weight)});
  return assemble(names, a1.alphabet(), initial, edges);
}

namespace {

struct WeightPair {
  Rational v1;
  Rational v2;
};

std::vector<WeightPair> useful_pairs(const WeightedAutomaton& a1, const WeightedAutomaton& a2, Rational& filler) {
  const auto w1 = a1.weights();
  const auto w2 = a2.weights();
  filler = w1.front() + w2.front();
  std::vector<WeightPair> pairs;
  for (const auto& x : w1)
    for (const auto& y : w2)
      if (x + y > filler) pairs.push_back({x, y}); // the min pair only ever emits the filler
  return pairs;
}

WeightedAutomaton bit_copy(const WeightedAutomaton& a1, const WeightedAutomaton& a2, const WeightPair& pair,
                           const Rational& filler) {
  using Key = std::tuple<StateId, StateId, int>;
  Explorer<Key> ex;
  auto name = [&](StateId q1, StateId q2, int b) {
    return "(" + a1.state_name(q1) + "," + a2.state_name(q2) + "," + std::to_string(b) + ")";
  };
  std::vector<std::pair<StateId, Rational>> initial;
  for (StateId q1 : a1.initial_support())
    for (StateId q2 : a2.initial_support())
      initial.push_back({ex.intern({q1, q2, 1}, name(q1, q2, 1)), a1.initial()[q1] * a2.initial()[q2]});

  const Rational hit = pair.v1 + pair.v2;
  std::vector<PendingEdge> edges;
  while (ex.has_pending()) {
    const auto [id, key] = ex.pop();
    const auto [q1, q2, b] = key;
    for (Letter l = 0; l < a1.alphabet().size(); ++l)
      for (const auto& e1 : a1.edges(q1, l))
        for (const auto& e2 : a2.edges(q2, l)) {
          int nb = b;
          if (b == 1 && e1.weight == pair.v1) nb = 2;
          else if (b == 2 && e2.weight == pair.v2) nb = 1;
          const StateId to = ex.intern({e1.to, e2.to, nb}, name(e1.to, e2.to, nb));
          edges.push_back({id, l, to, e1.prob * e2.prob, nb != b ? hit : filler});
        }
  }
  return assemble(ex.names(), a1.alphabet(), initial, edges);
}

// One run of the product tracks a single pair at a time. After every step
// the tracked pair either stays or, with probability 1/2, the next pair is
// tracked from scratch. Only completing a pair (v1 seen, then v2) pays v1+v2.
WeightedAutomaton round_robin(const WeightedAutomaton& a1, const WeightedAutomaton& a2,
                              const std::vector<WeightPair>& pairs, const Rational& filler) {
  using Key = std::tuple<StateId, StateId, std::size_t, int>;
  Explorer<Key> ex;
  auto name = [&](StateId q1, StateId q2, std::size_t i, int b) {
    return "(" + a1.state_name(q1) + "," + a2.state_name(q2) + "," + std::to_string(i) + "," + std::to_string(b) + ")";
  };
  auto intern = [&](StateId q1, StateId q2, std::size_t i, int b) { return ex.intern({q1, q2, i, b}, name(q1, q2, i, b)); };
  std::vector<std::pair<StateId, Rational>> initial;
  for (StateId q1 : a1.initial_support())
    for (StateId q2 : a2.initial_support())
      initial.push_back({intern(q1, q2, 0, 1), a1.initial()[q1] * a2.initial()[q2]});

  const Rational half(1, 2);
  std::vector<PendingEdge> edges;
  while (ex.has_pending()) {
    const auto [id, key] = ex.pop();
    const auto [q1, q2, i, b] = key;
    const auto& pair = pairs[i];
    const std::size_t next = (i + 1) % pairs.size();
    for (Letter l = 0; l < a1.alphabet().size(); ++l)
      for (const auto& e1 : a1.edges(q1, l))
        for (const auto& e2 : a2.edges(q2, l)) {
          int nb = b;
          Rational w = filler;
          if (b == 1 && e1.weight == pair.v1) {
            nb = 2;
          } else if (b == 2 && e2.weight == pair.v2) {
            nb = 1;
            w = pair.v1 + pair.v2;
          }
          const Rational p = e1.prob * e2.prob;
          if (next == i && nb == 1) {
            edges.push_back({id, l, intern(e1.to, e2.to, i, 1), p, w});
          } else {
            edges.push_back({id, l, intern(e1.to, e2.to, i, nb), p * half, w});
            edges.push_back({id, l, intern(e1.to, e2.to, next, 1), p * half, w});
          }
        }
  }
  return assemble(ex.names(), a1.alphabet(), initial, edges);
}

} // namespace

WeightedAutomaton limsup_sum(const WeightedAutomaton& a1, const WeightedAutomaton& a2, Semantics target) {
  require_same_alphabet(a1, a2);
  Rational filler;
  const auto pairs = useful_pairs(a1, a2, filler);
  if (target == Semantics::AlmostSure) {
    if (pairs.empty()) return round_robin(a1, a2, {{a1.weights().front(), a2.weights().front()}}, filler);
    return round_robin(a1, a2, pairs, filler);
  }
  if (target != Semantics::Positive)
    throw std::invalid_argument("limsup_sum is defined for Positive and AlmostSure semantics");

  std::vector<WeightedAutomaton> copies;
  for (const auto& p : pairs) copies.push_back(bit_copy(a1, a2, p, filler));
  if (copies.empty()) copies.push_back(bit_copy(a1, a2, {a1.weights().front(), a2.weights().front()}, filler));
  return initial_choice(copies);
}

BooleanAutomaton threshold_boolean(const WeightedAutomaton& a, const Rational& v, Acceptance kind) {
  WeightedAutomaton out(a.states(), a.alphabet());
  for (StateId q = 0; q < a.num_states(); ++q) out.set_initial(q, a.initial()[q]);
  for (StateId q = 0; q < a.num_states(); ++q)
    for (Letter l = 0; l < a.alphabet().size(); ++l)
      for (const auto& e : a.edges(q, l)) out.add_edge(q, l, e.to, e.prob, Rational(e.weight >= v ? 1 : 0));
  return {std::move(out), kind};
}

StateLevel state_level_acceptance(const BooleanAutomaton& b) {
  const auto& a = b.automaton;
  using Key = std::pair<StateId, int>;
  Explorer<Key> ex;
  auto name = [&](StateId q, int w) { return a.state_name(q) + "@" + std::to_string(w); };
  std::vector<std::pair<StateId, Rational>> initial;
  for (StateId q : a.initial_support()) initial.push_back({ex.intern({q, 1}, name(q, 1)), a.initial()[q]});
  std::vector<PendingEdge> edges;
  while (ex.has_pending()) {
    const auto [id, key] = ex.pop();
    for (Letter l = 0; l < a.alphabet().size(); ++l)
      for (const auto& e : a.edges(key.first, l)) {
        const int w = e.weight == Rational(1) ? 1 : 0;
        edges.push_back({id, l, ex.intern({e.to, w}, name(e.to, w)), e.prob, e.weight});
      }
  }
  StateLevel out{assemble(ex.names(), a.alphabet(), initial, edges), {}};
  for (StateId q = 0; q < out.automaton.num_states(); ++q) {
    const auto& n = out.automaton.state_name(q);
    if (n.size() >= 2 && n.compare(n.size() - 2, 2, "@1") == 0) out.accepting.push_back(q);
  }
  return out;
}

std::optional<std::vector<StateId>> uniform_accepting_states(const BooleanAutomaton& b) {
  const auto& a = b.automaton;
  std::vector<StateId> accepting;
  for (StateId q = 0; q < a.num_states(); ++q) {
    std::set<Rational> ws;
    for (Letter l = 0; l < a.alphabet().size(); ++l)
      for (const auto& e : a.edges(q, l)) ws.insert(e.weight);
    if (ws.size() > 1) return std::nullopt;
    if (ws.size() == 1 && *ws.begin() == Rational(1)) accepting.push_back(q);
  }
  return accepting;
}

BooleanAutomaton cobuchi_to_buchi(const WeightedAutomaton& a, const std::vector<StateId>& accepting) {
  const auto start = a.dirac_initial();
  if (!start) throw std::invalid_argument("cobuchi_to_buchi needs a single initial state");
  const std::size_t n = a.num_states();
  std::vector<bool> in_c(n, false);
  for (StateId q : accepting) in_c.at(q) = true;

  std::vector<std::string> names = a.states();
  for (StateId q = 0; q < n; ++q) names.push_back(a.state_name(q) + "~");
  WeightedAutomaton out(make_unique_names(names), a.alphabet());
  out.set_initial(*start, Rational(1));
  const Rational half(1, 2);
  for (StateId q = 0; q < n; ++q)
    for (Letter l = 0; l < a.alphabet().size(); ++l) {
      for (const auto& e : a.edges(q, l)) {
        out.add_edge(q, l, e.to, e.prob * half, 0);
        out.add_edge(q, l, n + e.to, e.prob * half, 0);
      }
      if (in_c[q]) {
        for (const auto& e : a.edges(q, l)) out.add_edge(n + q, l, n + e.to, e.prob, 1);
      } else {
        out.add_edge(n + q, l, n + q, Rational(1), 0);
      }
    }
  return {std::move(out), Acceptance::Buchi};
}

WeightedAutomaton state_acceptance_weights(const WeightedAutomaton& a, const std::vector<StateId>& accepting) {
  std::vector<bool> in_c(a.num_states(), false);
  for (StateId q : accepting) in_c.at(q) = true;
  WeightedAutomaton out(a.states(), a.alphabet());
  for (StateId q = 0; q < a.num_states(); ++q) out.set_initial(q, a.initial()[q]);
  for (StateId q = 0; q < a.num_states(); ++q)
    for (Letter l = 0; l < a.alphabet().size(); ++l)
      for (const auto& e : a.edges(q, l)) out.add_edge(q, l, e.to, e.prob, Rational(in_c[q] ? 1 : 0));
  return out;
}

SupportGraph to_nondeterministic(const WeightedAutomaton& a) { return support_automaton(a); }

WeightedAutomaton from_nondeterministic(const SupportGraph& g) { return uniformize(g); }

} // namespace qwa
