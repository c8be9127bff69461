#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qwa/automaton.hpp"
#include "qwa/value.hpp"

namespace gen {

using qwa::Rational;

struct Shape {
  std::size_t max_states = 4;
  std::size_t max_letters = 2;
  std::size_t max_branch = 3;
  long max_den = 8;
  std::vector<long> weights = {0, 1, 2};
  bool dirac_initial = true;
};

/// Random probability vector with `parts` positive entries and a common
/// denominator of at most max_den.
inline std::vector<Rational> composition(std::mt19937_64& rng, std::size_t parts, long max_den) {
  const long lo = static_cast<long>(parts);
  const long den = std::uniform_int_distribution<long>(lo, std::max(lo, max_den))(rng);
  // choose parts-1 distinct cut points in 1..den-1
  std::vector<long> cuts(static_cast<std::size_t>(den - 1));
  for (long i = 0; i < den - 1; ++i) cuts[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(parts - 1);
  cuts.push_back(0);
  cuts.push_back(den);
  std::sort(cuts.begin(), cuts.end());
  std::vector<Rational> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) out.emplace_back(cuts[i + 1] - cuts[i], den);
  return out;
}

inline qwa::WeightedAutomaton automaton(std::mt19937_64& rng, const Shape& s = {}) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, s.max_states)(rng);
  const std::size_t k = std::uniform_int_distribution<std::size_t>(1, s.max_letters)(rng);
  std::vector<std::string> states, letters;
  for (std::size_t i = 0; i < n; ++i) states.push_back("s" + std::to_string(i));
  for (std::size_t i = 0; i < k; ++i) letters.push_back(std::string(1, static_cast<char>('a' + i)));
  qwa::WeightedAutomaton a(states, qwa::Alphabet(letters));

  std::vector<std::size_t> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = i;
  auto pick_weight = [&] {
    return Rational(s.weights[std::uniform_int_distribution<std::size_t>(0, s.weights.size() - 1)(rng)]);
  };

  if (s.dirac_initial) {
    a.set_initial(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng), Rational(1));
  } else {
    std::shuffle(ids.begin(), ids.end(), rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(n, 2))(rng);
    const auto probs = composition(rng, m, s.max_den);
    for (std::size_t i = 0; i < m; ++i) a.set_initial(ids[i], probs[i]);
  }
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t l = 0; l < k; ++l) {
      const std::size_t m = std::uniform_int_distribution<std::size_t>(1, std::min(n, s.max_branch))(rng);
      std::shuffle(ids.begin(), ids.end(), rng);
      const auto probs = composition(rng, m, s.max_den);
      for (std::size_t i = 0; i < m; ++i) a.add_edge(q, l, ids[i], probs[i], pick_weight());
    }
  return a;
}

/// Same alphabet as `letters` letters a, b, ...
inline qwa::WeightedAutomaton automaton_over(std::mt19937_64& rng, std::size_t letters, Shape s) {
  s.max_letters = letters;
  while (true) {
    auto a = automaton(rng, s);
    if (a.alphabet().size() == letters) return a;
  }
}

inline qwa::LassoWord lasso(std::mt19937_64& rng, std::size_t alphabet_size, std::size_t max_prefix = 4,
                            std::size_t max_loop = 4) {
  std::uniform_int_distribution<std::size_t> letter(0, alphabet_size - 1);
  const std::size_t u = std::uniform_int_distribution<std::size_t>(0, max_prefix)(rng);
  const std::size_t v = std::uniform_int_distribution<std::size_t>(1, max_loop)(rng);
  std::vector<qwa::Letter> pre(u), loop(v);
  for (auto& x : pre) x = letter(rng);
  for (auto& x : loop) x = letter(rng);
  return qwa::LassoWord(pre, loop);
}

inline std::vector<Rational> weight_sequence(std::mt19937_64& rng, std::size_t len, long lo = -3, long hi = 5) {
  std::vector<Rational> out(len);
  std::uniform_int_distribution<long> w(lo, hi);
  std::uniform_int_distribution<long> d(1, 3);
  for (auto& x : out) x = Rational(w(rng), d(rng));
  return out;
}

} // namespace gen
