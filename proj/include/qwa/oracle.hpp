#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qwa/automaton.hpp"
#include "qwa/value.hpp"

namespace qwa {

/// A worked automaton together with the value function and semantics it
/// was drawn for.
struct Fixture {
  std::string name;
  WeightedAutomaton automaton;
  ValueFunction intended_value;
  Semantics intended_semantics;
};

/// Known names: fig1_low, fig1_high, fig2_LF, fig3_LI, fig4_Lz, da_counter,
/// db_counter; fig2, fig3 and fig4 are accepted as aliases.
/// Throws std::invalid_argument for anything else.
Fixture fixture(std::string_view name);
std::vector<std::string> fixture_names();

struct SampleReport {
  std::size_t samples = 0;
  std::size_t horizon = 0;
  std::uint64_t seed = 0;
  double mean = 0;
  /// threshold -> fraction of runs whose statistic is >= threshold
  std::vector<std::pair<Rational, double>> at_or_above;

  /// key=value lines, fixed precision, trailing newline.
  std::string str() const;
};

/// Horizon-truncated statistic of each sampled run: average of all weights
/// (LimAvg), max or min over the second half of the horizon (LimSup,
/// LimInf), max of all weights (Sup), discounted partial sum (Disc).
///
/// Run i draws from a std::mt19937_64 seeded with seed_seq{seed, i} (each
/// split into 32-bit halves, low half first). Successors are picked by
/// comparing one 64-bit draw to the exact cumulative probabilities scaled
/// by 2^64, so results are bit-identical across platforms.
std::vector<double> sample_statistics(const WeightedAutomaton& a, const ValueFunction& valfn, const LassoWord& word,
                                      std::size_t horizon, std::size_t samples, std::uint64_t seed);

/// Throws std::invalid_argument if horizon < |u|+|v| or samples == 0. When
/// `thresholds` is empty the distinct edge weights are used.
SampleReport monte_carlo(const WeightedAutomaton& a, const ValueFunction& valfn, const LassoWord& word,
                         std::size_t horizon, std::size_t samples, std::uint64_t seed,
                         std::vector<Rational> thresholds = {});

/// Every lasso with |u| <= max_prefix and 1 <= |v| <= max_loop, once each,
/// ordered by |u|+|v|, then |u|, then u and v lexicographically.
std::vector<LassoWord> enumerate_lassos(std::size_t alphabet_size, std::size_t max_prefix, std::size_t max_loop);

} // namespace qwa
