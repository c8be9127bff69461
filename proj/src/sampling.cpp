#include <algorithm>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "qwa/oracle.hpp"

namespace qwa {

namespace {

// floor(p * 2^64), saturated; p in [0, 1].
std::uint64_t scaled(const Rational& p) {
  if (p >= Rational(1)) return UINT64_MAX;
  mpz_class scaled_num = p.numerator();
  scaled_num <<= 64;
  mpz_class q = scaled_num / p.denominator();
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, q.get_mpz_t());
  return out;
}

struct Choice {
  std::uint64_t below; // draw < below selects this entry (last entry catches the rest)
  std::size_t target;
  double weight;
};

std::vector<Choice> table(const std::vector<std::pair<Rational, std::pair<std::size_t, double>>>& entries) {
  std::vector<Choice> out;
  Rational cum;
  for (const auto& [p, tw] : entries) {
    cum += p;
    out.push_back({scaled(cum), tw.first, tw.second});
  }
  if (!out.empty()) out.back().below = UINT64_MAX;
  return out;
}

const Choice& pick(const std::vector<Choice>& t, std::uint64_t draw) {
  for (const auto& c : t)
    if (draw < c.below) return c;
  return t.back();
}

} // namespace

std::vector<double> sample_statistics(const WeightedAutomaton& a, const ValueFunction& valfn, const LassoWord& word,
                                      std::size_t horizon, std::size_t samples, std::uint64_t seed) {
  word.check_letters(a.alphabet().size());
  if (horizon < word.period_end()) throw std::invalid_argument("horizon must be at least |u|+|v|");
  if (samples == 0) throw std::invalid_argument("samples must be positive");

  const std::size_t k = a.alphabet().size();
  std::vector<std::vector<Choice>> rows(a.num_states() * k);
  for (StateId q = 0; q < a.num_states(); ++q)
    for (Letter l = 0; l < k; ++l) {
      std::vector<std::pair<Rational, std::pair<std::size_t, double>>> entries;
      for (const auto& e : a.edges(q, l))
        if (e.prob.sign() > 0) entries.push_back({e.prob, {e.to, e.weight.to_double()}});
      rows[q * k + l] = table(entries);
    }
  std::vector<std::pair<Rational, std::pair<std::size_t, double>>> init;
  for (StateId q : a.initial_support()) init.push_back({a.initial()[q], {q, 0.0}});
  const auto initial = table(init);

  std::vector<Letter> letters(horizon);
  for (std::size_t i = 0, p = 0; i < horizon; ++i, p = word.next_position(p)) letters[i] = word.letter_at(p);

  const double lambda = valfn.kind() == ValueKind::Disc ? valfn.discount().to_double() : 0.0;
  const std::size_t window = horizon / 2;

  std::vector<double> out(samples);
  for (std::size_t run = 0; run < samples; ++run) {
    auto lo = [](std::uint64_t x) { return static_cast<std::uint32_t>(x); };
    auto hi = [](std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); };
    std::seed_seq seq{lo(seed), hi(seed), lo(run), hi(run)};
    std::mt19937_64 rng(seq);

    std::size_t q = pick(initial, rng()).target;
    double sum = 0, best = 0, scale = 1;
    bool first = true;
    for (std::size_t i = 0; i < horizon; ++i) {
      const auto& row = rows[q * k + letters[i]];
      const Choice& c = row.size() == 1 ? row.front() : pick(row, rng());
      const double w = c.weight;
      switch (valfn.kind()) {
        case ValueKind::LimAvg: sum += w; break;
        case ValueKind::Disc: sum += scale * w; scale *= lambda; break;
        case ValueKind::Sup:
          best = first ? w : std::max(best, w);
          first = false;
          break;
        case ValueKind::LimSup:
        case ValueKind::LimInf:
          if (i >= window) {
            best = first ? w : (valfn.kind() == ValueKind::LimSup ? std::max(best, w) : std::min(best, w));
            first = false;
          }
          break;
      }
      q = c.target;
    }
    if (valfn.kind() == ValueKind::LimAvg) out[run] = sum / static_cast<double>(horizon);
    else if (valfn.kind() == ValueKind::Disc) out[run] = sum;
    else out[run] = best;
  }
  return out;
}

SampleReport monte_carlo(const WeightedAutomaton& a, const ValueFunction& valfn, const LassoWord& word,
                         std::size_t horizon, std::size_t samples, std::uint64_t seed,
                         std::vector<Rational> thresholds) {
  const auto stats = sample_statistics(a, valfn, word, horizon, samples, seed);
  if (thresholds.empty()) thresholds = a.weights();

  SampleReport r;
  r.samples = samples;
  r.horizon = horizon;
  r.seed = seed;
  double total = 0;
  for (double s : stats) total += s;
  r.mean = total / static_cast<double>(samples);
  for (const auto& t : thresholds) {
    const double cut = t.to_double();
    const auto hits = std::count_if(stats.begin(), stats.end(), [&](double s) { return s >= cut; });
    r.at_or_above.emplace_back(t, static_cast<double>(hits) / static_cast<double>(samples));
  }
  return r;
}

std::string SampleReport::str() const {
  char buf[64];
  std::string out;
  out += "generator=mt19937_64\n";
  out += "samples=" + std::to_string(samples) + "\n";
  out += "horizon=" + std::to_string(horizon) + "\n";
  out += "seed=" + std::to_string(seed) + "\n";
  std::snprintf(buf, sizeof buf, "%.6f", mean);
  out += "mean=" + std::string(buf) + "\n";
  for (const auto& [t, f] : at_or_above) {
    std::snprintf(buf, sizeof buf, "%.6f", f);
    out += "p_ge[" + t.str() + "]=" + buf + "\n";
  }
  return out;
}

std::vector<LassoWord> enumerate_lassos(std::size_t alphabet_size, std::size_t max_prefix, std::size_t max_loop) {
  std::vector<LassoWord> out;
  if (alphabet_size == 0 || max_loop == 0) return out;

  // All words of length n in lexicographic order.
  auto words = [&](std::size_t n) {
    std::vector<std::vector<Letter>> ws;
    std::vector<Letter> w(n, 0);
    while (true) {
      ws.push_back(w);
      std::size_t i = n;
      while (i > 0 && w[i - 1] + 1 == alphabet_size) w[--i] = 0;
      if (i == 0) break;
      ++w[i - 1];
    }
    return ws;
  };

  for (std::size_t total = 1; total <= max_prefix + max_loop; ++total)
    for (std::size_t u = 0; u <= std::min(max_prefix, total - 1); ++u) {
      const std::size_t v = total - u;
      if (v > max_loop) continue;
      const auto us = words(u);
      const auto vs = words(v);
      for (const auto& pu : us)
        for (const auto& pv : vs) out.emplace_back(pu, pv);
    }
  return out;
}

} // namespace qwa
