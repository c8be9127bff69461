#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwa/automaton.hpp"
#include "qwa/rational.hpp"

namespace qwa {

enum class ValueKind { Sup, LimSup, LimInf, LimAvg, Disc };

/// A value function Val : Q^omega -> R. `discount` is set iff kind is Disc,
/// and then lies strictly between 0 and 1.
class ValueFunction {
public:
  static ValueFunction sup() { return ValueFunction(ValueKind::Sup); }
  static ValueFunction limsup() { return ValueFunction(ValueKind::LimSup); }
  static ValueFunction liminf() { return ValueFunction(ValueKind::LimInf); }
  static ValueFunction limavg() { return ValueFunction(ValueKind::LimAvg); }
  static ValueFunction disc(Rational lambda);
  /// Non-discounted kinds only; use disc() for Disc.
  static ValueFunction of(ValueKind kind);

  ValueKind kind() const { return kind_; }
  const Rational& discount() const;
  bool is_limit() const {
    return kind_ == ValueKind::LimSup || kind_ == ValueKind::LimInf || kind_ == ValueKind::LimAvg;
  }

  friend bool operator==(const ValueFunction&, const ValueFunction&) = default;

private:
  explicit ValueFunction(ValueKind kind) : kind_(kind) {}

  ValueKind kind_;
  std::optional<Rational> discount_;
};

enum class Semantics { Positive, AlmostSure, Nondeterministic, Universal };

std::string to_string(ValueKind k);
std::string to_string(Semantics s);
/// Short CLI spellings: sup|limsup|liminf|limavg|disc and pos|as|nd|univ.
std::optional<ValueKind> parse_value_kind(std::string_view s);
std::optional<Semantics> parse_semantics(std::string_view s);

/// Ultimately periodic word prefix . loop^omega.
class LassoWord {
public:
  LassoWord(std::vector<Letter> prefix, std::vector<Letter> loop);

  const std::vector<Letter>& prefix() const { return prefix_; }
  const std::vector<Letter>& loop() const { return loop_; }
  /// Number of distinct positions |u| + |v|.
  std::size_t period_end() const { return prefix_.size() + loop_.size(); }
  Letter letter_at(std::size_t position) const;
  std::size_t next_position(std::size_t position) const;
  /// Throws std::invalid_argument if some letter is outside [0, alphabet_size).
  void check_letters(std::size_t alphabet_size) const;

  std::string str(const Alphabet& alphabet) const;

  friend bool operator==(const LassoWord&, const LassoWord&) = default;

private:
  std::vector<Letter> prefix_;
  std::vector<Letter> loop_;
};

/// Weight sequence prefix . loop^omega of one run.
struct RunSegmentWeights {
  std::vector<Rational> prefix;
  std::vector<Rational> loop;
};

/// Val(prefix . loop^omega) in closed form.
Rational periodic_value(const ValueFunction& valfn, const RunSegmentWeights& weights);

} // namespace qwa
