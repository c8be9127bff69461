#include "qwa/value.hpp"

#include <algorithm>
#include <stdexcept>

namespace qwa {

ValueFunction ValueFunction::disc(Rational lambda) {
  if (lambda.sign() <= 0 || lambda >= Rational(1))
    throw std::invalid_argument("discount factor must lie strictly between 0 and 1, got " + lambda.str());
  ValueFunction f(ValueKind::Disc);
  f.discount_ = std::move(lambda);
  return f;
}

ValueFunction ValueFunction::of(ValueKind kind) {
  if (kind == ValueKind::Disc) throw std::invalid_argument("Disc needs a discount factor");
  return ValueFunction(kind);
}

const Rational& ValueFunction::discount() const {
  if (!discount_) throw std::logic_error("value function has no discount factor");
  return *discount_;
}

std::string to_string(ValueKind k) {
  switch (k) {
    case ValueKind::Sup: return "Sup";
    case ValueKind::LimSup: return "LimSup";
    case ValueKind::LimInf: return "LimInf";
    case ValueKind::LimAvg: return "LimAvg";
    case ValueKind::Disc: return "Disc";
  }
  return "?";
}

std::string to_string(Semantics s) {
  switch (s) {
    case Semantics::Positive: return "Positive";
    case Semantics::AlmostSure: return "AlmostSure";
    case Semantics::Nondeterministic: return "Nondeterministic";
    case Semantics::Universal: return "Universal";
  }
  return "?";
}

std::optional<ValueKind> parse_value_kind(std::string_view s) {
  if (s == "sup") return ValueKind::Sup;
  if (s == "limsup") return ValueKind::LimSup;
  if (s == "liminf") return ValueKind::LimInf;
  if (s == "limavg") return ValueKind::LimAvg;
  if (s == "disc") return ValueKind::Disc;
  return std::nullopt;
}

std::optional<Semantics> parse_semantics(std::string_view s) {
  if (s == "pos") return Semantics::Positive;
  if (s == "as") return Semantics::AlmostSure;
  if (s == "nd") return Semantics::Nondeterministic;
  if (s == "univ") return Semantics::Universal;
  return std::nullopt;
}

LassoWord::LassoWord(std::vector<Letter> prefix, std::vector<Letter> loop)
    : prefix_(std::move(prefix)), loop_(std::move(loop)) {
  if (loop_.empty()) throw std::invalid_argument("lasso loop must be non-empty");
}

Letter LassoWord::letter_at(std::size_t position) const {
  if (position < prefix_.size()) return prefix_[position];
  return loop_[(position - prefix_.size()) % loop_.size()];
}

std::size_t LassoWord::next_position(std::size_t position) const {
  return position + 1 < period_end() ? position + 1 : prefix_.size();
}

void LassoWord::check_letters(std::size_t alphabet_size) const {
  auto bad = [&](Letter l) { return l >= alphabet_size; };
  if (std::any_of(prefix_.begin(), prefix_.end(), bad) || std::any_of(loop_.begin(), loop_.end(), bad))
    throw std::invalid_argument("word uses a letter outside the automaton's alphabet");
}

std::string LassoWord::str(const Alphabet& alphabet) const {
  auto join = [&](const std::vector<Letter>& ls) {
    std::string s;
    for (std::size_t i = 0; i < ls.size(); ++i) {
      if (i) s += '.';
      s += alphabet.name(ls[i]);
    }
    return s;
  };
  return (prefix_.empty() ? std::string() : join(prefix_) + " ") + "(" + join(loop_) + ")^w";
}

Rational periodic_value(const ValueFunction& valfn, const RunSegmentWeights& weights) {
  const auto& u = weights.prefix;
  const auto& v = weights.loop;
  if (v.empty()) throw std::invalid_argument("loop weights must be non-empty");

  switch (valfn.kind()) {
    case ValueKind::Sup: {
      Rational m = *std::max_element(v.begin(), v.end());
      for (const auto& x : u) m = std::max(m, x);
      return m;
    }
    case ValueKind::LimSup: return *std::max_element(v.begin(), v.end());
    case ValueKind::LimInf: return *std::min_element(v.begin(), v.end());
    case ValueKind::LimAvg: {
      Rational sum;
      for (const auto& x : v) sum += x;
      return sum / Rational(static_cast<long>(v.size()));
    }
    case ValueKind::Disc: {
      const Rational& lambda = valfn.discount();
      Rational head;
      Rational scale(1);
      for (const auto& x : u) {
        head += scale * x;
        scale *= lambda;
      }
      Rational cycle;
      Rational inner(1);
      for (const auto& x : v) {
        cycle += inner * x;
        inner *= lambda;
      }
      // inner == lambda^|v| here
      return head + scale * cycle / (Rational(1) - inner);
    }
  }
  throw std::logic_error("unknown value function");
}

} // namespace qwa
