#include <array>
#include <stdexcept>

#include "qwa/decide.hpp"

namespace qwa {

namespace {

constexpr Status Y = Status::Decidable;
constexpr Status N = Status::Undecidable;
constexpr Status Q = Status::Open;

struct Row {
  ValueKind value;
  Semantics semantics;
  std::array<Status, 4> closure; // max, min, complement, sum
  Status emptiness;
  Status universality;
};

// Closure columns reuse Decidable/Undecidable/Open for yes/no/unknown.
constexpr std::array<Row, 10> kTable = {{
    {ValueKind::Sup, Semantics::Positive, {Y, Y, N, Y}, Y, Y},
    {ValueKind::LimSup, Semantics::Positive, {Y, Y, Y, Y}, N, N},
    {ValueKind::LimInf, Semantics::Positive, {Y, Y, N, Y}, Y, Y},
    {ValueKind::LimAvg, Semantics::Positive, {Y, N, N, Q}, Q, Q},
    {ValueKind::Disc, Semantics::Positive, {Y, N, N, Y}, Y, Q},
    {ValueKind::Sup, Semantics::AlmostSure, {Y, Y, N, Y}, Y, Y},
    {ValueKind::LimSup, Semantics::AlmostSure, {Y, Y, N, Y}, Y, Y},
    {ValueKind::LimInf, Semantics::AlmostSure, {Y, Y, Y, Y}, N, N},
    {ValueKind::LimAvg, Semantics::AlmostSure, {N, Y, N, N}, Q, Q},
    {ValueKind::Disc, Semantics::AlmostSure, {N, Y, N, Y}, Q, Y},
}};

const Row& row(ValueKind value, Semantics semantics) {
  if (semantics != Semantics::Positive && semantics != Semantics::AlmostSure)
    throw std::invalid_argument("the decidability table covers Positive and AlmostSure semantics only");
  for (const auto& r : kTable)
    if (r.value == value && r.semantics == semantics) return r;
  throw std::logic_error("missing table row");
}

} // namespace

ClassificationEntry classify(ValueKind value, Semantics semantics, ProblemKind problem) {
  const Row& r = row(value, semantics);
  ClassificationEntry e{value, semantics, problem, problem == ProblemKind::Emptiness ? r.emptiness : r.universality, ""};
  const bool footnote = value == ValueKind::Disc && e.status == Status::Open;
  if (footnote) e.note = "(1) reduces to universality of nondeterministic Disc automata; decidability unknown";
  return e;
}

Status closure_status(ValueKind value, Semantics semantics, ClosureOp op) {
  return row(value, semantics).closure[static_cast<std::size_t>(op)];
}

std::string to_string(ProblemKind p) { return p == ProblemKind::Emptiness ? "emptiness" : "universality"; }

std::string to_string(Status s) {
  switch (s) {
    case Status::Decidable: return "Decidable";
    case Status::Undecidable: return "Undecidable";
    case Status::Open: return "Open";
  }
  return "?";
}

std::string to_string(ClosureOp op) {
  switch (op) {
    case ClosureOp::Max: return "max";
    case ClosureOp::Min: return "min";
    case ClosureOp::Complement: return "complement";
    case ClosureOp::Sum: return "sum";
  }
  return "?";
}

std::optional<ProblemKind> parse_problem(std::string_view s) {
  if (s == "emptiness") return ProblemKind::Emptiness;
  if (s == "universality") return ProblemKind::Universality;
  return std::nullopt;
}

} // namespace qwa
