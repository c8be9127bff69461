#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qwa {

/// Malformed textual input (rationals, documents, word specs).
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// One broken automaton invariant, with where it was found.
struct Violation {
  std::string location;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Thrown when an automaton (or document) breaks its data-model invariants.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

private:
  std::vector<Violation> violations_;
};

/// A decision problem or construction that is not decidable, open, or not
/// implemented for the requested value function and semantics.
class UnsupportedProblem : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace qwa
