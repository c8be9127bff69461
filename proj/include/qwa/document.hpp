#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qwa/automaton.hpp"
#include "qwa/value.hpp"

namespace qwa {

/// Line-oriented automaton document:
///
///   # comment
///   alphabet: a b
///   states: q0 q1
///   initial: q0=1
///   state_weights: q0=0 q1=1      (optional)
///   transitions:
///     q0 a q0 1/2                 (weight taken from state_weights)
///     q0 a q1 1/2 3
///
/// Rationals are "k" or "p/q". Throws ParseError (with line number) on
/// malformed input; semantic invariants are left to validate().
WeightedAutomaton parse_document(std::string_view text);

/// Emits state_weights for states whose outgoing edges share one weight and
/// drops the weight column for them. `header` lines are written as comments.
std::string serialize_document(const WeightedAutomaton& a, const std::vector<std::string>& header = {});

WeightedAutomaton load_document(const std::string& path);
void save_document(const std::string& path, const std::string& text);

/// Parses '.'-separated letter names; `prefix` may be empty, `loop` may not.
LassoWord parse_word(const Alphabet& alphabet, std::string_view prefix, std::string_view loop);

/// Throws std::invalid_argument if a name cannot be written in a document.
void check_document_names(const WeightedAutomaton& a);

} // namespace qwa
