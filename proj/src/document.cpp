#include "qwa/document.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "qwa/errors.hpp"

namespace qwa {

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::pair<std::string, std::string> split_assignment(const std::string& tok, std::size_t line) {
  const auto eq = tok.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size())
    throw ParseError("expected name=value, got '" + tok + "'", line);
  return {tok.substr(0, eq), tok.substr(eq + 1)};
}

Rational rational_at(const std::string& s, std::size_t line) {
  try {
    return Rational::parse(s);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  }
}

bool valid_name(const std::string& n) {
  if (n.empty() || n.back() == ':') return false;
  for (char c : n)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#' || c == '=') return false;
  return true;
}

struct RawTransition {
  std::size_t line;
  std::vector<std::string> fields;
};

} // namespace

WeightedAutomaton parse_document(std::string_view text) {
  std::optional<std::vector<std::string>> alphabet, states;
  std::vector<std::pair<std::size_t, std::string>> initial_tokens, weight_tokens;
  bool have_initial = false, have_weights = false, in_transitions = false, have_transitions = false;
  std::vector<RawTransition> transitions;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto fields = split_ws(raw);
    if (fields.empty()) continue;

    const std::string& head = fields.front();
    if (head.size() > 1 && head.back() == ':') {
      const std::string key = head.substr(0, head.size() - 1);
      std::vector<std::string> rest(fields.begin() + 1, fields.end());
      in_transitions = false;
      auto once = [&](bool& seen) {
        if (seen) throw ParseError("section '" + key + "' appears twice", line);
        seen = true;
      };
      if (key == "alphabet") {
        if (alphabet) throw ParseError("section 'alphabet' appears twice", line);
        alphabet = rest;
      } else if (key == "states") {
        if (states) throw ParseError("section 'states' appears twice", line);
        states = rest;
      } else if (key == "initial") {
        once(have_initial);
        for (auto& t : rest) initial_tokens.push_back({line, t});
      } else if (key == "state_weights") {
        once(have_weights);
        for (auto& t : rest) weight_tokens.push_back({line, t});
      } else if (key == "transitions") {
        once(have_transitions);
        if (!rest.empty()) throw ParseError("transition records go on the following lines", line);
        in_transitions = true;
      } else {
        throw ParseError("unknown section '" + key + "'", line);
      }
      continue;
    }
    if (!in_transitions) throw ParseError("line outside any section", line);
    if (fields.size() != 4 && fields.size() != 5)
      throw ParseError("transition needs: from letter to prob [weight]", line);
    transitions.push_back({line, std::move(fields)});
  }

  if (!alphabet) throw ParseError("missing section 'alphabet'");
  if (!states) throw ParseError("missing section 'states'");
  if (!have_initial) throw ParseError("missing section 'initial'");
  if (!have_transitions) throw ParseError("missing section 'transitions'");
  for (const auto& l : *alphabet)
    if (!valid_name(l) || l.find('.') != std::string::npos) throw ParseError("bad letter name '" + l + "'");
  for (const auto& s : *states)
    if (!valid_name(s)) throw ParseError("bad state name '" + s + "'");

  WeightedAutomaton a(*states, Alphabet(*alphabet));
  auto state_at = [&](const std::string& n, std::size_t ln) {
    auto q = a.find_state(n);
    if (!q) throw ParseError("undeclared state '" + n + "'", ln);
    return *q;
  };

  std::set<StateId> seen_initial;
  for (const auto& [ln, tok] : initial_tokens) {
    auto [name, value] = split_assignment(tok, ln);
    const StateId q = state_at(name, ln);
    if (!seen_initial.insert(q).second) throw ParseError("state '" + name + "' listed twice in initial", ln);
    a.set_initial(q, rational_at(value, ln));
  }
  std::map<StateId, Rational> state_weight;
  for (const auto& [ln, tok] : weight_tokens) {
    auto [name, value] = split_assignment(tok, ln);
    const StateId q = state_at(name, ln);
    if (!state_weight.emplace(q, rational_at(value, ln)).second)
      throw ParseError("state '" + name + "' listed twice in state_weights", ln);
  }
  for (const auto& t : transitions) {
    const StateId from = state_at(t.fields[0], t.line);
    const auto letter = a.alphabet().find(t.fields[1]);
    if (!letter) throw ParseError("undeclared letter '" + t.fields[1] + "'", t.line);
    const StateId to = state_at(t.fields[2], t.line);
    const Rational prob = rational_at(t.fields[3], t.line);
    Rational weight;
    if (t.fields.size() == 5) {
      weight = rational_at(t.fields[4], t.line);
    } else {
      auto it = state_weight.find(from);
      if (it == state_weight.end())
        throw ParseError("no weight given and state '" + t.fields[0] + "' has no state weight", t.line);
      weight = it->second;
    }
    a.add_edge(from, *letter, to, prob, weight);
  }
  return a;
}

void check_document_names(const WeightedAutomaton& a) {
  for (const auto& l : a.alphabet().letters())
    if (!valid_name(l) || l.find('.') != std::string::npos)
      throw std::invalid_argument("letter name '" + l + "' cannot be written to a document");
  for (const auto& s : a.states())
    if (!valid_name(s)) throw std::invalid_argument("state name '" + s + "' cannot be written to a document");
}

std::string serialize_document(const WeightedAutomaton& a, const std::vector<std::string>& header) {
  check_document_names(a);
  std::ostringstream out;
  for (const auto& h : header) out << "# " << h << "\n";

  out << "alphabet:";
  for (const auto& l : a.alphabet().letters()) out << ' ' << l;
  out << "\nstates:";
  for (const auto& s : a.states()) out << ' ' << s;
  out << "\ninitial:";
  for (StateId q = 0; q < a.num_states(); ++q)
    if (!a.initial()[q].is_zero()) out << ' ' << a.state_name(q) << '=' << a.initial()[q];
  out << "\n";

  std::vector<std::optional<Rational>> uniform(a.num_states());
  bool any = false;
  for (StateId q = 0; q < a.num_states(); ++q) {
    std::set<Rational> ws;
    for (Letter l = 0; l < a.alphabet().size(); ++l)
      for (const auto& e : a.edges(q, l)) ws.insert(e.weight);
    if (ws.size() == 1) {
      uniform[q] = *ws.begin();
      any = true;
    }
  }
  if (any) {
    out << "state_weights:";
    for (StateId q = 0; q < a.num_states(); ++q)
      if (uniform[q]) out << ' ' << a.state_name(q) << '=' << *uniform[q];
    out << "\n";
  }
  out << "transitions:\n";
  for (StateId q = 0; q < a.num_states(); ++q)
    for (Letter l = 0; l < a.alphabet().size(); ++l)
      for (const auto& e : a.edges(q, l)) {
        out << "  " << a.state_name(q) << ' ' << a.alphabet().name(l) << ' ' << a.state_name(e.to) << ' ' << e.prob;
        if (!uniform[q]) out << ' ' << e.weight;
        out << "\n";
      }
  return out.str();
}

WeightedAutomaton load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

void save_document(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

LassoWord parse_word(const Alphabet& alphabet, std::string_view prefix, std::string_view loop) {
  auto letters = [&](std::string_view s) {
    std::vector<Letter> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
      const auto dot = s.find('.', start);
      const auto name = s.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
      const auto l = alphabet.find(name);
      if (!l) throw ParseError("unknown letter '" + std::string(name) + "' in word");
      out.push_back(*l);
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
    return out;
  };
  auto u = letters(prefix);
  auto v = letters(loop);
  if (v.empty()) throw ParseError("word loop must be non-empty");
  return LassoWord(std::move(u), std::move(v));
}

} // namespace qwa
