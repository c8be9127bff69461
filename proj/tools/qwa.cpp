// Command-line front end: qwa <command> ...
//
// Exit codes: 0 success, 2 input error, 3 automaton invariant violation,
// 4 problem not decidable or construction not supported.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qwa/construct.hpp"
#include "qwa/decide.hpp"
#include "qwa/document.hpp"
#include "qwa/eval.hpp"
#include "qwa/oracle.hpp"

using namespace qwa;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kInvariant = 3;
constexpr int kUnsupported = 4;

struct ValueFlags {
  std::string value;
  std::string lambda;
  std::string semantics;
};

void add_value_flags(CLI::App* cmd, ValueFlags& f, bool semantics, bool required = true) {
  auto* v = cmd->add_option("--value", f.value, "sup|limsup|liminf|limavg|disc");
  if (required) v->required();
  cmd->add_option("--lambda", f.lambda, "discount factor p/q (disc only)");
  if (semantics) {
    auto* s = cmd->add_option("--semantics", f.semantics, "pos|as|nd|univ");
    if (required) s->required();
  }
}

ValueKind value_kind(const std::string& s) {
  auto k = parse_value_kind(s);
  if (!k) throw ParseError("unknown value function '" + s + "'");
  return *k;
}

Semantics semantics_of(const std::string& s) {
  auto k = parse_semantics(s);
  if (!k) throw ParseError("unknown semantics '" + s + "'");
  return *k;
}

ValueFunction value_function(const ValueFlags& f) {
  const ValueKind k = value_kind(f.value);
  if (k == ValueKind::Disc) {
    if (f.lambda.empty()) throw ParseError("--value disc needs --lambda");
    try {
      return ValueFunction::disc(Rational::parse(f.lambda));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  if (!f.lambda.empty()) throw ParseError("--lambda is only meaningful with --value disc");
  return ValueFunction::of(k);
}

std::string pick_file(const std::string& positional, const std::string& flag) {
  if (!positional.empty() && !flag.empty()) throw ParseError("give the automaton either positionally or with --automaton");
  if (positional.empty() && flag.empty()) throw ParseError("no automaton file given");
  return positional.empty() ? flag : positional;
}

WeightedAutomaton load_valid(const std::string& path) {
  auto a = load_document(path);
  require_valid(a);
  return a;
}

std::string row_name(ValueKind v, Semantics s) {
  return std::string(s == Semantics::Positive ? "Pos" : s == Semantics::AlmostSure ? "As" : to_string(s)) +
         to_string(v);
}

void emit(const std::string& out_path, const WeightedAutomaton& a, const std::vector<std::string>& header) {
  const std::string text = serialize_document(a, header);
  if (out_path.empty()) {
    std::cout << text;
    std::cerr << "states: " << a.num_states() << "\n";
  } else {
    save_document(out_path, text);
    std::cout << "states: " << a.num_states() << "\n";
  }
}

// --- construct --------------------------------------------------------------

struct ConstructFlags {
  std::string op;
  std::vector<std::string> files;
  std::string threshold;
  std::string kind = "buchi";
  std::vector<std::string> accepting;
  ValueFlags value;
  std::string out;
};

struct Realized {
  ClosureOp op;
  std::vector<std::pair<ValueKind, Semantics>> cells;
  std::string alternative;
};

const ValueKind kKinds[] = {ValueKind::Sup, ValueKind::LimSup, ValueKind::LimInf, ValueKind::LimAvg, ValueKind::Disc};

Realized realized_by(const std::string& op) {
  Realized r{ClosureOp::Max, {}, ""};
  if (op == "max-initial") {
    for (auto k : kKinds) r.cells.push_back({k, Semantics::Positive});
    r.alternative = "under AlmostSure semantics initial choice yields the min; use product-max for AsLimSup";
  } else if (op == "min-initial") {
    r.op = ClosureOp::Min;
    for (auto k : kKinds) r.cells.push_back({k, Semantics::AlmostSure});
    r.alternative = "under Positive semantics initial choice yields the max; use product-min for PosLimInf";
  } else if (op == "product-max") {
    r.cells = {{ValueKind::LimSup, Semantics::AlmostSure}};
    r.alternative = "use max-initial under Positive semantics";
  } else if (op == "product-min") {
    r.op = ClosureOp::Min;
    r.cells = {{ValueKind::LimInf, Semantics::Positive}};
    r.alternative = "use min-initial under AlmostSure semantics";
  } else if (op == "sum-limsup") {
    r.op = ClosureOp::Sum;
    r.cells = {{ValueKind::LimSup, Semantics::Positive}, {ValueKind::LimSup, Semantics::AlmostSure}};
    r.alternative = "only LimSup sums are constructed";
  }
  return r;
}

// Returns an error message when the requested cell is not realized.
std::optional<std::string> closure_problem(const std::string& op, const ValueFlags& f) {
  if (f.semantics.empty()) {
    if (!f.value.empty()) throw ParseError("--value needs --semantics for a closure check");
    return std::nullopt;
  }
  const Semantics s = semantics_of(f.semantics);
  if (s != Semantics::Positive && s != Semantics::AlmostSure)
    throw ParseError("closure checks cover pos and as semantics only");
  const Realized r = realized_by(op);
  if (f.value.empty()) {
    const bool any = std::any_of(r.cells.begin(), r.cells.end(), [&](const auto& c) { return c.second == s; });
    if (any) return std::nullopt;
    return op + " does not realize " + to_string(r.op) + " under " + to_string(s) + " semantics; " + r.alternative;
  }
  const ValueKind v = value_kind(f.value);
  for (const auto& c : r.cells)
    if (c == std::pair{v, s}) return std::nullopt;
  const Status cell = closure_status(v, s, r.op);
  const std::string name = row_name(v, s);
  if (cell == Status::Undecidable) return "closure table: " + name + " is not closed under " + to_string(r.op);
  if (cell == Status::Open) return "closure table: closure of " + name + " under " + to_string(r.op) + " is open";
  return "closure table: " + name + " is closed under " + to_string(r.op) + ", but " + op + " does not realize it; " +
         r.alternative;
}

int run_construct(const ConstructFlags& f) {
  const std::string& op = f.op;
  if (op == "complement") {
    if (f.files.size() != 1) throw ParseError("complement takes one automaton");
    load_valid(f.files[0]);
    if (!f.value.value.empty() && !f.value.semantics.empty()) {
      const ValueKind v = value_kind(f.value.value);
      const Semantics s = semantics_of(f.value.semantics);
      if (s != Semantics::Positive && s != Semantics::AlmostSure) throw ParseError("closure checks cover pos and as");
      const std::string name = row_name(v, s);
      if (closure_status(v, s, ClosureOp::Complement) == Status::Decidable)
        std::cerr << "qwa: closure table: " << name
                  << " is closed under complement, but the construction needs external Buchi complementation and "
                     "is not provided\n";
      else
        std::cerr << "qwa: closure table: " << name << " is not closed under complement\n";
    } else {
      std::cerr << "qwa: complement is not provided; the closure table marks only PosLimSup and AsLimInf as closed under "
                   "complement, and both need external Buchi complementation\n";
    }
    return kUnsupported;
  }

  if (auto problem = closure_problem(op, f.value)) {
    std::cerr << "qwa: " << *problem << "\n";
    return kUnsupported;
  }

  std::vector<WeightedAutomaton> ops;
  for (const auto& path : f.files) ops.push_back(load_valid(path));
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (ops.size() < lo || ops.size() > hi)
      throw ParseError(op + " takes " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + " or more") +
                       " automata, got " + std::to_string(ops.size()));
  };

  if (op == "max-initial" || op == "min-initial") {
    need(2, SIZE_MAX);
    emit(f.out, initial_choice(ops), {op});
  } else if (op == "product-max" || op == "product-min") {
    need(2, 2);
    emit(f.out, synchronized_product(ops[0], ops[1], op == "product-max" ? Combiner::Max : Combiner::Min), {op});
  } else if (op == "sum-limsup") {
    need(2, 2);
    const Semantics s = f.value.semantics.empty() ? Semantics::Positive : semantics_of(f.value.semantics);
    emit(f.out, limsup_sum(ops[0], ops[1], s), {op + " (" + to_string(s) + ")"});
  } else if (op == "threshold") {
    need(1, 1);
    if (f.threshold.empty()) throw ParseError("threshold needs --threshold");
    if (f.kind != "buchi" && f.kind != "cobuchi") throw ParseError("--kind must be buchi or cobuchi");
    const auto b = threshold_boolean(ops[0], Rational::parse(f.threshold),
                                     f.kind == "buchi" ? Acceptance::Buchi : Acceptance::CoBuchi);
    emit(f.out, b.automaton, {"acceptance: " + f.kind});
  } else if (op == "cobuchi-to-buchi") {
    need(1, 1);
    BooleanAutomaton b{ops[0], Acceptance::CoBuchi};
    if (!f.threshold.empty()) {
      b = threshold_boolean(ops[0], Rational::parse(f.threshold), Acceptance::CoBuchi);
    } else if (f.accepting.empty()) {
      for (const auto& w : ops[0].weights())
        if (w != Rational(0) && w != Rational(1))
          throw ParseError("weights must be 0/1; pass --threshold or --accepting");
    }
    if (!b.automaton.dirac_initial()) throw ParseError("cobuchi-to-buchi needs a single initial state");
    std::vector<StateId> accepting;
    if (!f.accepting.empty()) {
      for (const auto& name : f.accepting) {
        auto q = b.automaton.find_state(name);
        if (!q) throw ParseError("unknown accepting state '" + name + "'");
        accepting.push_back(*q);
      }
    } else if (auto uniform = uniform_accepting_states(b)) {
      accepting = *uniform;
    } else {
      auto split = state_level_acceptance(b);
      b.automaton = std::move(split.automaton);
      accepting = std::move(split.accepting);
    }
    emit(f.out, cobuchi_to_buchi(b.automaton, accepting).automaton, {"acceptance: buchi"});
  } else if (op == "uniformize") {
    need(1, 1);
    emit(f.out, from_nondeterministic(to_nondeterministic(ops[0])), {op});
  } else if (op == "negate") {
    need(1, 1);
    emit(f.out, negate_weights(ops[0]), {op});
  }
  return kOk;
}

// --- check / classify ---------------------------------------------------------

int run_check(const std::string& problem_name, const std::string& file, const ValueFlags& vf,
              const std::string& threshold) {
  const auto problem = parse_problem(problem_name);
  if (!problem) throw ParseError("problem must be emptiness or universality");
  const ValueFunction valfn = value_function(vf);
  const Semantics s = semantics_of(vf.semantics);
  const auto a = load_valid(file);

  if (valfn.kind() != ValueKind::Sup && valfn.kind() != ValueKind::Disc &&
      (s == Semantics::Positive || s == Semantics::AlmostSure)) {
    const auto c = classify(valfn.kind(), s, *problem);
    if (c.status != Status::Decidable) {
      std::cout << to_string(c.status) << "\n";
      std::cerr << "qwa: " << row_name(valfn.kind(), s) << " " << to_string(*problem) << " is "
                << to_string(c.status) << " in the decidability table\n";
      return kUnsupported;
    }
  }
  if (valfn.kind() == ValueKind::Sup && s == Semantics::AlmostSure)
    std::cerr << "qwa: note: AlmostSure Sup is decided through the universal reading (every run must reach the "
                 "threshold); eval can report a larger almost-sure value on some automata\n";

  if (threshold.empty()) throw ParseError("check needs --threshold");
  const Rational nu = Rational::parse(threshold);
  Decision d;
  try {
    d = decide(a, valfn, s, {*problem, nu});
  } catch (const UnsupportedProblem& e) {
    const bool tabled = s == Semantics::Positive || s == Semantics::AlmostSure;
    if (tabled) std::cout << to_string(classify(valfn.kind(), s, *problem).status) << "\n";
    std::cerr << "qwa: " << e.what() << "\n";
    return kUnsupported;
  }
  std::cout << (d.holds ? "SAT" : "UNSAT") << "\n";
  if (d.witness) std::cout << "witness: " << d.witness->str(a.alphabet()) << "\n";
  std::cout << "reason: " << d.description << "\n";
  return kOk;
}

int run_classify(const ValueFlags& vf, const std::string& problem_name) {
  if (vf.value.empty() && vf.semantics.empty() && problem_name.empty()) {
    std::cout << "row          max  min  comp sum  emptiness    universality\n";
    auto mark = [](Status s) { return s == Status::Decidable ? "yes " : s == Status::Undecidable ? "no  " : "?   "; };
    for (auto s : {Semantics::Positive, Semantics::AlmostSure})
      for (auto v : kKinds) {
        std::string name = row_name(v, s);
        name.resize(13, ' ');
        std::cout << name;
        for (auto op : {ClosureOp::Max, ClosureOp::Min, ClosureOp::Complement, ClosureOp::Sum})
          std::cout << mark(closure_status(v, s, op)) << ' ';
        for (auto p : {ProblemKind::Emptiness, ProblemKind::Universality}) {
          const auto c = classify(v, s, p);
          std::string st = to_string(c.status) + (c.note.empty() ? "" : " (1)");
          if (p == ProblemKind::Emptiness) st.resize(13, ' ');
          std::cout << st;
        }
        std::cout << "\n";
      }
    std::cout << "(1) " << classify(ValueKind::Disc, Semantics::Positive, ProblemKind::Universality).note.substr(4)
              << "\n";
    return kOk;
  }
  if (vf.value.empty() || vf.semantics.empty() || problem_name.empty())
    throw ParseError("classify needs --value, --semantics and --problem (or none of them for the whole table)");
  const auto problem = parse_problem(problem_name);
  if (!problem) throw ParseError("problem must be emptiness or universality");
  const Semantics s = semantics_of(vf.semantics);
  if (s != Semantics::Positive && s != Semantics::AlmostSure)
    throw ParseError("the decidability table covers pos and as semantics only");
  const auto c = classify(value_kind(vf.value), s, *problem);
  std::cout << to_string(c.status) << "\n";
  if (!c.note.empty()) std::cout << "note: " << c.note << "\n";
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Probabilistic weighted automata over lasso words"};
  app.require_subcommand(1);

  // eval
  std::string eval_pos, eval_file, prefix, loop;
  ValueFlags eval_v;
  auto* eval = app.add_subcommand("eval", "exact value of a lasso word");
  eval->add_option("file", eval_pos, "automaton document");
  eval->add_option("--automaton", eval_file, "automaton document");
  add_value_flags(eval, eval_v, true);
  eval->add_option("--prefix", prefix, "letters separated by '.'");
  eval->add_option("--loop", loop, "letters separated by '.'")->required();

  // distribution
  std::string dist_pos, dist_file;
  ValueFlags dist_v;
  auto* dist = app.add_subcommand("distribution", "law of a limit value over the runs of a lasso word");
  dist->add_option("file", dist_pos, "automaton document");
  dist->add_option("--automaton", dist_file, "automaton document");
  add_value_flags(dist, dist_v, false);
  dist->add_option("--prefix", prefix, "letters separated by '.'");
  dist->add_option("--loop", loop, "letters separated by '.'")->required();

  // validate
  std::string validate_file;
  auto* val = app.add_subcommand("validate", "report broken automaton invariants");
  val->add_option("file", validate_file)->required();

  // construct
  ConstructFlags cf;
  auto* con = app.add_subcommand("construct", "closure constructions and reductions");
  con->add_option("operation", cf.op)
      ->required()
      ->check(CLI::IsMember({"max-initial", "min-initial", "product-max", "product-min", "sum-limsup", "threshold",
                             "cobuchi-to-buchi", "uniformize", "negate", "complement"}));
  con->add_option("files", cf.files, "operand documents")->required();
  con->add_option("--threshold", cf.threshold, "threshold v (threshold, cobuchi-to-buchi)");
  con->add_option("--kind", cf.kind, "buchi|cobuchi (threshold)");
  con->add_option("--accepting", cf.accepting, "coBuchi accepting states (cobuchi-to-buchi)")->delimiter(',');
  add_value_flags(con, cf.value, true, false);
  con->add_option("-o,--output", cf.out, "output document (stdout if omitted)");

  // check
  std::string check_problem, check_pos, check_file, check_threshold;
  ValueFlags check_v;
  auto* chk = app.add_subcommand("check", "decide emptiness or universality");
  chk->add_option("problem", check_problem, "emptiness|universality")->required();
  chk->add_option("file", check_pos, "automaton document");
  chk->add_option("--automaton", check_file, "automaton document");
  add_value_flags(chk, check_v, true);
  chk->add_option("--threshold", check_threshold, "threshold p/q");

  // classify
  std::string cls_problem;
  ValueFlags cls_v;
  auto* cls = app.add_subcommand("classify", "decidability status (whole table without flags)");
  add_value_flags(cls, cls_v, true, false);
  cls->add_option("--problem", cls_problem, "emptiness|universality");

  // fixture
  std::string fixture_name, fixture_out;
  auto* fix = app.add_subcommand("fixture", "write a built-in example automaton");
  fix->add_option("name", fixture_name)->required();
  fix->add_option("-o,--output", fixture_out, "output document (stdout if omitted)");

  // sample
  std::string sample_pos, sample_file;
  ValueFlags sample_v;
  std::size_t horizon = 1000, samples = 10000;
  std::uint64_t seed = 1;
  std::vector<std::string> sample_thresholds;
  auto* smp = app.add_subcommand("sample", "Monte Carlo estimate over horizon-truncated runs");
  smp->add_option("file", sample_pos, "automaton document");
  smp->add_option("--automaton", sample_file, "automaton document");
  add_value_flags(smp, sample_v, false);
  smp->add_option("--prefix", prefix, "letters separated by '.'");
  smp->add_option("--loop", loop, "letters separated by '.'")->required();
  smp->add_option("--horizon", horizon)->capture_default_str();
  smp->add_option("--samples", samples)->capture_default_str();
  smp->add_option("--seed", seed)->capture_default_str();
  smp->add_option("--at-least", sample_thresholds, "thresholds reported as p_ge[..] (default: all weights)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*eval) {
      const auto a = load_valid(pick_file(eval_pos, eval_file));
      const auto valfn = value_function(eval_v);
      std::cout << evaluate(a, valfn, semantics_of(eval_v.semantics), parse_word(a.alphabet(), prefix, loop)) << "\n";
    } else if (*dist) {
      const auto a = load_valid(pick_file(dist_pos, dist_file));
      const auto valfn = value_function(dist_v);
      if (!valfn.is_limit()) throw ParseError("distribution needs limsup, liminf or limavg");
      for (const auto& [v, p] : value_distribution(a, valfn, parse_word(a.alphabet(), prefix, loop)).atoms)
        std::cout << v << " " << p << "\n";
    } else if (*val) {
      const auto violations = validate(load_document(validate_file));
      if (violations.empty()) {
        std::cout << "valid\n";
      } else {
        for (const auto& v : violations) std::cout << v.location << ": " << v.message << "\n";
        return kInvariant;
      }
    } else if (*con) {
      return run_construct(cf);
    } else if (*chk) {
      return run_check(check_problem, pick_file(check_pos, check_file), check_v, check_threshold);
    } else if (*cls) {
      return run_classify(cls_v, cls_problem);
    } else if (*fix) {
      const Fixture f = [&] {
        try {
          return fixture(fixture_name);
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what());
        }
      }();
      const std::string text =
          serialize_document(f.automaton, {"fixture " + f.name + " (" + to_string(f.intended_semantics) + " " +
                                               to_string(f.intended_value.kind()) + ")"});
      if (fixture_out.empty()) std::cout << text;
      else save_document(fixture_out, text);
    } else if (*smp) {
      const auto a = load_valid(pick_file(sample_pos, sample_file));
      const auto valfn = value_function(sample_v);
      std::vector<Rational> thresholds;
      for (const auto& t : sample_thresholds) thresholds.push_back(Rational::parse(t));
      std::cout << monte_carlo(a, valfn, parse_word(a.alphabet(), prefix, loop), horizon, samples, seed, thresholds)
                       .str();
    }
  } catch (const ValidationError& e) {
    std::cerr << "qwa: " << e.what() << "\n";
    return kInvariant;
  } catch (const UnsupportedProblem& e) {
    std::cerr << "qwa: " << e.what() << "\n";
    return kUnsupported;
  } catch (const ParseError& e) {
    std::cerr << "qwa: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qwa: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "qwa: internal error: " << e.what() << "\n";
    return 1;
  }
  return kOk;
}
