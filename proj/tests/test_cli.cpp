#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "qwa/document.hpp"

using namespace qwa;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kTmp = std::string(QWA_TEST_TMP) + "/qwa_cli_";

Outcome run(const std::string& args) {
  const std::string err_path = kTmp + "stderr.txt";
  const std::string cmd = std::string(QWA_BINARY) + " " + args + " 2>" + err_path;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, slurp(err_path)};
}

std::string fx(const std::string& name) { return std::string(QWA_FIXTURE_DIR) + "/" + name + ".qwa"; }

std::string write_tmp(const std::string& name, const std::string& text) {
  const std::string path = kTmp + name;
  std::ofstream(path) << text;
  return path;
}

} // namespace

TEST_CASE("eval examples") {
  auto r = run("eval " + fx("fig3") + " --value limavg --semantics as --loop a");
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  r = run("eval " + fx("fig2") + " --value limavg --semantics pos --loop b");
  CHECK(r.out == "1\n");
  r = run("eval --automaton " + fx("fig1_low") + " --value limavg --semantics pos --loop send.ack");
  CHECK(r.out == "33/20\n");
  r = run("eval " + fx("fig1_high") + " --value limavg --semantics pos --loop send.ack");
  CHECK(r.out == "619/200\n");
  r = run("eval " + fx("fig4") + " --value disc --lambda 1/2 --semantics pos --loop a");
  CHECK(r.out == "2\n");
}

TEST_CASE("eval input errors") {
  CHECK(run("eval " + fx("fig2") + " --value disc --semantics pos --loop a").code == 2);
  CHECK(run("eval " + fx("fig2") + " --value limavg --lambda 1/2 --semantics pos --loop a").code == 2);
  CHECK(run("eval " + fx("fig2") + " --value disc --lambda 1 --semantics pos --loop a").code == 2);
  CHECK(run("eval " + fx("fig2") + " --value limavg --semantics pos --loop c").code == 2);
  CHECK(run("eval " + fx("fig2") + " --value limavg --semantics pos --loop ''").code == 2);
  CHECK(run("eval " + fx("fig2") + " --value avg --semantics pos --loop a").code == 2);
  CHECK(run("eval /nonexistent.qwa --value sup --semantics pos --loop a").code == 2);
  CHECK(run("eval --value sup --semantics pos --loop a").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("--help").code == 0);

  const auto broken = write_tmp("broken.qwa", "alphabet: a\nstates: q\ninitial: q=1\ntransitions:\n  q a q 1/2 0\n");
  const auto r = run("eval " + broken + " --value sup --semantics pos --loop a");
  CHECK(r.code == 3);
  CHECK(r.err.find("row sum is 1/2") != std::string::npos);
  CHECK(run("validate " + broken).code == 3);
  CHECK(run("validate " + fx("fig1_low")).code == 0);
}

TEST_CASE("construct") {
  auto r = run("construct max-initial " + fx("fig2") + " " + fx("fig2") + " -o " + kTmp + "max.qwa");
  CHECK(r.code == 0);
  CHECK(r.out == "states: 7\n");
  CHECK(validate(load_document(kTmp + "max.qwa")).empty());

  r = run("construct threshold " + fx("fig4") + " --threshold 1 --kind buchi -o " + kTmp + "thr.qwa");
  CHECK(r.code == 0);
  const auto thr = load_document(kTmp + "thr.qwa");
  for (const auto& w : thr.weights()) CHECK((w == Rational(0) || w == Rational(1)));
  CHECK(slurp(kTmp + "thr.qwa").find("# acceptance: buchi") == 0);

  r = run("construct cobuchi-to-buchi " + kTmp + "thr.qwa -o " + kTmp + "cb.qwa");
  CHECK(r.code == 0);
  CHECK(r.out == "states: 6\n");

  r = run("construct sum-limsup " + fx("fig4") + " " + fx("fig4") + " --semantics as");
  CHECK(r.code == 0);
  CHECK(validate(parse_document(r.out)).empty());

  r = run("construct max-initial " + fx("fig2") + " " + fx("fig1_low"));
  CHECK(r.code == 2);

  r = run("construct max-initial " + fx("fig2") + " " + fx("fig2") + " --value limavg --semantics as");
  CHECK(r.code == 4);
  CHECK(r.err.find("AsLimAvg is not closed under max") != std::string::npos);

  r = run("construct product-min " + fx("fig2") + " " + fx("fig2") + " --value limavg --semantics pos");
  CHECK(r.code == 4);
  CHECK(r.err.find("PosLimAvg is not closed under min") != std::string::npos);

  r = run("construct complement " + fx("fig4") + " --value limsup --semantics pos");
  CHECK(r.code == 4);
  CHECK(r.err.find("closure table: PosLimSup is closed under complement") != std::string::npos);
}

TEST_CASE("check") {
  auto r = run("check emptiness " + fx("fig1_low") + " --value sup --semantics pos --threshold 5");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("SAT\n", 0) == 0);
  CHECK(r.out.find("witness: ") != std::string::npos);

  r = run("check emptiness " + fx("fig1_low") + " --value sup --semantics pos --threshold 6");
  CHECK(r.out.rfind("UNSAT\n", 0) == 0);

  r = run("check emptiness --automaton " + fx("fig2") + " --value limsup --semantics pos");
  CHECK(r.code == 4);
  CHECK(r.out == "Undecidable\n");

  const auto one = write_tmp("one.qwa", "alphabet: a\nstates: q\ninitial: q=1\ntransitions:\n  q a q 1 1\n");
  r = run("check emptiness " + one + " --value disc --lambda 1/2 --semantics pos --threshold 2");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("SAT\n", 0) == 0);

  r = run("check universality " + one + " --value disc --lambda 1/2 --semantics pos --threshold 2");
  CHECK(r.code == 4);
  CHECK(r.out == "Open\n");

  r = run("check emptiness " + fx("fig2") + " --value sup --semantics as --threshold 1");
  CHECK(r.code == 0);
  CHECK(r.err.find("universal reading") != std::string::npos);
}

TEST_CASE("classify, fixture, sample") {
  auto r = run("classify --value liminf --semantics as --problem emptiness");
  CHECK(r.code == 0);
  CHECK(r.out == "Undecidable\n");
  r = run("classify --value disc --semantics as --problem emptiness");
  CHECK(r.out.rfind("Open\nnote: (1)", 0) == 0);
  CHECK(run("classify --value sup --semantics nd --problem emptiness").code == 2);
  CHECK(run("classify").code == 0);

  r = run("fixture fig4");
  CHECK(r.code == 0);
  const auto fig4 = parse_document(r.out);
  CHECK(fig4.num_states() == 3);
  CHECK(run("fixture fig9").code == 2);

  const std::string sample = "sample " + fx("fig1_low") + " --value limavg --loop send.ack --horizon 200 --samples 300 --seed 7";
  const auto first = run(sample);
  CHECK(first.code == 0);
  CHECK(first.out == run(sample).out);
  CHECK(first.out.rfind("generator=mt19937_64\nsamples=300\nhorizon=200\nseed=7\nmean=", 0) == 0);
  CHECK(run("sample " + fx("fig1_low") + " --value limavg --loop send.ack --horizon 1").code == 2);
}
