#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "ascdesc/io.hpp"
#include "cli.hpp"

using namespace ascdesc;
using io::Json;

namespace {

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("analyze a dense matrix") {
  const Run r = run({"analyze", fixture("jordan3.json")});
  REQUIRE(r.code == cli::ok);
  const Json j = Json::parse(r.out);
  CHECK(j["tool"] == "ascdesc");
  CHECK(j["verb"] == "analyze");
  CHECK(j["result"]["chain_report"]["asc"] == 3);
  CHECK(j["command"] == "ascdesc analyze " + fixture("jordan3.json"));

  const Json shifted = Json::parse(run({"analyze", fixture("jordan3.json"), "--lambda", "1"}).out);
  CHECK(shifted["result"]["chain_report"]["asc"] == 0);
}

TEST_CASE("analyze an operator spec") {
  const Run r = run({"analyze", fixture("backward_shift.json"), "--window", "16,4,4"});
  REQUIRE(r.code == cli::ok);
  const Json j = Json::parse(r.out);
  CHECK(j["result"]["verdicts"]["asc"]["classification"] == "divergent");
}

TEST_CASE("spectrum of a tower") {
  const Run r = run({"spectrum", fixture("forward_shift.json"), "--tower", "--quantity", "dsc"});
  REQUIRE(r.code == cli::ok);
  CHECK(r.out.find("\"0\"") != std::string::npos);
}

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", "--theorem", "lemma41", "--seed", "0", "--trials", "5"}).code == cli::ok);
  CHECK(run({"verify", "--theorem", "nothing"}).code == cli::parse_error);
  CHECK(run({"verify", "--theorem", "prop11", "--trials", "0"}).code == cli::parse_error);
}

TEST_CASE("converge exit codes follow the verdict") {
  const Run fail = run({"converge", fixture("j2_plus_identity_over_n.json"), "--probe", "T1", "--lambda", "0"});
  CHECK(fail.code == cli::has_fail);
  const Json j = Json::parse(fail.out);
  CHECK(j["result"]["probe"]["verdict"] == "fail");

  CHECK(run({"converge", fixture("scaled_j2.json"), "--probe", "lem1"}).code == cli::ok);
  CHECK(run({"converge", fixture("backward_shift_sequence.json"), "--probe", "lem2"}).code == cli::ok);
  CHECK(run({"converge", fixture("backward_shift_sequence.json"), "--probe", "lem2", "--format", "csv"}).code ==
        cli::parse_error);

  const Run csv = run({"converge", fixture("scaled_j2.json"), "--probe", "lem1", "--format", "csv"});
  CHECK(csv.code == cli::ok);
  CHECK(csv.out.find("n,dku,dkl,dru,drl,gamma") != std::string::npos);
}

TEST_CASE("gap between subspace files") {
  const Run r = run({"gap", fixture("line_e1.json"), fixture("line_diagonal.json")});
  REQUIRE(r.code == cli::ok);
  const Json j = Json::parse(r.out);
  CHECK(io::float_from_json(j["result"]["gap"]) == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("malformed input") {
  const Run r = run({"analyze", fixture("malformed.json")});
  CHECK(r.code == cli::parse_error);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"analyze", fixture("does_not_exist.json")}).code == cli::parse_error);
  CHECK(run({"bogus"}).code == cli::parse_error);
}

TEST_CASE("worker count honours the environment cap") {
  setenv("ASCDESC_THREADS", "1", 1);
  CHECK(cli::worker_count() == 1);
  unsetenv("ASCDESC_THREADS");
  CHECK(cli::worker_count() >= 1);
}
