#include <sstream>
#include <vector>

#include "cantor/error.hpp"
#include "commands.hpp"
#include "doctest.h"
#include "json.hpp"
#include "scenarios.hpp"

using namespace cantor;
using namespace cantor::cli;

namespace {

struct Outcome {
  int status;
  std::string out, err;
};

Outcome invoke(std::vector<const char*> args) {
  args.insert(args.begin(), "cantor");
  std::ostringstream out, err;
  int status = main_entry(static_cast<int>(args.size()), args.data(), out, err);
  return {status, out.str(), err.str()};
}

JobConfig parse(std::vector<const char*> args) {
  args.insert(args.begin(), "cantor");
  return parse_args(static_cast<int>(args.size()), args.data());
}

}  // namespace

TEST_CASE("argument parsing") {
  JobConfig job = parse({"build", "--field", "x^2-x-1", "--bases", "d, 2*d+1", "--point", "1", "--mode", "quasi"});
  CHECK(job.command == Command::build);
  CHECK(job.mode == Mode::quasi);
  CHECK(job.bases == "d, 2*d+1");
  CHECK(job.point == "1");
  try {
    parse({"build", "--field", "x^2-x-1", "--bases", "d, 2*d+1"});
    FAIL("missing --point accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::usage_error);
    CHECK(std::string(e.what()).find("--point") != std::string::npos);
  }
  CHECK(parse({"reproduce", "fig2"}).scenario == "fig2");
  CHECK(parse({"prefix-table", "--bases", "d", "--field", "x^3-x-1", "--base-word", "thue-morse"}).mode == Mode::quasi);
  CHECK_THROWS_AS(parse({"build", "--bases", "d+", "--point", "1"}), Error);
  CHECK_THROWS_AS(parse({"frobnicate"}), Error);
  CHECK_THROWS_AS(parse({"analyze", "complexity", "--bases", "2,3", "--point", "1"}), Error);
  CHECK(parse({"--help"}).show_help);
}

TEST_CASE("exit codes") {
  Outcome help = invoke({"--help"});
  CHECK(help.status == 0);
  for (const char* sub : {"build", "expand", "expand-up", "morphism-expand", "analyze", "prefix-table", "admissible",
                          "transduce-morphic", "reproduce"})
    CHECK(help.out.find(sub) != std::string::npos);
  CHECK(invoke({"build", "--bases", "2,3"}).status == 2);
  CHECK(invoke({"build", "--field", "x^2-1", "--bases", "2", "--point", "1"}).status == 1);
  Outcome cap = invoke({"build", "--field", "x^2-x-1", "--bases", "d, 2", "--point", "1", "--force", "--state-cap", "500"});
  CHECK(cap.status == 1);
  CHECK(cap.err.find("StateCapExceeded") != std::string::npos);
  CHECK(invoke({"build", "--field", "x^2-x-1", "--bases", "d, 2", "--point", "1"}).status == 1);  // 2 is not of degree 2
  Outcome unknown = invoke({"reproduce", "fig99"});
  CHECK(unknown.status == 1);
  CHECK(unknown.err.find("UnknownScenario") != std::string::npos);
}

TEST_CASE("build output formats") {
  Outcome text = invoke({"build", "--field", "x^2-x-1", "--bases", "d, 2*d+1", "--point", "1", "--mode", "quasi"});
  CHECK(text.status == 0);
  CHECK(text.out.find("states: 4") != std::string::npos);
  Outcome js = invoke({"build", "--bases", "2, 3", "--point", "932/3885", "--format", "json"});
  REQUIRE(js.status == 0);
  auto j = nlohmann::json::parse(js.out);
  CHECK(j["states"].size() == 180);
  CHECK(j.contains("field"));
  CHECK(j.contains("letters"));
  CHECK(j.contains("edges"));
  CHECK(j["mode"] == "greedy");
  Outcome dot = invoke({"build", "--bases", "2, 3", "--point", "1", "--format", "dot"});
  CHECK(dot.out.rfind("digraph", 0) == 0);
}

TEST_CASE("subcommands") {
  CHECK(invoke({"expand", "--bases", "2,3", "--point", "932/3885", "--base-word", "thue-morse", "-n", "16"}).out.find(
            "0110111121021020") != std::string::npos);
  CHECK(invoke({"expand-up", "--field", "x^2-x-1", "--bases", "d, 4d+1", "--point", "1", "--base-up", "(0 1)", "--force"})
            .out == "141 (0)\n");
  Outcome m = invoke({"morphism-expand", "--psi", "2: 2 3; 3: 3 2", "--point", "932/3885", "--preimage", "thue-morse",
                      "-n", "16", "--format", "json"});
  auto mj = nlohmann::json::parse(m.out);
  CHECK(mj["machine_states"] == 5);
  CHECK(mj["letter_to_letter_states"] == 15);
  CHECK(mj["merged_states"] == 14);
  Outcome a = invoke({"analyze", "two-walk", "--field", "x^3-x-1", "--bases", "d, d^3", "--mode", "quasi", "--format", "json"});
  auto aj = nlohmann::json::parse(a.out);
  CHECK(aj["two_walk"] == true);
  CHECK(aj["witness"]["w"] == std::vector<int>{2, 0, 0});
  Outcome c = invoke({"analyze", "complexity", "--bases", "2,3", "--point", "932/3885", "--blocks", "23,32"});
  CHECK(c.out.find("visited 14 of 180") != std::string::npos);
  Outcome s = invoke({"analyze", "scc", "--field", "x^2-2", "--bases", "4+3d, 5+4d", "--mode", "quasi"});
  CHECK(s.out.find("strongly connected: no") != std::string::npos);
  Outcome adm = invoke({"admissible", "--bases", "2,3", "--candidate", "(2)", "--base-up", "(0)"});
  CHECK(adm.out == "admissible: no\n");
  Outcome tm = invoke({"transduce-morphic", "--field", "x^2-x-1", "--bases", "d, d^3", "--base-word", "thue-morse",
                       "--mode", "quasi", "-n", "8"});
  CHECK(tm.out.find("prefix: 12204002") != std::string::npos);
  Outcome listed = invoke({"expand", "--field", "x^2-x-1", "--bases", "d, d^3", "--point", "[1/2, 0]", "--base-word",
                           "thue-morse", "--mode", "quasi", "-n", "8"});
  Outcome plain = invoke({"expand", "--field", "x^2-x-1", "--bases", "d, d^3", "--point", "1/2", "--base-word",
                          "thue-morse", "--mode", "quasi", "-n", "8"});
  CHECK(listed.status == 0);
  CHECK(listed.out == plain.out);
  CHECK(plain.out.find("03111003") != std::string::npos);
  CHECK(invoke({"expand", "--field", "x^2-x-1", "--bases", "d, d^3", "--point", "[1, d]", "--base-word", "(0)"}).status == 2);
  Outcome pt = invoke({"prefix-table", "--field", "x^3-x-1", "--bases", "d, d^3", "--base-word",
                       "thue-morse | blocks: 0->101, 1->110", "--max-shift", "14", "--format", "json"});
  auto pj = nlohmann::json::parse(pt.out);
  CHECK(pj["groups"][1]["prefix"] == std::vector<int>{1, 0, 1, 1, 0});
  CHECK(pj["groups"][1]["shifts"] == std::vector<int>{1, 10});
}

TEST_CASE("scenarios are deterministic and pass") {
  for (const std::string& name : scenario_names()) {
    std::ostringstream first, second;
    CHECK_MESSAGE(reproduce(name, first), name);
    reproduce(name, second);
    CHECK(first.str() == second.str());
    CHECK(first.str().find("FAIL") == std::string::npos);
  }
  std::ostringstream out;
  reproduce("ex311-180", out);
  CHECK(out.str().rfind("states=180 PASS\n", 0) == 0);
  CHECK_THROWS_AS(reproduce("nope", out), Error);
}
