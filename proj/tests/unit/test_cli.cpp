#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "adel/cli.hpp"

using adel::cli::run_command;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string example(const char* name) { return std::string(ADEL_EXAMPLES_DIR) + "/" + name; }

Json run_json(std::vector<std::string> args) {
  const Run r = run(std::move(args));
  INFO(r.err);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("prove snake") {
  const Run text = run({"prove", "snake"});
  CHECK(text.code == 0);
  CHECK(text.out.find("verdict: pass") != std::string::npos);
  const Json j = run_json({"--json", "prove", "snake"});
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"command", "inputs", "verdict", "certificates", "details", "timings"});
  CHECK(j["verdict"] == "pass");
  CHECK(j["timings"] == Json::object());
  CHECK(j["certificates"].size() > 50);
  for (const auto& c : j["certificates"]) CHECK(c["verified"] == true);
}

TEST_CASE("prove snake with a scaled connecting arrow fails") {
  const Run r = run({"prove", "snake", "--multiplier", "2"});
  CHECK(r.code == 1);
  CHECK(r.out.find("verdict: fail") != std::string::npos);
  CHECK(run({"prove", "snake", "--multiplier", "two"}).code == 2);
}

TEST_CASE("prove five and uniqueness") {
  CHECK(run({"prove", "five"}).code == 0);
  CHECK(run({"prove", "uniqueness"}).code == 0);
  CHECK(run({"prove", "lemma"}).code == 2);
}

TEST_CASE("sweep") {
  const Json j = run_json({"--json", "sweep", "--range", "-3..3"});
  CHECK(j["verdict"] == "pass");
  for (const auto& [s, exact] : j["details"]["exact"].items()) {
    CAPTURE(s);
    CHECK(exact.get<bool>() == (s == "1" || s == "-1"));
  }
  CHECK(j["details"]["exact"].size() == 7);
  CHECK(run({"sweep", "--range", "3..-3"}).code == 2);
  CHECK(run({"sweep", "--range", "x"}).code == 2);
}

TEST_CASE("hom-group on the example session") {
  const Json j = run_json({"--category", example("connecting.adel"), "--json", "hom-group", "K", "C"});
  CHECK(j["invariant_factors"] == Json::parse(R"({"torsion": [], "free_rank": 1})"));
  CHECK(j["details"]["generators"][0]["datum"] == "[beta]");
  const Run text = run({"--category", example("connecting.adel"), "hom-group", "K", "C"});
  CHECK(text.out.find("Hom = Z") != std::string::npos);
}

TEST_CASE("constructions on the snake session") {
  const std::string cat = example("snake.adel");
  CHECK(run({"--category", cat, "is-epi", "proj"}).code == 0);
  CHECK(run({"--category", cat, "is-mono", "proj"}).code == 1);
  CHECK(run({"--category", cat, "is-iso", "alpha"}).code == 1);
  CHECK(run({"--category", cat, "check-equal", "conn", "conn"}).code == 0);
  CHECK(run({"--category", cat, "is-exact", "alpha", "proj"}).code == 0);
  CHECK(run({"--category", cat, "is-exact", "alpha", "beta"}).code == 1);
  const Run k = run({"--category", cat, "kernel", "beta"});
  CHECK(k.code == 0);
  CHECK(k.out.find("kernel object:") != std::string::npos);
  CHECK(run({"--category", cat, "cokernel", "alpha"}).code == 0);
  CHECK(run({"--category", cat, "homology", "alpha", "beta*gamma"}).code == 0);
  const Run c = run({"--category", cat, "connecting", "alpha", "beta", "gamma"});
  CHECK(c.code == 0);
  CHECK(c.out.find("datum: [beta]") != std::string::npos);
}

TEST_CASE("eval") {
  const std::string cat = example("snake.adel");
  const Run r = run({"--category", cat, "eval", "--rep", example("snake.rep"), "K", "Coka", "C", "conn"});
  CHECK(r.code == 0);
  CHECK(r.out.find("F(K) = Z/2") != std::string::npos);
  const Json j = run_json({"--category", cat, "--json", "--seed", "7", "eval", "--random", "5", "K", "conn"});
  CHECK(j["verdict"] == "pass");
  CHECK(j["inputs"]["seed"] == 7);
  // Random representations without a seed are not reproducible.
  CHECK(run({"--category", cat, "--json", "eval", "--random", "5", "K"}).code == 2);
}

TEST_CASE("json output is byte-stable") {
  const std::vector<std::string> args = {"--category", example("snake.adel"), "--json", "--seed", "3", "eval",
                                         "--random", "4", "K", "C", "conn"};
  CHECK(run(args).out == run(args).out);
  CHECK(run({"--json", "prove", "five"}).out == run({"--json", "prove", "five"}).out);
}

TEST_CASE("usage errors exit with 2") {
  const std::string cat = example("snake.adel");
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--category", cat, "kernel", "nothing"}).code == 2);
  CHECK(run({"--category", "/nonexistent/file.adel", "kernel", "alpha"}).code == 2);
  CHECK(run({"--category", cat, "eval", "--rep", "/nonexistent.rep", "K"}).code == 2);
  CHECK(run({"--category", cat, "eval", "--rep", example("snake.adel"), "K"}).code == 2);
  const Run e = run({"--category", cat, "kernel", "nothing"});
  CHECK_FALSE(e.err.empty());
}
