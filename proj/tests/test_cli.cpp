#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(WORDMAPS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("analyze as JSON") {
  auto r = run("analyze '[x,y]' --json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["psl2_verdict"] == "Surjective");
  CHECK(j["minus_id"]["status"] == "InImage");
  CHECK(j["derived_level"] == "InF1NotF2");
  CHECK(j["obstruction"].is_string());
  for (const char* key : {"word", "num_generators", "exponent_sums", "criteria", "sl2_verdict", "certificates"})
    CHECK(j.contains(key));
  // deterministic output
  CHECK(run("analyze '[x,y]' --json").out == r.out);
}

TEST_CASE("analyze options") {
  auto r = run("analyze 'g1 g2 g3^-1' --generators 3 --json");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["num_generators"] == 3);
  auto b = run("analyze '[y x y^-1, x^-1]' --big 1 --json");
  REQUIRE(b.code == 0);
  CHECK(nlohmann::json::parse(b.out)["sl2_verdict"] == "Surjective");
  CHECK(run("analyze 'x^2 y'").out.find("PSL(2) verdict: Surjective") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("analyze 'x(y'").code == 1);
  CHECK(run("trace 'x z'").code == 1);
  CHECK(run("big y --t 1").code == 2);
  CHECK(run("minusid 'x y'").code == 2);
  CHECK(run("witness x^2 --target '[[1,1],[0,1]]'").code == 2);
  CHECK(run("ff-image x --prime 4").code == 2);
  CHECK(run("verify-paper").code == 0);
  CHECK(run("").code != 0);
}

TEST_CASE("other commands") {
  auto t = run("trace '[y x y^-1, x^-1]' --json");
  REQUIRE(t.code == 0);
  CHECK(nlohmann::json::parse(t.out)["P"].is_string());

  auto b = run("big '[y x y^-1, x^-1]' --t 1 --json");
  REQUIRE(b.code == 0);
  auto bj = nlohmann::json::parse(b.out);
  CHECK(bj["verdict"] == "BigAt");
  CHECK(bj["levels"].size() == 3);

  auto w = run("witness '[x,y]' --target '[[1,0],[7/36,1]]' --json");
  REQUIRE(w.code == 0);
  CHECK(nlohmann::json::parse(w.out)["Z"].size() == 2);
  auto wt = run("witness '[x,y]' --target 7 --json --seed 3");
  REQUIRE(wt.code == 0);
  CHECK(nlohmann::json::parse(wt.out)["residual"].get<double>() < 1e-6);

  auto m = run("minusid '[x,y]' --json");
  REQUIRE(m.code == 0);
  CHECK(nlohmann::json::parse(m.out)["N"] == 2);

  auto f = run("ff-image '[x,y]' --prime 5 --projective --json");
  REQUIRE(f.code == 0);
  auto fj = nlohmann::json::parse(f.out);
  CHECK(fj["image_size"] == 60);
  CHECK(fj["full"] == true);

  auto v = run("verify-paper --json");
  REQUIRE(v.code == 0);
  for (const auto& e : nlohmann::json::parse(v.out)) CHECK(e["passed"] == true);
}
