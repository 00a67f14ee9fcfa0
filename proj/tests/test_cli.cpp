#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
  int status = -1;
  std::string output;
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  std::string cmd = env_prefix + HASSETTDIV_BIN " " + args + " 2>&1";
  CliResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
  int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("help exits cleanly") {
  CliResult r = run_cli("--help");
  CHECK(r.status == 0);
  CHECK(contains(r.output, "verify"));
  CHECK(contains(r.output, "generators"));
}

TEST_CASE("generators listing") {
  CliResult r = run_cli("generators --g 1 --weights 1,1");
  CHECK(r.status == 0);
  CHECK(r.output == "kappa\nlambda\npsi(1)\npsi(2)\nDirr\nD(0;{1,2})\n");

  CliResult j = run_cli("generators --g 1 --weights '1/2,1/2' --json");
  CHECK(j.status == 0);
  auto doc = nlohmann::json::parse(j.output);
  REQUIRE(doc.is_array());
  CHECK(doc.size() == 6);
  CHECK(doc.back() == "Dsec(1,2)");
}

TEST_CASE("eval renders and normalizes") {
  CliResult r = run_cli("eval --g 1 --weights 1,1 --class 'kappa' --normal");
  CHECK(r.status == 0);
  CHECK(r.output == "12*lambda - Dirr - D(0;{1,2})\n");

  CliResult raw = run_cli("eval --g 1 --weights 1,1 --class '2*kappa - kappa + lambda'");
  CHECK(raw.status == 0);
  CHECK(raw.output == "kappa + lambda\n");
}

TEST_CASE("delta closed form") {
  CliResult r = run_cli("delta --g 1 --weights '1/2,1/2'");
  CHECK(r.status == 0);
  CHECK(r.output == "2*kappa + 3/2*psi(1) + 3/2*psi(2) + Dsec(1,2)\n");

  CliResult j = run_cli("delta --g 1 --weights '1/2,1/2' --json");
  CHECK(j.status == 0);
  auto doc = nlohmann::json::parse(j.output);
  CHECK(doc["genus"] == 1);
  CHECK(doc["weights"][0] == "1/2");
  CHECK(doc["expression"] == "2*kappa + 3/2*psi(1) + 3/2*psi(2) + Dsec(1,2)");
  REQUIRE(doc["class"].is_array());
  CHECK(doc["class"][0]["generator"] == "kappa");
  CHECK(doc["class"][0]["coefficient"] == "2");
}

TEST_CASE("transfers along morphisms") {
  CliResult pull =
      run_cli("map reduce-pull --g 1 --weights 1,1 --to '1/2,1/2' --class 'psi(1)'");
  CHECK(pull.status == 0);
  CHECK(pull.output == "psi(1) - D(0;{1,2})\n");

  CliResult push =
      run_cli("map reduce-push --g 1 --weights 1,1 --to '1/2,1/2' --class 'kappa'");
  CHECK(push.status == 0);
  CHECK(push.output == "kappa - Dsec(1,2)\n");

  CliResult nodal = run_cli(
      "map nodal-restrict --g 2 --weights 1,1 --side-genus 1 --part '{1,2}' --class 'kappa'");
  CHECK(nodal.status == 0);
  CHECK(contains(nodal.output, "left  [g=1, weights=(1,1,1)]: kappa + psi(3)"));
  CHECK(contains(nodal.output, "right [g=1, weights=(1)]: kappa + psi(1)"));

  CliResult irr = run_cli("map irr-restrict --g 2 --weights '' --class 'kappa'");
  CHECK(irr.status == 0);
  CHECK(irr.output == "kappa + psi(1) + psi(2)\n");

  CliResult forget = run_cli("map forget-pull --g 1 --weights 1,1 --class 'psi(1)'");
  CHECK(forget.status == 0);
  CHECK(forget.output == "psi(1) - D(0;{1,2})\n");

  CliResult coin = run_cli(
      "map coincident-restrict --g 1 --weights '1/3,1/3,1/3' --part '{1,2}' --class 'psi(1)'");
  CHECK(coin.status == 0);
  CHECK(coin.output == "psi(2)\n");
}

TEST_CASE("single-space verification") {
  CliResult r = run_cli("verify canonical-class --g 1 --weights 1,1");
  CHECK(r.status == 0);
  CHECK(contains(r.output, "PASS canonical-class on g=1, weights=(1,1)"));
  CHECK(contains(r.output, "1 checks, 0 failed"));

  CliResult all = run_cli("verify all --g 1 --weights '1/2,1/2'");
  CHECK(all.status == 0);
  CHECK(contains(all.output, "0 failed"));
  CHECK(!contains(all.output, "FAIL"));

  CliResult tau = run_cli("verify constant-weight-pullback --g 1 --weights 1,1,1 --tau '1/4'");
  CHECK(tau.status == 0);
  CHECK(contains(tau.output, "PASS constant-weight-pullback"));
  CHECK(contains(tau.output, "tau=1/4"));

  CliResult one = run_cli(
      "verify nodal-restriction --g 2 --weights 1,1 --side-genus 1 --part '{1,2}'");
  CHECK(one.status == 0);
  CHECK(contains(one.output, "PASS nodal-restriction"));
}

TEST_CASE("verification JSON carries the seed") {
  CliResult r = run_cli("verify delta-routes --g 1 --weights '1/2,1/2' --json");
  CHECK(r.status == 0);
  auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["seed"] == 1729);
  CHECK(doc["passed"] == true);
  REQUIRE(doc["reports"].is_array());
  CHECK(doc["reports"][0]["identity"] == "delta-routes");
  CHECK(doc["reports"][0]["passed"] == true);
  CHECK(doc["reports"][0]["difference"].is_array());
  CHECK(doc["reports"][0]["difference"].empty());

  CliResult env = run_cli("verify delta-routes --g 1 --weights '1/2,1/2' --json",
                          "HASSETTDIV_SEED=42 ");
  auto env_doc = nlohmann::json::parse(env.output);
  CHECK(env_doc["seed"] == 42);

  CliResult flag = run_cli("verify delta-routes --g 1 --weights '1/2,1/2' --seed 7 --json",
                           "HASSETTDIV_SEED=42 ");
  auto flag_doc = nlohmann::json::parse(flag.output);
  CHECK(flag_doc["seed"] == 7);  // the flag wins over the environment
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run_cli("").status == 2);                 // a subcommand is required
  CHECK(run_cli("no-such-command").status == 2);
  CHECK(run_cli("generators").status == 2);       // --g is required
  CHECK(run_cli("generators --g 1 --weights ''").status == 2);  // unstable space
  CHECK(run_cli("generators --g 0 --weights 1,1").status == 2);
  CHECK(run_cli("eval --g 1 --weights 1,1 --class 'frob'").status == 2);
  CHECK(run_cli("eval --g 1 --weights 1,1 --class 'psi(9)'").status == 2);
  CHECK(run_cli("verify no-such-family").status == 2);
  CHECK(run_cli("verify all --g 1 --weights 1,1 --json", "HASSETTDIV_SEED=abc ").status == 2);
  CHECK(run_cli("map reduce-pull --g 1 --weights '1/2,1/2' --to 1,1 --class 'kappa'").status ==
        2);  // weights cannot rise
}

TEST_CASE("grid listing is deterministic") {
  CliResult a = run_cli("grid");
  CliResult b = run_cli("grid");
  CHECK(a.status == 0);
  CHECK(a.output == b.output);
  CHECK(contains(a.output, "g=1, weights=(1)"));
  CHECK(contains(a.output, "g=3"));
  CliResult other = run_cli("grid", "HASSETTDIV_SEED=5 ");
  CHECK(other.status == 0);
  CHECK(other.output != a.output);
}
