#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include <positroid/io.hpp>

#include "helpers.hpp"

namespace {

struct run_result {
  int status = -1;
  std::string out;
};

/// Runs a shell command, capturing stdout (stderr is left alone unless the
/// command redirects it).
run_result run(const std::string& cmd) {
  run_result res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  const int rc = pclose(pipe);
  res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return res;
}

const std::string cli = POSITROID_CLI_PATH;

std::string fx(const std::string& name) { return fixture_path(name); }

}  // namespace

TEST_CASE("cli bases match the worked example") {
  const run_result r = run(cli + " bases " + fx("fig2.led"));
  REQUIRE(r.status == 0);
  REQUIRE(r.out ==
          "2,3,5\n2,3,6\n2,4,5\n2,4,6\n2,5,6\n2,5,7\n2,6,7\n"
          "3,5,6\n3,5,7\n3,6,7\n4,5,6\n4,5,7\n4,6,7\n");
}

TEST_CASE("cli rank") {
  const run_result r = run(cli + " rank " + fx("fig7.led") + " --set 4,5,6,7");
  REQUIRE(r.status == 0);
  REQUIRE(r.out == "3\n");
}

TEST_CASE("cli positive-coline json") {
  const run_result r =
      run(cli + " positive-coline " + fx("fig5.led") + " --json");
  REQUIRE(r.status == 0);
  const positroid::json j = positroid::json::parse(r.out);
  REQUIRE(j["coline"] == positroid::json::array({2, 7}));
  REQUIRE(j["positive"] == true);
  REQUIRE(j["candidate"] == "B");
  REQUIRE(j["pair"] == positroid::json::array({1, 2}));
}

TEST_CASE("cli reads stdin") {
  const run_result r = run("printf '2 1\\nVH\\n1 2\\n' | " + cli + " bases -");
  REQUIRE(r.status == 0);
  REQUIRE(r.out == "1\n2\n");
}

TEST_CASE("cli validate lists exclusion violations") {
  const run_result r = run("printf '4 2\\nVVHH\\n1 3\\n2 4\\n' | " + cli +
                           " validate - 2>/dev/null");
  REQUIRE(r.status == 1);
  REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring(
                          "violation: empty box (2,3)"));
}

TEST_CASE("cli exit codes") {
  REQUIRE(run(cli + " validate /no/such/file 2>/dev/null").status == 1);
  REQUIRE(run(cli + " copoints " + fx("fig2.led") +
              " --coline 5 2>/dev/null").status == 1);
  REQUIRE(run(cli + " positive-coline " + fx("fig3.led") + " 2>/dev/null")
              .status == 1);
  REQUIRE(run(cli + " --frobnicate 2>/dev/null").status == 1);
  REQUIRE(run(cli + " 2>/dev/null").status == 1);
  REQUIRE(run(cli + " --help").status == 0);
  // Verification failures use a distinct code.
  REQUIRE(run(cli + " verify --n 8 --suite corollary >/dev/null").status == 2);
  REQUIRE(run(cli + " verify --n 5 --suite corollary >/dev/null").status == 0);
}

TEST_CASE("cli enumerate and catalog stream line by line") {
  const run_result e = run(cli + " enumerate --n 2");
  REQUIRE(e.status == 0);
  REQUIRE(e.out == "2 2 VV\n2 1 VH\n2 1 VH 1,2\n2 1 HV\n2 0 HH\n");

  const run_result c = run(cli + " catalog --n 2");
  REQUIRE(c.status == 0);
  REQUIRE_THAT(c.out, Catch::Matchers::ContainsSubstring("\"bases\":[\"0x3\"]"));
  std::size_t lines = 0;
  for (char ch : c.out) lines += ch == '\n' ? 1 : 0;
  REQUIRE(lines == 5);
}

TEST_CASE("cli graph emits dot") {
  const run_result r = run(cli + " graph " + fx("fig2.led"));
  REQUIRE(r.status == 0);
  REQUIRE_THAT(r.out, Catch::Matchers::StartsWith("digraph le {"));
  REQUIRE_THAT(r.out,
               Catch::Matchers::ContainsSubstring("\"(3,6)\" -> \"(3,4)\";"));
}

TEST_CASE("cli verify text mode reports per-suite verdicts") {
  const run_result r = run(cli + " verify --n 4");
  REQUIRE(r.status == 0);
  REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring(
                          "suite theorem (n <= 4): OK"));
  REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring(
                          "corollary branches n=4: A=1 B=0"));
}

TEST_CASE("cli output is byte-deterministic") {
  const std::string cmd = cli + " verify --n 5 --json";
  REQUIRE(run(cmd).out == run(cmd).out);
  REQUIRE(run(cli + " bases " + fx("fig5.led")).out ==
          run(cli + " bases " + fx("fig5.led")).out);
  // The thread count must not change a single byte.
  REQUIRE(run("POSITROID_THREADS=3 " + cli + " verify --n 6 --suite theorem --json").out ==
          run("POSITROID_THREADS=1 " + cli + " verify --n 6 --suite theorem --json").out);
}
