#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cf/cli.hpp"

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path("/tmp/cf_test_" + name) {
    std::ofstream f(path);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("[TRIVIAL] successful commands exit 0 with one JSON line") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"field", "--q", "9"},
           {"residue", "--q", "7", "--d", "3"},
           {"waring", "--q", "7", "--d", "2", "--target", "6"},
           {"hilbert", "--n", "2", "--d", "2"},
           {"fermat", "--q", "5", "--d", "2", "--n", "1"},
           {"diagonal", "--q", "5", "--d", "2", "--coefficients", "1,2,3"},
           {"bounds", "kummer", "--d", "3"},
           {"bounds", "schreier", "--degree", "3", "--generators", "(0 1),(0 1 2)"},
       }) {
    RunResult r = run_cli(args);
    CAPTURE(args[0]);
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out.back() == '\n');
    CHECK(contains(r.out, "\"schema\":\"cf/1\""));
  }
}

TEST_CASE("[TRIVIAL] output is deterministic across runs") {
  std::vector<std::string> args{"sweep", "--q-max", "9", "--d-max", "3", "--trials", "2",
                                "--seed", "11"};
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("[DERIVED] unsolvable problems exit 1 with a no_solution document") {
  RunResult fermat = run_cli({"fermat", "--q", "3", "--d", "2", "--n", "1"});
  CHECK(fermat.code == 1);
  CHECK(contains(fermat.out, "\"result\":\"no_solution\""));

  RunResult diag = run_cli({"diagonal", "--q", "3", "--d", "2", "--coefficients", "1,1"});
  CHECK(diag.code == 1);
  CHECK(contains(diag.out, "no_solution"));
}

TEST_CASE("[TRIVIAL] usage problems exit 2") {
  CHECK(run_cli({"residue", "--d", "3"}).code == 2);              // no field
  CHECK(run_cli({"residue", "--q", "7"}).code == 2);              // missing --d
  CHECK(run_cli({"nonsense"}).code == 2);                          // unknown command
  CHECK(run_cli({}).code == 2);                                    // no subcommand
  CHECK(run_cli({"field", "--q", "12"}).code == 2);                // not a prime power
  CHECK(run_cli({"field", "--field", "p=7", "--q", "5"}).code == 2);
  CHECK(run_cli({"waring", "--field", "Q", "--d", "2"}).code == 2);  // needs squares
  RunResult bad = run_cli({"field", "--q", "12"});
  CHECK(!bad.err.empty());
  CHECK(bad.out.empty());
}

TEST_CASE("[TRIVIAL] help exits 0") {
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(contains(run_cli({"--help"}).out, "fermat"));
  CHECK(run_cli({"fermat", "--help"}).code == 0);
}

TEST_CASE("[DERIVED] domain failures exit 1, resource caps exit 3") {
  // rank of an unrepresentable element
  RunResult dom = run_cli({"waring", "--q", "4", "--d", "3", "--target", "x"});
  CHECK(dom.code == 1);
  CHECK(contains(dom.err, "NotRepresentable"));

  RunResult cap = run_cli({"fermat", "--q", "3", "--d", "2", "--n", "1", "--cap", "2"});
  CHECK(cap.code == 3);
  CHECK(contains(cap.err, "BruteForceCapExceeded"));
}

TEST_CASE("[TRIVIAL] verify subcommand wires files and exit codes") {
  RunResult cert = run_cli({"waring", "--q", "7", "--d", "2", "--target", "6"});
  TempFile good("cert.json", cert.out);
  RunResult ok = run_cli({"verify", good.path});
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "\"valid\":true"));

  std::string broken = cert.out;
  broken.replace(broken.find("\"3\""), 3, "\"5\"");
  TempFile bad("bad.json", broken);
  RunResult fail = run_cli({"verify", bad.path});
  CHECK(fail.code == 1);
  CHECK(contains(fail.out, "\"valid\":false"));

  TempFile garbage("garbage.json", "not json at all");
  CHECK(run_cli({"verify", garbage.path}).code == 2);
  CHECK(run_cli({"verify", "/tmp/cf_test_does_not_exist.json"}).code == 2);
}

TEST_CASE("[DERIVED] config file sets defaults and flags override it") {
  TempFile config("config.json", "{\"format\":\"text\",\"brute_force_cap\":2}");

  // config format applies
  RunResult text = run_cli({"--config", config.path, "field", "--q", "7"});
  CHECK(text.code == 0);
  CHECK(contains(text.out, "order: 7"));
  CHECK(!contains(text.out, "{"));

  // flag beats config
  RunResult json = run_cli({"--config", config.path, "--format", "json", "field", "--q", "7"});
  CHECK(contains(json.out, "\"order\":7"));

  // config cap applies (brute force budget of 2 is hit)
  RunResult capped = run_cli({"--config", config.path, "fermat", "--q", "3", "--d", "2",
                              "--n", "1"});
  CHECK(capped.code == 3);

  // flag raises it again
  RunResult raised = run_cli({"--config", config.path, "--cap", "100000", "fermat", "--q", "3",
                              "--d", "2", "--n", "1"});
  CHECK(raised.code == 1);  // genuine no_solution

  TempFile bad_config("bad_config.json", "[1,2]");
  CHECK(run_cli({"--config", bad_config.path, "field", "--q", "7"}).code == 2);
  CHECK(run_cli({"--config", "/tmp/cf_test_missing_config.json", "field", "--q", "7"}).code == 2);
}

TEST_CASE("[TRIVIAL] global flags work after the subcommand") {
  RunResult r = run_cli({"field", "--q", "7", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "kind: prime"));
}

TEST_CASE("[DERIVED] characteristic-zero waring via the tower") {
  RunResult r = run_cli({"waring", "--field", "Q[x]/(x^2+1)", "--d", "6",
                         "--minus-one-squares", "x"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"witnesses\":[\"-x\"]"));
}
