#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

// End-to-end checks of the installed command surface, driven through the
// real binary (path in NETDECOMP_BIN).

namespace {

std::string binary() {
  const char* env = std::getenv("NETDECOMP_BIN");
  REQUIRE_MESSAGE(env != nullptr, "NETDECOMP_BIN must point at the CLI binary");
  return env;
}

struct RunResult {
  int exitCode = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = binary() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof buf, pipe)) res.output.append(buf, got);
  int status = pclose(pipe);
  res.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string tmpPath(const std::string& name) { return "/tmp/netdecomp_cli_" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("generate/decompose/verify round trip with exit codes") {
  auto graph = tmpPath("c12.txt");
  auto dec = tmpPath("c12.json");

  CHECK(run("generate --type cycle --n 12 --out " + graph).exitCode == 0);
  CHECK(slurp(graph).rfind("12 12", 0) == 0);

  CHECK(run("decompose --graph " + graph + " --k 2 --seed 1 --out " + dec).exitCode == 0);
  auto verify = run("verify --graph " + graph + " --decomposition " + dec);
  CHECK(verify.exitCode == 0);
  CHECK(verify.output.find("\"passed\": true") != std::string::npos);

  // Tamper with the certificate: validation must fail with exit 1.
  auto j = nlohmann::ordered_json::parse(slurp(dec));
  j["cert"]["d"] = -1;
  {
    std::ofstream out(dec);
    out << j.dump(2);
  }
  auto bad = run("verify --graph " + graph + " --decomposition " + dec);
  CHECK(bad.exitCode == 1);
  CHECK(bad.output.find("\"passed\": false") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("decompose --no-such-flag").exitCode == 2);
  CHECK(run("generate --type unknown-generator --n 5").exitCode == 2);
  CHECK(run("").exitCode == 2);  // a subcommand is required
}

TEST_CASE("mds subcommand emits the result schema") {
  auto graph = tmpPath("mds.txt");
  CHECK(run("generate --type gnp --n 16 --p 0.2 --seed 3 --out " + graph).exitCode == 0);
  auto res = run("mds --graph " + graph + " --k 2 --solver exact --seed 2");
  CHECK(res.exitCode == 0);
  auto j = nlohmann::ordered_json::parse(res.output);
  CHECK(j.contains("value"));
  CHECK(j.contains("bound"));
  CHECK(j.contains("oracleOptimum"));
  CHECK(j.contains("ledger"));
  CHECK(j["ledger"].contains("total"));
}

TEST_CASE("sep-decompose and spanner subcommands run end to end") {
  auto graph = tmpPath("c16.txt");
  CHECK(run("generate --type cycle --n 16 --out " + graph).exitCode == 0);
  CHECK(run("sep-decompose --graph " + graph + " --k 2 --sigma 3 --seed 1").exitCode == 0);

  auto spanner = run("spanner --graph " + graph + " --t 3 --k 1 --seed 1");
  CHECK(spanner.exitCode == 0);
  auto j = nlohmann::ordered_json::parse(spanner.output);
  CHECK(j.contains("edges"));
  CHECK(j.contains("intraEdges"));
}

TEST_CASE("remaining subcommands cover the full surface") {
  auto graph = tmpPath("surface.txt");
  CHECK(run("generate --type gnp --n 24 --p 0.12 --seed 4 --out " + graph).exitCode == 0);
  CHECK(run("rs-decompose --graph " + graph + " --k 2 --method aglp-deterministic").exitCode ==
        0);
  CHECK(run("low-intersect --graph " + graph + " --k 2 --gamma 1 --seed 2").exitCode == 0);
  CHECK(run("color --graph " + graph + " --k 2 --seed 2").exitCode == 0);

  auto bip = tmpPath("bip.txt");
  {
    std::ofstream out(bip);
    out << "6 4\n1 4\n1 5\n2 5\n3 6\n";
  }
  CHECK(run("color-tf --graph " + bip + " --epsilon 0.5 --seed 1").exitCode == 0);

  auto c8 = tmpPath("c8.txt");
  CHECK(run("generate --type cycle --n 8 --out " + c8).exitCode == 0);
  CHECK(run("color-girth --graph " + c8 + " --girth 4 --epsilon 0.5 --seed 1").exitCode == 0);

  // Triangle input is a precondition error for the triangle-free coloring.
  auto tri = tmpPath("tri.txt");
  {
    std::ofstream out(tri);
    out << "3 3\n1 2\n1 3\n2 3\n";
  }
  CHECK(run("color-tf --graph " + tri + " --epsilon 0.5").exitCode == 2);
}

TEST_CASE("NETDECOMP_SEED provides the default seed") {
  auto graph = tmpPath("seeded.txt");
  CHECK(run("generate --type gnp --n 30 --p 0.2 --seed 9 --out " + graph).exitCode == 0);
  auto a = run("decompose --graph " + graph + " --k 2 --seed 9");
  setenv("NETDECOMP_SEED", "9", 1);
  auto b = run("decompose --graph " + graph + " --k 2");
  unsetenv("NETDECOMP_SEED");
  CHECK(a.exitCode == 0);
  CHECK(b.exitCode == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("experiment subcommand writes the metrics files") {
  auto specPath = tmpPath("spec.json");
  auto csvPath = tmpPath("rows.csv");
  auto jsonPath = tmpPath("rows.json");
  {
    std::ofstream out(specPath);
    out << "{\"generator\":{\"type\":\"cycle\",\"n\":40},\"algorithm\":\"decompose\","
           "\"params\":{\"k\":2},\"seeds\":[1,2],\"csv\":\"" +
               csvPath + "\",\"json\":\"" + jsonPath + "\"}";
  }
  CHECK(run("experiment --spec " + specPath).exitCode == 0);
  auto csv = slurp(csvPath);
  CHECK(csv.rfind("generator,seed,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);  // header + 2 rows
  auto j = nlohmann::ordered_json::parse(slurp(jsonPath));
  CHECK(j["rows"].size() == 2);
}
