// End-to-end tests of the command-line frontend: exit codes, the documented
// output examples, byte-for-byte determinism, and schema conformance of
// every JSON-emitting subcommand.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "json_schema.hpp"

namespace {

using nlohmann::json;

struct CliResult {
  int status = -1;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CliResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string out_path = std::string(BENTFORGE_CLI_PATH) + ".out.tmp";
  const std::string cmd = env + " " + std::string(BENTFORGE_CLI_PATH) + " " + args +
                          " > " + out_path + " 2> /dev/null";
  const int raw = std::system(cmd.c_str());
  CliResult r;
  r.status = WEXITSTATUS(raw);
  r.out = slurp(out_path);
  std::remove(out_path.c_str());
  return r;
}

json load_schema(const std::string& name) {
  const std::string path = std::string(BENTFORGE_SCHEMA_DIR) + "/" + name;
  json schema = json::parse(slurp(path));
  REQUIRE(schema.is_object());
  return schema;
}

void expect_valid(const json& doc, const std::string& schema_name) {
  const auto err = json_schema::validate(doc, load_schema(schema_name));
  if (err) FAIL_CHECK(schema_name << ": " << *err);
}

}  // namespace

TEST_CASE("classify example") {
  const CliResult r = run_cli("classify --tt 0001 --n 2");
  CHECK(r.status == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["kind"] == "Bent");
  CHECK(doc["amplitude"] == 2);
  CHECK(doc["s"] == 0);
  CHECK(doc["supportFraction"] == "1/1");
  expect_valid(doc, "classify.schema.json");

  const json neither = json::parse(run_cli("classify --tt 00000001").out);
  CHECK(neither["kind"] == "Neither");
  expect_valid(neither, "classify.schema.json");
}

TEST_CASE("wht output is the bare coefficient array") {
  const CliResult r = run_cli("wht --tt 0001");
  CHECK(r.status == 0);
  const json doc = json::parse(r.out);
  CHECK(doc == json::parse("[2,2,2,-2]"));
  expect_valid(doc, "spectrum.schema.json");

  CHECK(run_cli("wht --tt 0001 --format csv").out == "2,2,2,-2\n");
}

TEST_CASE("anf output") {
  const CliResult r = run_cli("anf --tt 00010111");
  const json doc = json::parse(r.out);
  CHECK(doc["degree"] == 2);
  CHECK(doc["anf"] == "x1*x2 + x1*x3 + x2*x3");
  expect_valid(doc, "anf.schema.json");
}

TEST_CASE("truth-table transforms") {
  const json d = json::parse(run_cli("derivative --tt 0001 --dir 1").out);
  CHECK(d["tt"] == "0011");  // D_{e1}(x1*x2) = x2
  expect_valid(d, "truthtable.schema.json");

  const json dr = json::parse(run_cli("derivative --tt 0001 --dir 1 --reduce").out);
  CHECK(dr["tt"] == "01");
  expect_valid(dr, "truthtable.schema.json");

  const json rs = json::parse(run_cli("restrict --tt 0001 --normal 1 --side 1").out);
  CHECK(rs["tt"] == "01");  // x1*x2 on x1 = 1 is x2
  expect_valid(rs, "truthtable.schema.json");

  const json du = json::parse(run_cli("dual --tt 0001").out);
  CHECK(du["tt"] == "0001");  // self-dual
  expect_valid(du, "truthtable.schema.json");
}

TEST_CASE("enumerate-bent") {
  const json doc = json::parse(run_cli("enumerate-bent --n 2 --dump-functions").out);
  CHECK(doc["count"] == 8);
  CHECK(doc["functions"].size() == 8);
  expect_valid(doc, "bentset.schema.json");

  CHECK(run_cli("enumerate-bent --n 6").status == 2);
}

TEST_CASE("census") {
  const json doc = json::parse(run_cli("census --n 4").out);
  CHECK(doc["counts"]["candidates"] == 14);
  CHECK(doc["derivativeImagesComplete"] == true);
  expect_valid(doc, "census.schema.json");

  const json sampled =
      json::parse(run_cli("census --n 6 --samples 100 --seed 5 --dump-functions").out);
  CHECK(sampled["derivativeImagesComplete"] == false);
  CHECK(sampled.contains("note"));
  expect_valid(sampled, "census.schema.json");

  CHECK(run_cli("census --n 6").status == 2);
}

TEST_CASE("count and report") {
  const json exact = json::parse(run_cli("count --exact 3 2").out);
  CHECK(exact["total"] == "128");
  CHECK(exact["counts"]["4"] == "70");
  expect_valid(exact, "count.schema.json");

  const json bound = json::parse(run_cli("count --bound 3 2").out);
  CHECK(bound["provenance"] == "ConvolutionLowerBound");
  CHECK(bound["counts"]["4"] == "38");
  expect_valid(bound, "count.schema.json");

  const json report = json::parse(run_cli("count --report 6").out);
  CHECK(report["log2BalancedLower"] == "21");
  CHECK(report["log2PlateauedUpperApprox"] == 13.88);
  CHECK(report["refutedNominally"] == true);
  expect_valid(report, "report.schema.json");

  const json report4 = json::parse(run_cli("report --n 4").out);
  CHECK(report4["refutedNominally"] == false);
  CHECK(report4["log2BalancedLower"] == "1");
  expect_valid(report4, "report.schema.json");

  CHECK(run_cli("count --exact 3 2 --bound 1 1").status == 2);
  CHECK(run_cli("count").status == 2);
  CHECK(run_cli("report --n 5").status == 2);
}

TEST_CASE("verify") {
  const CliResult r = run_cli("verify --prop bentpla1 --n 2");
  CHECK(r.status == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["proposition"] == "bentpla1");
  CHECK(doc["cases"] == 48);
  CHECK(doc["failures"].empty());
  expect_valid(doc, "verify.schema.json");

  // 896 bent functions times 15 normals times both sides.
  const CliResult full = run_cli("verify --prop bentpla1 --n 4");
  CHECK(full.status == 0);
  const json full_doc = json::parse(full.out);
  CHECK(full_doc["cases"] == 26880);
  CHECK(full_doc["failures"].empty());
  expect_valid(full_doc, "verify.schema.json");

  const CliResult all = run_cli("verify --all --n 2");
  CHECK(all.status == 0);
  const json reports = json::parse(all.out);
  REQUIRE(reports.is_array());
  CHECK(reports.size() == 4);
  for (const auto& rep : reports) expect_valid(rep, "verify.schema.json");

  CHECK(run_cli("verify").status == 2);
  CHECK(run_cli("verify --prop nosuch").status == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("").status == 2);
  CHECK(run_cli("nosuchcommand").status == 2);
  CHECK(run_cli("classify").status == 2);            // no truth table
  CHECK(run_cli("classify --tt 012").status == 2);   // not binary, not a power-of-two hex length
  CHECK(run_cli("dual --tt 0110").status == 2);      // not bent
  CHECK(run_cli("--help").status == 0);
}

TEST_CASE("output is byte-identical across runs and worker counts") {
  const std::string cmds[] = {
      "census --n 4 --dump-functions",
      "census --n 6 --samples 50 --seed 9",
      "verify --all --n 2",
      "count --exact 4 2",
      "enumerate-bent --n 4 --dump-functions",
  };
  for (const auto& cmd : cmds) {
    const CliResult a = run_cli(cmd, "BENTFORGE_THREADS=1");
    const CliResult b = run_cli(cmd, "BENTFORGE_THREADS=1");
    const CliResult c = run_cli(cmd, "BENTFORGE_THREADS=4");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
  }
}

TEST_CASE("truth table from a file") {
  const std::string path = std::string(BENTFORGE_CLI_PATH) + ".tt.tmp";
  {
    std::ofstream out(path);
    out << "0001\n";
  }
  const json doc = json::parse(run_cli("classify --tt-file " + path).out);
  CHECK(doc["kind"] == "Bent");
  std::remove(path.c_str());
}
