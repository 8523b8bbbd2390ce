#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "eccbounds/cli.hpp"
#include "eccbounds/report.hpp"

using namespace ecc;
using nlohmann::json;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliResult res;
  res.code = run_cli(args, out, err);
  res.out = out.str();
  res.err = err.str();
  return res;
}

json payload_of(const CliResult& res, const std::string& command) {
  json j = json::parse(res.out);
  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("command") == command);
  CHECK(j.contains("generated_at"));
  return j.at("payload");
}

// splits one CSV line on commas; good enough for cells the tests pick at
std::vector<std::string> csv_line(const std::string& text, std::size_t row) {
  std::vector<std::string> lines, cells;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item)) lines.push_back(item);
  REQUIRE(row < lines.size());
  std::stringstream ls(lines[row]);
  while (std::getline(ls, item, ',')) cells.push_back(item);
  return cells;
}

}  // namespace

TEST_CASE("compute over an inline edge list") {
  CliResult res = cli({"compute", "--edges", "0-1,1-2,2-3"});
  CHECK(res.code == 0);
  CHECK(res.out.find("sigma0=5/2 (2.5)") != std::string::npos);
  CHECK(res.out.find("sigma1=26") != std::string::npos);
  CHECK(res.out.find("sigma2=16") != std::string::npos);
  CHECK(res.out.find("chromatic=2") != std::string::npos);

  res = cli({"--format", "json", "compute", "--edges", "0-1,1-2,2-3"});
  CHECK(res.code == 0);
  json payload = payload_of(res, "compute");
  REQUIRE(payload.size() == 1);
  CHECK(payload[0].at("n") == 4);
  CHECK(payload[0].at("m") == 3);
  CHECK(payload[0].at("indices").at("sigma0").at("num") == 5);
  CHECK(payload[0].at("indices").at("sigma0").at("den") == 2);
  CHECK(payload[0].at("indices").at("sigma1") == 26);
  CHECK(payload[0].at("indices").at("sigma2") == 16);
  CHECK(payload[0].at("invariants").at("matching") == 2);

  res = cli({"--format", "csv", "compute", "--edges", "0-1,1-2,2-3"});
  CHECK(res.code == 0);
  auto header = csv_line(res.out, 0);
  auto row = csv_line(res.out, 1);
  REQUIRE(header.size() == row.size());
  CHECK(header[3] == "ecc_sum");
  CHECK(row[3] == "10");
  CHECK(header[4] == "sigma0_num");
  CHECK(row[4] == "5");
  CHECK(row[5] == "2");

  CHECK(cli({"compute", "--edges", "0-0"}).code == 2);
  CHECK(cli({"compute", "--edges", "nonsense"}).code == 2);
  CHECK(cli({"compute", "--file", "/no/such/file"}).code == 2);
}

TEST_CASE("generate reports the predicted profile") {
  CliResult res = cli({"--format", "json", "generate", "--family", "kite:n=5,d=3"});
  CHECK(res.code == 0);
  json payload = payload_of(res, "generate");
  CHECK(payload.at("spec").at("family") == "kite");
  CHECK(payload.at("n") == 5);
  CHECK(payload.at("predicted").at("sigma2") == 31);
  CHECK(payload.at("predicted").at("diameter") == 3);

  res = cli({"generate", "--family", "double_broom:n=6,d=3,a=2"});
  CHECK(res.code == 0);
  CHECK(res.out.find("sigma2 = 28") != std::string::npos);

  CHECK(cli({"generate", "--family", "kite:n=5"}).code == 2);       // missing d
  CHECK(cli({"generate", "--family", "mystery:n=5"}).code == 2);    // unknown family
  CHECK(cli({"generate"}).code == 2);                               // --family required
}

TEST_CASE("bound output agrees across formats") {
  std::vector<std::string> base = {"bound", "--id", "thm_sigma2_nmd_lower", "--params",
                                   "n=7,m=7,d=4"};
  CliResult res = cli(base);
  CHECK(res.code == 0);
  CHECK(res.out.find("value=57") != std::string::npos);
  CHECK(res.out.find("[exceptional]") != std::string::npos);

  std::vector<std::string> jargs = base;
  jargs.insert(jargs.begin(), {"--format", "json"});
  json payload = payload_of(cli(jargs), "bound");
  REQUIRE(payload.size() == 1);
  CHECK(payload[0].at("value").at("num") == 57);
  CHECK(payload[0].at("value").at("den") == 1);
  CHECK(payload[0].at("exceptional") == true);

  std::vector<std::string> cargs = base;
  cargs.insert(cargs.begin(), {"--format", "csv"});
  res = cli(cargs);
  auto header = csv_line(res.out, 0);
  auto row = csv_line(res.out, 1);
  CHECK(header[4] == "value_num");
  CHECK(row[4] == "57");  // same number all three ways

  // inapplicable parameters still exit 0 and say why
  res = cli({"bound", "--id", "thm_sigma2_diam_max", "--params", "n=7,d=2"});
  CHECK(res.code == 0);
  CHECK(res.out.find("not applicable") != std::string::npos);

  CHECK(cli({"bound", "--id", "no_such_bound"}).code == 2);
  CHECK(cli({"bound", "--id", "lemma_tree_max", "--params", "i=1,n=8"}).code == 2);
  CHECK(cli({"bound", "--id", "lemma_tree_max", "--params", "i=one"}).code == 2);
}

TEST_CASE("verify subcommand runs and reports") {
  CliResult res = cli({"verify", "--id", "lemma_tree_max", "--nmax", "5"});
  CHECK(res.code == 0);
  CHECK(res.out.find("0 violations") != std::string::npos);
  CHECK(res.out.find("uniqueness: ok") != std::string::npos);
  CHECK(res.out.find("attainment: ok") != std::string::npos);

  res = cli({"--format", "json", "verify", "--id", "obs_sandwich", "--nmax", "4", "--jobs", "2"});
  CHECK(res.code == 0);
  json payload = payload_of(res, "verify");
  CHECK(payload.at("violation_count") == 0);
  CHECK(payload.at("graphs_checked") == 44);  // 1 + 1 + 4 + 38

  CHECK(cli({"verify", "--id", "lemma_tree_max"}).code == 2);  // --nmax required
  CHECK(cli({"verify", "--id", "nope", "--nmax", "5"}).code == 2);
}

TEST_CASE("scan subcommand") {
  CliResult res = cli({"--format", "csv", "scan", "--experiment", "dn", "--n", "5"});
  CHECK(res.code == 0);
  auto header = csv_line(res.out, 0);
  CHECK(header[0] == "experiment");
  // d = 2..4 for both indices plus the summary row
  CHECK(csv_line(res.out, 1)[0] == "dn");
  CHECK(csv_line(res.out, 7)[0] == "dn");

  res = cli({"scan", "--experiment", "cycletail", "--n-list", "8,9"});
  CHECK(res.code == 0);
  CHECK(res.out.find("crossover") != std::string::npos);

  res = cli({"--format", "json", "scan", "--experiment", "sigma2max", "--n", "7"});
  CHECK(res.code == 0);
  json payload = payload_of(res, "scan");
  REQUIRE(payload.size() == 1);
  CHECK(payload[0].at("best_value").at("num") == 124);  // the path P_7 wins at this size
  CHECK(payload[0].at("argmax_class") == "TREE");

  CHECK(cli({"scan", "--experiment", "sigma2max", "--n", "40"}).code == 2);  // needs --construction
  CHECK(cli({"scan", "--experiment", "sigma2max", "--n", "40", "--construction"}).code == 0);
  CHECK(cli({"scan", "--experiment", "dn"}).code == 2);          // missing --n
  CHECK(cli({"scan", "--experiment", "mystery", "--n", "5"}).code == 2);
}

TEST_CASE("formats listing and exit codes") {
  CliResult res = cli({"--format", "json", "formats"});
  CHECK(res.code == 0);
  json payload = payload_of(res, "formats");
  CHECK(payload.at("families").size() == 18);
  CHECK(payload.at("bounds").size() == 18);
  CHECK(payload.at("verifications").size() == 20);

  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({}).code == 2);                  // a subcommand is required
  CHECK(cli({"frobnicate"}).code == 2);      // unknown subcommand
  CHECK(cli({"--format", "yaml", "formats"}).code == 2);
}

TEST_CASE("report envelope and csv writer") {
  json rep = make_report("demo", json{{"x", 1}});
  CHECK(rep.at("schema_version") == 1);
  CHECK(rep.at("command") == "demo");
  json reparsed = json::parse(rep.dump());
  CHECK(reparsed == rep);

  Rational r(22, 8);
  json jr = r;
  CHECK(jr.at("num") == 11);
  CHECK(jr.at("den") == 4);
  CHECK(jr.at("decimal") == "2.75");
  Rational back = jr.get<Rational>();
  CHECK(back == r);

  std::string csv = to_csv({{"a", "b,c", "d\"e"}, {"plain", "", "x\ny"}});
  CHECK(csv == "a,\"b,c\",\"d\"\"e\"\nplain,,\"x\ny\"\n");
}
