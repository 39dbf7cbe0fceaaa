#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mckay/cli.hpp"
#include "oracle.hpp"

using namespace mckay;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("golden documents") {
  const auto bt = run({"graph", "binary:T", "--out", "dot"});
  CHECK(bt.code == 0);
  CHECK(bt.out == slurp(golden_path("binary_T.dot")));
  const auto c5 = run({"graph", "cyclic:5", "--rho", "irrep:1", "--out", "json"});
  CHECK(c5.code == 0);
  CHECK(c5.out == slurp(golden_path("cyclic_5.json")));
  const auto s3 = run({"chartab", "dihedral:3", "--out", "json"});
  CHECK(s3.code == 0);
  CHECK(s3.out == slurp(golden_path("dihedral_3_chartab.json")));
}

TEST_CASE("graph json round trip") {
  const auto r = run({"graph", "extraspecial:+:1", "--out", "json", "--components"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["group"] == "extraspecial:+:1");
  CHECK(doc["vertices"].size() == 5);
  CHECK(doc["edges"].size() == 4);
  CHECK(doc["flags"]["undirected"] == true);
  REQUIRE(doc["components"].size() == 1);
  CHECK(doc["components"][0]["shape"] == "D~4");
  CHECK(doc["components"][0]["alias"] == "Hedgehog(4)");
  int trivial = 0;
  for (const auto& v : doc["vertices"]) trivial += v["trivial"].get<bool>();
  CHECK(trivial == 1);
}

TEST_CASE("directed graphs in dot") {
  const auto r = run({"graph", "cyclic:3", "--rho", "irrep:1"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("digraph", 0) == 0);
  CHECK(r.out.find("->") != std::string::npos);
}

TEST_CASE("components split into separate dot graphs") {
  const auto r = run({"graph", "product(binary:T,cyclic:3)", "--rho", "pullback:faithful-selfdual-min", "--components"});
  REQUIRE(r.code == 0);
  std::size_t count = 0;
  for (auto p = r.out.find("component"); p != std::string::npos; p = r.out.find("component", p + 1)) ++count;
  CHECK(count == 3);
  CHECK(r.out.find("E~6") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"graph"}).code == 2);
  CHECK(run({"graph", "wat:3"}).code == 2);
  CHECK(run({"graph", "cyclic:4", "--rho", "irrep:9"}).code == 2);
  CHECK(run({"graph", "cyclic:4", "--out", "svg"}).code == 2);
  CHECK(run({"verify", "--suite", "bogus"}).code == 2);
  CHECK(run({"chartab", "cyclic:2", "--out", "json"}).code == 0);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("order cap from the environment") {
  setenv("MCKAY_ORDER_CAP", "100", 1);
  CHECK(run({"graph", "binary:I"}).code == 2);
  CHECK(run({"graph", "binary:O"}).code == 0);
  setenv("MCKAY_ORDER_CAP", "zero", 1);
  CHECK(run({"graph", "cyclic:2"}).code == 2);
  unsetenv("MCKAY_ORDER_CAP");
  CHECK(run({"graph", "binary:I"}).code == 0);
}

TEST_CASE("report documents") {
  VerificationReport report{"demo", {}};
  report.records.push_back({"x.one", "a", "in", "1", "1", true, 2.0});
  report.records.push_back({"x.two", "a", "in", "1", "2", false, 3.0});
  CHECK_FALSE(report.pass());
  CHECK(report.failures() == 1);
  const auto doc = nlohmann::json::parse(report_to_json(report, true));
  CHECK(doc["checks"] == 2);
  CHECK(doc["failures"] == 1);
  CHECK(doc["records"][1]["runtime_ms"] == 3.0);
  CHECK_FALSE(nlohmann::json::parse(report_to_json(report))["records"][0].contains("runtime_ms"));
  const auto text = report_to_text(report);
  CHECK(text.find("FAIL x.two") != std::string::npos);
  CHECK(text.find("demo: 1/2 passed") != std::string::npos);
}
