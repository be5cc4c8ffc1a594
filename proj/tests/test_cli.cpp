#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mockq/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "mockq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = mockq::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verify emits one JSON report") {
  Run r = run({"verify", "--id", "MUDISS_IV", "--order", "60", "--json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  CHECK(j[0]["id"] == "MUDISS_IV");
  CHECK(j[0]["status"] == "pass");
  CHECK(j[0]["order"] == 60);
}

TEST_CASE("failing stated reading still exits 0 when an alternative validates") {
  Run r = run({"verify", "--id", "NEWOMEGA2", "--order", "40", "--json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j[0]["reading"] == "sign-corrected");
}

TEST_CASE("usage errors exit 2") {
  Run unknown = run({"verify", "--id", "NO_SUCH"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("valid ids") != std::string::npos);
  CHECK(unknown.err.find("NEWOMEGA") != std::string::npos);
  CHECK(run({"verify", "--id", "NEWOMEGA", "--order", "1.5"}).code == 2);
  CHECK(run({"verify", "--id", "NEWOMEGA", "--order", "0"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"numeric", "--check", "no-such-check", "--tau", "i"}).code == 2);
  CHECK(run({"numeric", "--check", "etatrans", "--tau", "1-2i"}).code == 2);
  CHECK(run({"numeric", "--check", "etatrans", "--tau", "garbage"}).code == 2);
  CHECK(run({"coeffs", "--series", "chi"}).code == 2);
}

TEST_CASE("numeric check prints its residual") {
  Run r = run({"numeric", "--check", "s-transform", "--tau", "0.25+1i", "--tol", "1e-8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("s-transform") != std::string::npos);
  CHECK(r.out.find("pass") != std::string::npos);
  Run j = run({"numeric", "--check", "etatrans", "--check", "gab-v", "--json"});
  CHECK(j.code == 0);
  CHECK(nlohmann::json::parse(j.out).size() == 10);
}

TEST_CASE("an impossible tolerance fails with exit 1") {
  Run r = run({"numeric", "--check", "watson-lemma", "--tau", "0.25+1i", "--tol", "1e-30"});
  CHECK(r.code == 1);
}

TEST_CASE("coeffs dumps the Eulerian series and list names everything") {
  Run r = run({"coeffs", "--series", "f", "--order", "5"});
  CHECK(r.code == 0);
  // f(q) = 1 + q - 2q^2 + 3q^3 - 3q^4 + ...
  CHECK(r.out.find("24/24\t1 0 0 0 0 0 0 0") != std::string::npos);
  CHECK(r.out.find("48/24\t-2 0 0 0 0 0 0 0") != std::string::npos);
  CHECK(r.out.find("96/24\t-3 0 0 0 0 0 0 0") != std::string::npos);
  Run l = run({"list"});
  CHECK(l.code == 0);
  CHECK(l.out.find("NEWOMEGA2_TWIST") != std::string::npos);
  CHECK(l.out.find("CRANK_ZETA3") < l.out.find("NEWF"));
  Run c = run({"list", "--checks"});
  CHECK(c.out.find("consistency-newf") != std::string::npos);
}

TEST_CASE("--out writes the report to a file") {
  const std::string path = "mockq_cli_test_out.json";
  Run r = run({"verify", "--id", "JTP_01", "--order", "30", "--json", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  auto j = nlohmann::json::parse(f);
  CHECK(j[0]["id"] == "JTP_01");
  std::remove(path.c_str());
}
