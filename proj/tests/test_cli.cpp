#include "doctest.h"

#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace finsub;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "finsub");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json groups_of(const std::string& text) {
  const auto j = json::parse(text);
  json g = json::array();
  for (const auto& e : j["groups"]) g.push_back(json::array({e["rank"], e["torsion"]}));
  return g;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "finsub_test_cli" / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("homology command") {
  auto r = run({"homology", "--space", "sphere", "--d", "1", "--n", "3", "--construction", "expn"});
  REQUIRE(r.code == 0);
  CHECK(groups_of(r.out) == json::parse(R"([[1,[]],[0,[]],[0,[]],[1,[]]])"));
  const auto j = json::parse(r.out);
  for (const char* key : {"space", "construction", "n", "d", "reduced", "coeffs", "groups"}) CHECK(j.contains(key));
  CHECK(j["reduced"] == false);

  r = run({"homology", "--d", "2", "--n", "2"});
  CHECK(groups_of(r.out) == json::parse(R"([[1,[]],[0,[]],[1,[]],[0,[]],[1,[]]])"));

  r = run({"homology", "--d", "2", "--n", "1", "--construction", "conf"});
  CHECK(groups_of(r.out) == json::parse(R"([[0,[]],[0,[]],[1,[]]])"));
  CHECK(json::parse(r.out)["reduced"] == true);

  r = run({"homology", "--d", "2", "--n", "3", "--coeffs", "Q", "--max-degree", "4"});
  CHECK(groups_of(r.out) == json::parse(R"([[1,[]],[0,[]],[0,[]],[0,[]],[1,[]]])"));

  r = run({"homology", "--d", "2", "--n", "3"});
  CHECK(json::parse(r.out)["groups"][4]["torsion"] == json::parse("[2]"));
}

TEST_CASE("outputs are byte-identical across runs") {
  const std::vector<std::vector<std::string>> commands = {
      {"homology", "--d", "2", "--n", "3", "--jobs", "3"},
      {"homology", "--space", "torus", "--n", "2", "--construction", "conf", "--model", "based"},
      {"groupcoh", "--n", "3", "--action", "sign", "--max-degree", "3"},
      {"page", "--d", "2", "--n", "3", "--r", "1"},
      {"verify", "--claim", "thm2", "--json"},
      {"verify", "--claim", "circle"},
  };
  for (const auto& c : commands) {
    const auto a = run(c);
    const auto b = run(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}

TEST_CASE("exit codes") {
  CHECK(run({"verify", "--claim", "thm1", "--n", "3", "--d", "2"}).code == 0);
  CHECK(run({"verify", "--claim", "no-such-claim"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"homology", "--n", "2", "--bogus"}).code == 2);
  CHECK(run({"homology", "--n", "2", "--construction", "cone"}).code == 2);
  CHECK(run({"homology", "--n", "2", "--coeffs", "F2"}).code == 2);
  CHECK(run({"homology", "--n", "2", "--space", "file:/nonexistent/x.json"}).code == 2);
  CHECK(run({"verify", "--claim", "connecting", "--d", "3", "--n", "2"}).code == 2);
  CHECK(run({"homology", "--d", "2", "--n", "5"}).code == 3);
  CHECK(run({"verify", "--claim", "thm1", "--n", "5", "--d", "2"}).code == 3);
  CHECK(run({"homology", "--d", "2", "--n", "3", "--max-simplices", "10"}).code == 3);
  CHECK(run({"--help"}).code == 0);

  VerificationReport good;
  good.verdict = Verdict::match;
  VerificationReport open;
  open.verdict = Verdict::adjudicated;
  VerificationReport bad;
  bad.verdict = Verdict::mismatch;
  CHECK(exit_code({good, open}) == 0);
  CHECK(exit_code({good, bad, open}) == 1);
}

TEST_CASE("verification reports") {
  const auto r = run({"verify", "--claim", "all", "--json"});
  CHECK(r.code == 0);
  const auto reports = json::parse(r.out);
  REQUIRE(reports.size() > 20);
  std::set<std::string> claims;
  for (const auto& rep : reports) {
    claims.insert(rep["claim"]);
    CHECK(!rep["anchor"].get<std::string>().empty());
    CHECK(!rep["expected"].empty());
    for (const auto& e : rep["expected"]) CHECK((e["origin"] == "claim" || e["origin"] == "oracle"));
    CHECK(rep["parameters"].contains("n"));
    CHECK(rep["parameters"].contains("d"));
    CHECK(rep["parameters"].contains("space"));
    CHECK(!rep.contains("seconds"));
  }
  CHECK(claims.size() == claim_ids().size());

  const auto adj = json::parse(run({"verify", "--claim", "thm2", "--n", "2", "--d", "3", "--json"}).out);
  REQUIRE(adj.size() == 3);
  CHECK(adj[2]["verdict"] == "adjudicated");
  CHECK(adj[2]["expected"].size() == 2);
  CHECK(adj[2]["computed"] == "H_4 = 0");

  const auto timed = json::parse(run({"verify", "--claim", "thm1", "--json", "--timing"}).out);
  CHECK(timed[0].contains("seconds"));

  const auto text = run({"verify", "--claim", "connecting", "--n", "3"});
  CHECK(text.out.find("[match] connecting") != std::string::npos);
  CHECK(text.out.find("free block [-2]") != std::string::npos);
}

TEST_CASE("group cohomology and pages") {
  auto r = run({"groupcoh", "--n", "3", "--action", "sign", "--max-degree", "1"});
  auto j = json::parse(r.out);
  CHECK(j["group"] == "S_3");
  CHECK(j["action"] == "sign");
  CHECK(j["groups"][1]["torsion"] == json::parse("[2]"));

  r = run({"page", "--space", "sphere", "--d", "2", "--n", "3", "--variant", "bar", "--r", "inf"});
  j = json::parse(r.out);
  CHECK(j["entries"] == json::parse(R"([{"p":3,"q":3,"dim":1}])"));
  r = run({"page", "--d", "2", "--n", "3"});
  j = json::parse(r.out);
  CHECK(j["differentials"][0]["from"] == json::parse("[2,1]"));
  CHECK(j["differentials"][0]["rank"] == 1);
  CHECK(run({"page", "--d", "2", "--n", "3", "--r", "zero"}).code == 2);
}

TEST_CASE("cache command") {
  const auto dir = scratch("cache");
  auto r = run({"cache", "stats", "--cache-dir", dir.string()});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["entries"] == 0);
  CHECK(run({"homology", "--d", "2", "--n", "2", "--cache-dir", dir.string()}).code == 0);
  CHECK(json::parse(run({"cache", "stats", "--cache-dir", dir.string()}).out)["entries"].get<int>() > 0);

  ::setenv(kCacheEnv, dir.string().c_str(), 1);
  const auto cached = run({"homology", "--d", "2", "--n", "2"});
  r = run({"cache", "clear"});
  ::unsetenv(kCacheEnv);
  CHECK(json::parse(r.out)["removed"].get<int>() > 0);
  CHECK(cached.out == run({"homology", "--d", "2", "--n", "2"}).out);
  CHECK(run({"cache", "stats"}).code == 2);
  CHECK(run({"cache", "frobnicate", "--cache-dir", dir.string()}).code == 2);
}

TEST_CASE("space files through the command line") {
  const auto dir = scratch("build");
  const auto file = dir / "s2.json";
  CHECK(run({"build", "--space", "sphere", "--d", "2", "--trunc", "5", "--out", file.string()}).code == 0);
  const auto spec = "file:" + file.string();
  const auto from_file = run({"homology", "--space", spec, "--n", "2", "--trunc", "5"});
  const auto direct = run({"homology", "--d", "2", "--n", "2"});
  CHECK(groups_of(from_file.out) == groups_of(direct.out));
  CHECK(json::parse(from_file.out)["d"] == 2);

  const auto out = dir / "h.json";
  CHECK(run({"homology", "--d", "1", "--n", "2", "--out", out.string()}).code == 0);
  std::ifstream in(out);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(groups_of(buf.str()) == json::parse(R"([[1,[]],[1,[]],[0,[]]])"));

  const auto conf = dir / "conf.json";
  CHECK(run({"build", "--d", "2", "--n", "2", "--construction", "conf", "--out", conf.string()}).code == 0);
  const auto h = run({"homology", "--space", "file:" + conf.string(), "--n", "1", "--construction", "expn"});
  CHECK(h.code == 0);
  std::filesystem::remove_all(dir.parent_path());
}
