#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "json.hpp"

#ifndef OSPX_CLI
#error "OSPX_CLI must name the ospx executable"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(OSPX_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "ospx_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

// 1, x, y even; x*x = y, y*x = x, x*y = 0: (xx)x = x but x(xx) = 0.
std::string nonassociative_config() {
  return R"({"name":"bad","field":{"kind":"Q"},"parity":[0,0,0],"unit":["1","0","0"],
  "mul":[[0,0,[[0,"1"]]],[0,1,[[1,"1"]]],[0,2,[[2,"1"]]],[1,0,[[1,"1"]]],[2,0,[[2,"1"]]],
         [1,1,[[2,"1"]]],[2,1,[[1,"1"]]]],
  "involution":[["1","0","0"],["0","1","0"],["0","0","1"]]})";
}

}  // namespace

TEST_CASE("verify sto on dual numbers") {
  Run r = run("verify --suite sto --m 2 --n 2 --preset dual_numbers_id");
  CHECK(r.code == 0);
  auto j = parse(r);
  CHECK(j["suite"] == "sto");
  CHECK(j["shape"]["m"] == 2);
  std::vector<std::string> names;
  for (const auto& c : j["checks"]) {
    CHECK(c["status"] == "pass");
    names.push_back(c["name"]);
  }
  CHECK(std::is_sorted(names.begin(), names.end()));
  for (const char* key : {"tool_version", "suite", "shape", "algebra", "checks", "timestamp"}) CHECK(j.contains(key));
}

TEST_CASE("non-associative config fails the algebra suite") {
  auto path = scratch("bad.json");
  std::ofstream(path) << nonassociative_config();
  Run r = run("verify --suite algebra --config " + path.string());
  CHECK(r.code == 1);
  auto j = parse(r);
  bool named = false;
  for (const auto& c : j["checks"])
    if (c["name"] == "associativity") {
      CHECK(c["status"] == "fail");
      CHECK(c["witness"].get<std::string>().find('(') != std::string::npos);
      named = true;
    }
  CHECK(named);
}

TEST_CASE("cocycle suite") { CHECK(run("verify --suite cocycle-alpha --m 3 --n 1 --preset s_plus_sop:Q").code == 0); }

TEST_CASE("homology functors") {
  CHECK(parse(run("homology --functor hd1 --preset ground_field_id:Q"))["dim"] == 0);
  CHECK(parse(run("homology --functor z --preset ground_field_id:F3"))["dim"] == 2);
  CHECK(parse(run("homology --functor rrr --preset s_plus_sop:Q"))["dim"] == 2);
}

TEST_CASE("h2 comparisons") {
  auto a = parse(run("h2 --m 1 --n 1 --preset ground_field_id:F3"));
  CHECK(a["oracle"] == 2);
  CHECK(a["formula"] == 2);
  CHECK(a["match"] == true);
  auto b = parse(run("h2 --m 2 --n 1 --preset s_plus_sop:Q"));
  CHECK(b["oracle"] == 2);
  CHECK(b["formula"] == 2);
  auto c = parse(run("h2 --m 2 --n 2 --preset ground_field_id:Q"));
  CHECK(c["oracle"] == 0);
  CHECK(c["match"] == true);
  auto d = parse(run("h2 --m 2 --n 1 --preset ground_field_id:Q"));
  CHECK_FALSE(d.contains("formula"));
  CHECK_FALSE(d.contains("match"));
}

TEST_CASE("exit code 2 on invalid input") {
  CHECK(run("verify --suite nonsense --preset ground_field_id:Q").code == 2);
  CHECK(run("verify --suite algebra --preset unknown:Q").code == 2);
  CHECK(run("verify --suite algebra").code == 2);
  CHECK(run("verify --suite algebra --preset ground_field_id:Q --config x.json").code == 2);
  CHECK(run("verify --suite algebra --config /nonexistent/file.json").code == 2);
  CHECK(run("verify --suite lmd34 --m 1 --n 1 --preset ground_field_id:Q").code == 2);
  CHECK(run("h2 --m 0 --n 1 --preset ground_field_id:Q").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("failing assumption exits 1") {
  CHECK(run("verify --suite assumption --preset ground_field_id:Q").code == 1);
  CHECK(run("verify --suite assumption --preset adjoin_i:Q").code == 0);
}

TEST_CASE("reports are identical across runs apart from the timestamp") {
  auto a = parse(run("verify --suite lemmas --m 2 --n 1 --preset grassmann_id:Q"));
  auto b = parse(run("verify --suite lemmas --m 2 --n 1 --preset grassmann_id:Q"));
  a.erase("timestamp");
  b.erase("timestamp");
  CHECK(a.dump() == b.dump());
}

TEST_CASE("--out writes the report") {
  auto path = scratch("report.json");
  std::filesystem::remove(path);
  Run r = run("verify --suite z --m 1 --n 1 --preset ground_field_id:F3 --out " + path.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  CHECK(nlohmann::json::parse(f)["suite"] == "z");
}

TEST_CASE("osp_{1|2} suites") {
  CHECK(run("verify --suite cocycle-osp12 --m 1 --n 1 --preset grassmann_id:Q").code == 0);
  CHECK(run("verify --suite kernel --m 1 --n 1 --preset ground_field_id:F3").code == 0);
  CHECK(run("verify --suite cocycle-beta --m 2 --n 1 --preset adjoin_i:Q").code == 0);
  CHECK(run("verify --suite cocycle-beta --m 2 --n 2 --preset adjoin_i:Q").code == 2);
}
