#include <cstdio>
#include <nlohmann/json.hpp>
#include <string>

#include "doctest.h"

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(CPATHS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  CliResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), p)) > 0) r.out.append(buf, n);
  int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  while (!r.out.empty() && r.out.back() == '\n') r.out.pop_back();
  return r;
}

}  // namespace

TEST_CASE("cli rmatrix") {
  auto r = run_cli(
      "rmatrix --left [[1,1,4],[2,3,5]] --right [[2,3],[3,4],[4,5]]");
  CHECK(r.status == 0);
  CHECK(r.out == "[[1,1],[2,2],[3,4]] (x) [[3,3,4],[4,5,5]]  H=3");

  auto j = run_cli(
      "rmatrix --left [[1,1,4],[2,3,5]] --right [[2,3],[3,4],[4,5]] "
      "--format json");
  CHECK(j.status == 0);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["H"] == 3);
  CHECK(parsed.dump() == j.out);  // canonical single-line json
}

TEST_CASE("cli stat") {
  auto r = run_cli("stat --name tau --path 4312111");
  CHECK(r.status == 0);
  CHECK(r.out == "11");
  auto c = run_cli("stat --name charge --path 4221343");
  CHECK(c.status == 0);
  CHECK(c.out == "16");
  auto m = run_cli("stat --name tau_mu --path 212111 --mu 4,2");
  CHECK(m.status == 0);
}

TEST_CASE("cli bbs evolution window") {
  auto r = run_cli("bbs evolve --path 4312111 --steps 6 --alg ts");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "t=0: 4312111\n"
        "t=1: 1141321\n"
        "t=2: 1114113\n"
        "t=3: 1111411\n"
        "t=4: 1111141\n"
        "t=5: 1111114\n"
        "t=6: 1111111");
}

TEST_CASE("cli kostka and macdonald") {
  CHECK(run_cli("kostka --lambda 2,1 --mu 1,1,1").out == "2");
  CHECK(run_cli("kostka --lambda 2,1 --mu 1,1,1 --foulkes").out == "q^2 + q");
  auto pk = run_cli("kostka --lambda 6,4,4 --parabolic 2x2,2x2,3x2");
  CHECK(pk.status == 0);
  CHECK(pk.out == "q^10");
  auto mac = run_cli("macdonald --mu 4,2 --lambda 5,1");
  CHECK(mac.status == 0);
  CHECK(mac.out == "q + q^2 + q^3 + t + q t");
}

TEST_CASE("cli verify") {
  auto r = run_cli("verify reg --weight 1,3,3");
  CHECK(r.status == 0);
  CHECK(r.out.substr(0, 4) == "PASS");
  CHECK(r.out.find("shift=39") != std::string::npos);
  CHECK(r.out.find("1/1 checks passed") != std::string::npos);

  auto j = run_cli("verify reg --weight 1,3,3 --format json");
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.is_array());
  CHECK(parsed[0]["verdict"] == "PASS");
  CHECK(parsed[0]["shift"] == 39);
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli("nonsense").status == 2);
  CHECK(run_cli("stat --name tau").status == 2);          // missing --path
  CHECK(run_cli("stat --name bogus --path 11").status == 2);
  CHECK(run_cli("stat --name tau_mu --path 11").status == 1);  // domain error
  CHECK(run_cli("rmatrix --left [[1,2],[2,1]] --right [[1]]").status == 1);
}
