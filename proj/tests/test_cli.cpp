#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <json.hpp>
#include <string>

#include "galled_census/arith.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string binary() {
  const char* env = std::getenv("GALLED_CENSUS_BIN");
  REQUIRE_MESSAGE(env != nullptr, "GALLED_CENSUS_BIN must point at the CLI binary");
  return env;
}

RunResult run(const std::string& args) {
  RunResult r;
  std::string cmd = binary() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("count subcommands") {
  RunResult r = run("galled --n 10");
  CHECK_EQ(r.exit_code, 0);
  CHECK_EQ(r.out, "19327089427089478650\n");

  CHECK_EQ(run("one-component --n 7").out, "81791297280\n");
  CHECK_EQ(run("fdu --n 3").out, "168\n");
  CHECK_EQ(run("dup --n 2").out, "11\n");
  CHECK_EQ(run("max-retic --n 7").out, "7577955\n");
}

TEST_CASE("bounds subcommand") {
  RunResult r = run("bounds --n 3");
  CHECK_EQ(r.exit_code, 0);
  CHECK_EQ(r.out, "L 240\nGN 240\nU 276\n");
}

TEST_CASE("distribution csv matches the documented golden form") {
  RunResult r = run("dist --family one-component --n 2 --format csv");
  CHECK_EQ(r.exit_code, 0);
  CHECK_EQ(r.out, "k,probability_num,probability_den\n0,3,6\n1,2,6\n2,1,6\n");
}

TEST_CASE("distribution csv parses back to rationals summing to one") {
  RunResult r = run("dist --family dup --n 4 --format csv");
  CHECK_EQ(r.exit_code, 0);
  galled::Rational sum(0);
  std::size_t pos = r.out.find('\n') + 1;  // skip header
  while (pos < r.out.size()) {
    std::size_t eol = r.out.find('\n', pos);
    std::string line = r.out.substr(pos, eol - pos);
    pos = eol + 1;
    auto c1 = line.find(','), c2 = line.rfind(',');
    galled::Integer num(line.substr(c1 + 1, c2 - c1 - 1));
    galled::Integer den(line.substr(c2 + 1));
    sum += galled::Rational(num) / galled::Rational(den);
  }
  CHECK_EQ(sum, galled::Rational(1));
}

TEST_CASE("distribution json round trip") {
  RunResult r = run("dist --family galled --n 4 --format json");
  CHECK_EQ(r.exit_code, 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK_EQ(doc["n"], 4);
  CHECK_EQ(doc["family"], "galled");
  CHECK_EQ(doc["total"], "20502");
  galled::Integer total(0);
  for (const auto& cell : doc["cells"]) {
    CHECK(cell.contains("k"));
    CHECK(cell.contains("j"));
    total += galled::Integer(cell["count"].get<std::string>());
  }
  CHECK_EQ(total, galled::Integer("20502"));
}

TEST_CASE("limit pmf value") {
  RunResult r = run("limit-pmf --j 0 --k 0");
  CHECK_EQ(r.exit_code, 0);
  CHECK_EQ(r.out, "0.416862\n");
}

TEST_CASE("asympt output shape") {
  RunResult r = run("asympt --family one-component --n 7");
  CHECK_EQ(r.exit_code, 0);
  CHECK(r.out.find("ln_exact 25.127437\n") != std::string::npos);
  CHECK(r.out.find("ln_asym ") != std::string::npos);
  CHECK(r.out.find("gap 0.064") != std::string::npos);
}

TEST_CASE("help exits 0") {
  CHECK_EQ(run("--help").exit_code, 0);
  CHECK_EQ(run("galled --help").exit_code, 0);
}

TEST_CASE("report emits one row per n") {
  RunResult r = run("report --ns 4,6");
  CHECK_EQ(r.exit_code, 0);
  CHECK(r.out.rfind("n,tv_zn_poisson,tv_joint_limit,", 0) == 0);
  CHECK(r.out.find("\n4,") != std::string::npos);
  CHECK(r.out.find("\n6,") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK_EQ(run("galled").exit_code, 2);
  CHECK_EQ(run("nonsense").exit_code, 2);
  CHECK_EQ(run("dist --family unknown --n 3 --format csv").exit_code, 2);
  CHECK_EQ(run("dist --family dup --n 3 --format yaml").exit_code, 2);
}

TEST_CASE("resource guards exit 3") {
  CHECK_EQ(run("galled --n 61 --joint").exit_code, 3);
  CHECK_EQ(run("dist --family galled --n 61").exit_code, 3);
}

TEST_CASE("reticulation table output is deterministic") {
  RunResult a = run("galled --n 5 --joint");
  RunResult b = run("galled --n 5 --joint");
  CHECK_EQ(a.exit_code, 0);
  CHECK_EQ(a.out, b.out);
  CHECK(a.out.rfind("k,j,count\n", 0) == 0);
}

TEST_CASE("check suites run clean") {
  CHECK_EQ(run("check --suite tables --max-n 9").exit_code, 0);
  CHECK_EQ(run("check --suite oracle --max-n 4").exit_code, 0);
  CHECK_EQ(run("check --suite conjecture --max-n 6").exit_code, 0);
}

TEST_CASE("cache file round trip through the CLI") {
  std::string path =
      (std::filesystem::temp_directory_path() / "galled_census_cli_cache.json").string();
  std::remove(path.c_str());
  RunResult first = run("--cache " + path + " one-component --n 9");
  CHECK_EQ(first.exit_code, 0);
  CHECK(std::filesystem::exists(path));
  RunResult second = run("--cache " + path + " one-component --n 9");
  CHECK_EQ(second.exit_code, 0);
  CHECK_EQ(first.out, second.out);
  std::remove(path.c_str());
}
